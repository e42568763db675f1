# Closed forms, expanded exactly, and the signature pipeline.
#
# Every count in the census has a rational generating function.  Expanding
# them gives the same numbers without enumerating anything, which is how the
# large-n statistics below are obtained.

import math
import time

from ratknot.census import count_up_to_mirror, sum_abs_signature
from ratknot.series import build_G1, diagonal_sigma0, mean_statistics, signature_series, univariate

for name in ("fibonacci", "fibered", "u1", "positive", "non_counterexample"):
    print(f"{name:20}", univariate(name, 16)[3:])

# G1 counts knots by (crossings, 2g, 2g + sigma); its diagonal is sigma = 0
g1 = build_G1(26)
print()
print("sigma = 0, both mirrors:", diagonal_sigma0(g1)[4:])

# asymptotics
print()
n = 30
print(f"total({n}) / (2^(n-3)/3) = {count_up_to_mirror(n) / (2 ** (n - 3) / 3):.4f}")
rows = mean_statistics(200)
print(f"mean genus(200) / 50 = {float(rows[200]['mean_genus']) / 50:.4f}")
print(f"mean |sigma|(200) / sqrt(400/pi) = "
      f"{float(rows[200]['mean_abs_signature']) / math.sqrt(400 / math.pi):.4f}")
s0 = signature_series(100)["G1"].coeff(100, 0, 0)
print(f"sigma0(100) / (2^99 / (3 sqrt(200 pi))) = {s0 / (2 ** 99 / (3 * math.sqrt(200 * math.pi))):.4f}")

t0 = time.perf_counter()
v = sum_abs_signature(1000)
print()
print(f"sum of |sigma| over 1000-crossing knots: {v:.3e}  ({len(str(v))} digits, "
      f"{time.perf_counter() - t0:.1f} s)")
