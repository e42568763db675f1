# Counting rational knots by crossing number.
#
# The census walks canonical even words depth-first.  Each knot is met once
# (mirror images identified) and tagged with its flags; the counts below are
# the reference rows in ratknot.reference.

import time

from ratknot.census import CensusFilter, census
from ratknot.reference import TABLE1
from ratknot.verify import table1_row

t0 = time.perf_counter()
rows = ["f", "fa", "u", "au", "fu", "p", "sigma0"]
print("n   " + "".join(f"{r:>8}" for r in rows) + "   total")
for n in range(3, 19):
    cells = []
    for r in rows:
        v = table1_row(r, n)
        cells.append("" if v is None else str(v))
    total = census(n).total
    print(f"{n:<4}" + "".join(f"{c:>8}" for c in cells) + f"{total:>8}")
print(f"({time.perf_counter() - t0:.1f} s)")

bad = [(r, n) for r in rows for n, v in TABLE1[r].items() if n <= 18 and table1_row(r, n) != v]
print("mismatches against the reference rows:", bad or "none")

# statistics of one crossing number, chiral pairs counted twice
rep = census(12, CensusFilter(count_chiral_pairs_twice=True))
print()
print("n = 12, both mirrors counted:", rep.total, "knots")
print("  by genus:    ", rep.by_genus)
print("  by signature:", rep.by_signature)
print("  mean genus", rep.mean_genus, "= %.4f" % float(rep.mean_genus))
