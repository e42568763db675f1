# Lens spaces L(p, q) and the ones reached by surgery on u1 knots.
#
# The counts are closed formulas in phi, omega and sums of two squares.  The
# exceptional determinants p_s (two u1 knots for one lens space) and q_s
# (achiral ones) come from two explicit word series.

from ratknot.census import census_u1_by_determinant
from ratknot.lens import (
    achiral_series_determinants,
    duplication_determinants,
    elliptic_points,
    lens_count_brute,
    lens_row,
    p_seq,
    q_seq,
    sn_search,
)

print("p   lens  brute  u1  census")
for p in (5, 7, 9, 29, 65, 169, 901):
    row = lens_row(p)
    print(f"{p:<4}{row.unoriented:5}{lens_count_brute(p):7}{row.u1_unoriented:4}"
          f"{census_u1_by_determinant(p):8}   p_s={int(row.is_ps)} N={int(row.in_N)} S={int(row.in_S)}")

print()
print("p_s:", [p_seq(s) for s in range(7)])
a, b = duplication_determinants(3)
print("  duplication words give", sorted(a + b))
print("q_s:", [q_seq(s) for s in range(5)])
print("  achiral series gives  ", achiral_series_determinants(4))

print()
print("q_s = 2n^2 + 2n + 1 for s <= 10^4:", sn_search(10 ** 4) or "no solution")
print("3x^4 + 2x^2 - 5 a square, |x| <= 10^5:", elliptic_points(10 ** 5))
