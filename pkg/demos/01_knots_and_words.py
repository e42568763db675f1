# Rational knots as fractions and as Conway words.
#
# A knot S(p, q) has an even word (all entries even and nonzero) whose
# length is twice the genus, and a positive word whose entries sum to the
# crossing number.  Most invariants are read straight off the even word.

from ratknot import invariants_of_pair, knot_class, unknotting_switches
from ratknot.fraction_core import eval_cf, word_fraction

print("[[2, 2]] =", eval_cf([2, 2]), "  [[2, 0, 3]] =", eval_cf([2, 0, 3]))
print()

names = {(3, 2): "3_1", (5, 2): "4_1", (5, 4): "5_1", (7, 4): "5_2", (9, 2): "6_1", (31, 12): "8_14"}
print(f"{'knot':6} {'p/q':7} {'even word':18} {'positive':16} c  g  sig  fib  u1")
for (p, q), name in names.items():
    inv = invariants_of_pair(p, q)
    print(f"{name:6} {f'{p}/{q}':7} {str(inv.even_word):18} {str(inv.positive_word):16} "
          f"{inv.crossing_number}  {inv.genus}  {inv.signature:3d}  {int(inv.fibered)}    {int(inv.u1)}")

# mirror images: same canonical pair, opposite signature
a, b = knot_class(3, 2), knot_class(3, 1)
print()
print("trefoil and its mirror share", a.canonical, "; is_mirror:", a.is_mirror, b.is_mirror)

# where does one crossing change unknot the alternating diagram?
print()
for w in [(2, 2), (3, 2), (2, 1, 1, 2), (3, 1, 1, 1, 1, 3)]:
    print(f"{str(w):20} p/q = {'/'.join(map(str, word_fraction(w)))}   switches {unknotting_switches(w)}")

# 8_14 has unknotting number one, but no crossing of the even diagram does it
inv = invariants_of_pair(31, 12)
print()
print("S(31,12): u1 =", inv.u1, " counterexample to unknotting in the even diagram =",
      inv.bleiler_counterexample, " maxcf =", inv.maxcf_alexander)
