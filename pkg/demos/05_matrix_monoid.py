# Orbits of (1, 0) under products of the matrices M_{k,l}.
#
# With k, l in {-1, 1} the orbit at depth g is exactly the set of (p, q),
# q even, with S(p, q) fibered of genus <= g.  The other checks ask which
# products can land on a u1 vector (2mn +- 1, 2n^2).

from ratknot.matrix_monoid import UNITS, m_kl, orbit, verify_cnj1, verify_M1_1, verify_pppp

print("M_{1,1} =", m_kl(1, 1).rows(), "  M_{-1,1} =", m_kl(-1, 1).rows())
for node in orbit(UNITS, 2):
    print(" ", node.depth, node.vector, node.word)

rep = verify_M1_1(5)
print()
print("orbit to depth 5 = fibered pairs of genus <= 5:", rep["equal"], rep["vectors_by_depth"])

rep = verify_cnj1(11)
print("cnj1 to length 11: violations", rep["violations"], " non-coprime odd hits", rep["non_coprime_odd_hits"])

rep = verify_pppp(3, 2000)
print("pppp depth 3, p <= 2000: violations", rep["violations"],
      f" ({rep['vectors_explored']} vectors, {rep['twist_knot_vectors']} twist knots)")
print("  taken literally, M_{k,l} with l < 0 does hit the form, e.g.", rep["literal_matrix_hits"][0])
