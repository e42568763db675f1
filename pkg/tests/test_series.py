from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from ratknot.census import count_up_to_mirror, sum_abs_signature, u1_knots_by_crossing
from ratknot.gf_catalog import CATALOG
from ratknot.invariants import maxcf_alexander
from ratknot.series import (
    RationalGF,
    TruncatedSeries,
    build_G1,
    diagonal_sigma0,
    expand,
    g1_parts,
    gf_catalog,
    hadamard,
    mean_statistics,
    select_J,
    signature_series,
    sum_abs_signature_series,
    univariate,
)

from oracles import brute_census, brute_row

ORDER = 6
coeff = st.integers(-5, 5) | st.fractions(max_denominator=4).filter(lambda f: abs(f) < 5)
mono = st.tuples(st.integers(0, ORDER), st.integers(0, 3), st.integers(-2, 3))
series = st.dictionaries(mono, coeff, max_size=8).map(lambda d: TruncatedSeries(d, ORDER))


@given(series, series, series)
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert a - a == TruncatedSeries.zero(ORDER)
    assert a * TruncatedSeries.constant(1, ORDER) == a


@given(series)
def test_truncation_is_respected(a):
    sq = a * a
    assert all(i <= ORDER for (i, _, _) in sq.coeffs)
    assert all(c != 0 for c in sq.coeffs.values())


@pytest.mark.parametrize("name", sorted(CATALOG))
def test_expansion_times_denominator_is_numerator(name):
    gf = gf_catalog(name)
    order = 14
    s = gf.expand(order)
    den = TruncatedSeries(gf.den, order)
    num = TruncatedSeries(gf.num, order)
    assert s * den == num


def test_expand_examples():
    assert univariate("fibonacci", 7) == [1, 1, 2, 3, 5, 8, 13, 21]
    assert univariate("u1", 10)[3:] == [1, 1, 1, 3, 3, 6, 7, 15]
    assert univariate("positive", 9)[3:] == [1, 0, 2, 0, 5, 0, 12]
    assert univariate("fibered", 8)[8] == 4
    assert univariate("p_s", 5) == [29, 169, 985, 5741, 33461, 195025]
    assert univariate("q_s", 3) == [65, 901, 12545, 174725]


def test_bad_gf():
    with pytest.raises(KeyError):
        gf_catalog("nope")
    with pytest.raises(ZeroDivisionError):
        RationalGF.from_expr("1/x").expand(3)


def test_catalog_identities():
    n = 30
    u = lambda name: univariate(name, n)
    f1, f2 = u("f1"), u("f2")
    fib = u("fibered")
    for i in range(2, n + 1):
        assert fib[i] == Fraction(f1[i - 2] + f2[i - 2], 2)
    assert u("u1") == u("u1_split")
    parts = [u(k) for k in ("u1_twist", "u1_form1", "u1_form2")]
    dup = u("u1_duplication")
    assert u("u1") == [a + b + c - d for a, b, c, d in zip(*parts, dup)]
    assert u("positive") == u("positive_compositions")


def test_genus_identities():
    order = 20
    f = expand("genus", order)
    g = expand("genus_g", order)
    h1 = expand("genus_h1", order)
    assert f == (g + h1).half()
    # genus distribution against the census oracle
    census = brute_census(14)
    for n in range(3, 15):
        for genus in range(1, n):
            want = sum(1 for k in census[n] if k["genus"] == genus)
            assert f.coeff(n, 0, genus) == want


def test_braid_at_one_counts_all_knots():
    order = 20
    braid = univariate("braid", order)
    genus = univariate("genus", order)
    assert braid == genus
    assert genus[3:] == [count_up_to_mirror(n) for n in range(3, order + 1)]


def test_hadamard_examples():
    order = 10
    geo = expand(RationalGF.from_expr("1/(1 - x)"), order)
    two = expand(RationalGF.from_expr("1/(1 - 2*x)"), order)
    assert hadamard(geo, two) == two
    fib = expand("fibonacci", order)
    assert hadamard(fib, geo) == fib
    assert hadamard(fib, fib).x_coefficients()[:6] == [1, 1, 4, 9, 25, 64]


# -- signature pipeline --------------------------------------------------------


@pytest.fixture(scope="module")
def parts():
    return g1_parts(18)


def test_G1_examples(parts):
    g1 = parts["G1"]
    assert g1.coeff(4, 2, 2) == 1
    assert g1.coeff(3, 2, 4) + g1.coeff(3, 2, 0) == 2
    assert g1.coeff(3, 2, 4) == 1 and g1.coeff(3, 2, 0) == 1


def test_G1_matches_closed_form(parts):
    assert parts["G1"] == expand("G1_closed", 18)


def test_G1_is_integral_with_bounded_support(parts):
    g1 = parts["G1"]
    assert g1.is_integral()
    for (i, l, k), c in g1.coeffs.items():
        assert 0 <= k <= 2 * l
        # mirror symmetry: (y, z) -> (y z^2, 1/z)
        assert g1.coeff(i, l, 2 * l - k) == c


def test_G1_counts_against_census(parts):
    g1 = parts["G1"]
    census = brute_census(14)
    for n in range(3, 15):
        totals = sum(c for (i, _, _), c in g1.coeffs.items() if i == n)
        assert totals == brute_row(n, lambda k: True, pairs_twice=True)
        for k in census[n]:
            g, s = k["genus"], k["sigma"]
            want = brute_row(n, lambda o: o["genus"] == g and abs(o["sigma"]) == abs(s), True)
            got = g1.coeff(n, 2 * g, 2 * g + s) + (g1.coeff(n, 2 * g, 2 * g - s) if s else 0)
            assert got == want


def test_G1_remark_identities():
    order = 25
    g1 = build_G1(order)
    # G1(x, y, 1) = 2 f(x, y^2) - (h1(-x, y^2) + h1(x, y^2)) / 2
    at_one = g1.map_monomials(lambda i, j, k: (1, (i, j, 0)))
    f = expand("genus", order).map_monomials(lambda i, j, k: (1, (i, 2 * k, 0)))
    h1 = expand("genus_h1", order).map_monomials(lambda i, j, k: (1, (i, 2 * k, 0)))
    h1m = h1.map_monomials(lambda i, j, k: ((-1) ** i, (i, j, k)))
    assert at_one == f + f - (h1 + h1m).half()
    # G1(x, 1, 0) is the positive knot series
    at_zero = [0] * (order + 1)
    for (i, _, k), c in g1.coeffs.items():
        if k == 0:
            at_zero[i] += c
    assert at_zero == univariate("positive", order)


def test_select_J(parts):
    j = select_J(parts["G1"], F3=parts["F3"])
    assert j.coeff(3, 2, 2) == 1
    assert j.coeff(4, 2, 0) == 1
    census = brute_census(14)
    for n in range(3, 15):
        total = sum(c for (i, _, _), c in j.coeffs.items() if i == n)
        assert total == len(census[n])
        sig0 = sum(c for (i, _, k), c in j.coeffs.items() if i == n and k == 0)
        assert sig0 == brute_row(n, lambda k: k["sigma"] == 0)
        abs_sum = sum(k * c for (i, _, k), c in j.coeffs.items() if i == n)
        assert abs_sum == sum(abs(k["sigma"]) for k in census[n])


def test_diagonal_sigma0(parts):
    f0 = diagonal_sigma0(parts["G1"])
    assert f0[:11] == [0, 0, 0, 0, 1, 0, 3, 2, 9, 6, 29]
    assert f0[13] == 112
    assert diagonal_sigma0(build_G1(16))[16] == 1275


def test_reduced_pipeline_agrees_with_full(parts):
    red = signature_series(18)
    g1 = parts["G1"]
    want = g1.map_monomials(lambda i, l, k: (1, (i, 0, k - l)))
    assert red["G1"] == want
    sums = sum_abs_signature_series(40)
    for n in range(3, 41):
        assert sums[n] == sum_abs_signature(n)


def test_mean_statistics():
    rows = mean_statistics(16)
    assert rows[0] is None and rows[2] is None
    census = brute_census(14)
    for n in range(3, 15):
        ks = census[n]
        assert rows[n]["count"] == len(ks)
        assert rows[n]["mean_genus"] == Fraction(sum(k["genus"] for k in ks), len(ks))
        assert rows[n]["mean_abs_signature"] == Fraction(sum(abs(k["sigma"]) for k in ks), len(ks))


# -- Fibonacci counts ----------------------------------------------------------


def fib(k):
    """F_0 = F_1 = 1; zero for negative k."""
    if k < 0:
        return 0
    a, b = 1, 1
    for _ in range(k):
        a, b = b, a + b
    return a


def test_fibonacci_rows_against_series():
    fibs = univariate("fibonacci", 20)
    assert all(fib(k) == fibs[k] for k in range(21))
    for n in range(4, 15, 2):
        assert brute_row(n, lambda k: k["fibered"] and k["achiral"]) == fib(n // 2 - 2)
    for n in range(6, 15):
        assert brute_row(n, lambda k: k["fibered"] and k["u1"]) == 2 * fib(n // 2 - 3)


def square_free_count(n, p):
    total = fib(n // 2 - 2 - p)
    r = 1
    while r * (r + 1) <= p:
        if p % (r * (r + 1)) == 0:
            total += fib((n - 2 - 4 * r - 2 * (p // (r + r * r))) // 2)
        r += 1
    total *= 2
    if (n, p) == (8, 2):
        total -= 1
    if n in (1 + 2 * p, 2 + 2 * p):
        total += 1
    return total


def test_square_free_maxcf_counts():
    knots = u1_knots_by_crossing(24)
    for n in range(6, 25):
        counts = {}
        for w in knots.get(n, []):
            m = maxcf_alexander(w)
            counts[m] = counts.get(m, 0) + 1
        for p in (1, 2, 3, 5, 6):
            assert counts.get(p, 0) == square_free_count(n, p), (n, p)
