"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line."""

import math
import time

import pytest

from ratknot.census import (
    CensusFilter,
    census,
    census_u1_by_determinant,
    count_up_to_mirror,
    enumerate_even_words,
    sum_abs_signature,
    u1_knots_by_crossing,
)
from ratknot.fraction_core import even_to_positive, word_fraction
from ratknot.invariants import is_bleiler_counterexample, is_u1, maxcf_alexander, unknotting_switches
from ratknot.lens import (
    achiral_series_determinants,
    duplication_determinants,
    elliptic_points,
    lens_count,
    lens_count_brute,
    p_seq,
    q_seq,
    sn_search,
    u1_lens_count,
)
from ratknot.matrix_monoid import verify_cnj1, verify_M1_1, verify_pppp
from ratknot.reference import TABLE1
from ratknot.series import (
    build_G1,
    diagonal_sigma0,
    expand,
    mean_statistics,
    signature_series,
    sum_abs_signature_series,
    univariate,
)
from ratknot.verify import table1_row


@pytest.fixture
def report(capsys, request):
    """Print one PASS/FAIL line for the criterion, outside output capture."""
    state = {"detail": ""}
    yield state
    failed = request.node.rep_call.failed if hasattr(request.node, "rep_call") else True
    with capsys.disabled():
        print(f"\n{'FAIL' if failed else 'PASS'}  criterion {state['id']}: {state['name']}"
              + (f"  [{state['detail']}]" if state["detail"] else ""))


def fib(k):
    """F_0 = F_1 = 1; zero for negative k."""
    if k < 0:
        return 0
    a, b = 1, 1
    for _ in range(k):
        a, b = b, a + b
    return a


def first_mismatch(got, want):
    bad = [n for n in sorted(want) if got.get(n) != want[n]]
    return None if not bad else (bad[0], got.get(bad[0]), want[bad[0]])


def test_01_table_reproduction(report):
    report.update(id=1, name="census reproduces rows f, fa, u, au, fu, p (n <= 20) and sigma0 (n <= 16)")
    t0 = time.perf_counter()
    for row, values in TABLE1.items():
        top = 16 if row == "sigma0" else 20
        want = {n: v for n, v in values.items() if 3 <= n <= top}
        got = {n: table1_row(row, n) for n in want}
        assert first_mismatch(got, want) is None, (row, first_mismatch(got, want))
    elapsed = time.perf_counter() - t0
    assert table1_row("f", 14) == 62 and table1_row("u", 13) == 31
    assert table1_row("sigma0", 13) == 112
    # the published row p reads 1, 2, 5, 12, 30, 76, 195 at n = 3, 5, ..., 15:
    # the value 195 sits in the n = 15 column
    assert table1_row("p", 13) == 76 and table1_row("p", 15) == 195
    report["detail"] = f"{elapsed:.1f} s"
    assert elapsed < 120


def test_02_series_census_agreement(report):
    report.update(id=2, name="generating functions equal census counts, 3 <= n <= 18")
    order = 18
    fibered = univariate("fibered", order)
    positive = univariate("positive", order)
    u1 = univariate("u1", order)
    noncx = univariate("non_counterexample", order)
    genus = expand("genus", order)
    g1 = build_G1(order).x_coefficients()
    for n in range(3, order + 1):
        rep = census(n)
        fc = rep.flag_counts
        assert fibered[n] == fc["fibered"], n
        assert positive[n] == fc["positive"], n
        assert u1[n] == fc["u1"], n
        assert noncx[n] == fc["u1"] - fc["bleiler_counterexample"], n
        for g, c in rep.by_genus.items():
            assert genus.coeff(n, 0, g) == c, (n, g)
        assert sum(genus.coeff(n, 0, g) for g in range(n)) == rep.total
        assert g1[n] == census(n, CensusFilter(count_chiral_pairs_twice=True)).total, n


def test_03_fibonacci_identities(report):
    report.update(id=3, name="fa(n) = F(n/2-2), fu(n) = 2F(floor(n/2)-3), n <= 26")
    for n in range(4, 27, 2):
        assert census(n, CensusFilter({"fibered", "achiral"})).total == fib(n // 2 - 2), n
    for n in range(6, 27):
        assert census(n, CensusFilter({"fibered", "u1"})).total == 2 * fib(n // 2 - 3), n
    assert census(26, CensusFilter({"fibered", "achiral"})).total == 144
    report["detail"] = "fa(26) = 144 = F(11) with F(0) = F(1) = 1"


def test_04_sigma0_series(report):
    report.update(id=4, name="diagonal_sigma0(G1) gives x^4+3x^6+2x^7+9x^8+6x^9+29x^10 and sigma0 to n=26")
    f0 = diagonal_sigma0(build_G1(26))
    assert f0[:11] == [0, 0, 0, 0, 1, 0, 3, 2, 9, 6, 29]
    want = {n: v for n, v in TABLE1["sigma0"].items() if n <= 26}
    assert first_mismatch(dict(enumerate(f0)), want) is None
    assert f0[25] == 395804 and f0[26] == 956385


def test_05_asymptotic_ratios(report):
    report.update(id=5, name="asymptotic ratios of total, mean genus, sigma0 count and mean |sigma|")
    total30 = count_up_to_mirror(30)
    r_total = total30 / (2 ** 27 / 3)
    rows = mean_statistics(200)
    r_genus = float(rows[200]["mean_genus"]) / (200 / 4)
    r_sigma = float(rows[200]["mean_abs_signature"]) / math.sqrt(2 * 200 / math.pi)
    s0 = signature_series(100)["G1"].coeff(100, 0, 0)
    r_s0 = s0 / (2 ** 99 / (3 * math.sqrt(2 * math.pi * 100)))
    report["detail"] = (f"total {r_total:.4f}, genus {r_genus:.4f}, "
                        f"sigma0 {r_s0:.4f}, |sigma| {r_sigma:.4f}")
    assert 0.99 <= r_total <= 1.01
    assert 0.97 <= r_genus <= 1.03
    assert 0.9 <= r_s0 <= 1.1
    assert 0.9 <= r_sigma <= 1.1


def test_06_sum_abs_signature(report):
    report.update(id=6, name="sum of |sigma| at n=1000 is 1.12e301; DP = series (n <= 40) = enumeration (n <= 20)")
    t0 = time.perf_counter()
    v = sum_abs_signature(1000)
    elapsed = time.perf_counter() - t0
    report["detail"] = f"{v:.3e} in {elapsed:.1f} s"
    assert f"{v:.2e}" == "1.12e+301"
    assert elapsed < 600
    series = sum_abs_signature_series(40)
    for n in range(3, 41):
        assert sum_abs_signature(n) == series[n], n
    for n in range(3, 21):
        assert sum_abs_signature(n) == census(n).sum_abs_signature, n


def test_07_lens_counts(report):
    report.update(id=7, name="lens counts, u1 lens counts, p_s / q_s and determinant series")
    for p in range(3, 2001, 2):
        for o in (False, True):
            assert lens_count(p, o) == lens_count_brute(p, o), (p, o)
    for p in range(5, 10 ** 4 + 1, 2):
        assert u1_lens_count(p) == census_u1_by_determinant(p), p
        assert u1_lens_count(p, True) == census_u1_by_determinant(p, True), p
    assert [p_seq(s) for s in range(6)] == [29, 169, 985, 5741, 33461, 195025]
    assert [q_seq(s) for s in range(4)] == [65, 901, 12545, 174725]
    assert q_seq(4) == 2433601
    a, b = duplication_determinants(6)
    assert sorted(a + b) == [p_seq(s) for s in range(12)]
    assert achiral_series_determinants(5) == [q_seq(s) for s in range(6)]


def test_08_sn_search_and_curve(report):
    report.update(id=8, name="no q_s = 2n^2+2n+1 for s <= 10^4; curve points exactly x = +-1, +-3")
    assert sn_search(10 ** 4) == []
    assert elliptic_points(10 ** 6) == [-3, -1, 1, 3]


def test_09_oracle_equivalences(report):
    report.update(id=9, name="u1 <=> unknotting switch; counterexample congruences; achiral u1 pattern")
    checked = 0
    for n in range(3, 19):
        for w in enumerate_even_words(n):
            assert is_u1(word_fraction(w)) == bool(unknotting_switches(even_to_positive(w))), w
            checked += 1
    u1 = u1_knots_by_crossing(26)
    counterexamples = odd_premise = 0
    for n in range(3, 25):
        for w in u1.get(n, []):
            if not is_bleiler_counterexample(word_fraction(w)):
                continue
            counterexamples += 1
            m = maxcf_alexander(w)
            assert m % 2 == 0, w
            if m % 2:
                odd_premise += 1
                g = len(w) // 2
                p = word_fraction(w)[0]
                assert g % 2 == 1
                assert (g % 3 == 0) == (p % 8 in (1, 7))
    for n in range(3, 27):
        achiral = sum(1 for w in u1.get(n, []) if w == w[::-1])
        want = 0 if n % 2 else (2 if n >= 10 and (n - 10) % 6 == 0 else 1)
        assert achiral == want, n
    report["detail"] = (f"{checked} knots; {counterexamples} counterexamples to n=24, "
                        f"{odd_premise} with odd maxcf")


def test_10_matrix_monoid(report):
    report.update(id=10, name="cnj1 to length 12, fibered orbit identity to genus 5, pppp depth 4 with p <= 10^4")
    cnj1 = verify_cnj1(12)
    assert cnj1["violations"] == []
    m11 = verify_M1_1(5)
    assert m11["equal"] and m11["violations"] == []
    t0 = time.perf_counter()
    pppp = verify_pppp(4, 10 ** 4)
    assert pppp["violations"] == []
    report["detail"] = (f"cnj1 {cnj1['vectors_explored']} vectors; orbit {m11['orbit_size']} = census; "
                        f"pppp {pppp['vectors_explored']} vectors in {time.perf_counter() - t0:.0f} s "
                        f"(prepend reading; {pppp['literal_matrix_hit_count']} literal-matrix hits)")
