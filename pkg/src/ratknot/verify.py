"""Check suites: census against published counts, series against census,
lens formulas against brute force, monoid orbits against the fibered census.

Each suite returns a list of Check records; nothing here raises on a
mismatch.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .census import CensusFilter, CensusReport, census, census_u1_by_determinant
from . import lens
from . import matrix_monoid as mm
from . import series
from .reference import TABLE1


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        return f"{'PASS' if self.passed else 'FAIL'}  {self.name}" + (f"  ({self.detail})" if self.detail else "")


@lru_cache(maxsize=None)
def _census(n: int, pairs_twice: bool = False) -> CensusReport:
    return census(n, CensusFilter(count_chiral_pairs_twice=pairs_twice))


def table1_row(row: str, n: int) -> int | None:
    """The census value for one entry of the published table (None if the row skips n)."""
    if n not in TABLE1[row]:
        return None
    if row == "sigma0":
        return _census(n, True).flag_counts["sigma0"]
    key = {"f": "fibered", "fa": "fibered+achiral", "u": "u1", "au": "achiral+u1",
           "fu": "fibered+u1", "p": "positive"}[row]
    return _census(n).flag_counts[key]


def _compare(name: str, got: dict, want: dict) -> Check:
    bad = [n for n in sorted(want) if got.get(n) != want[n]]
    if bad:
        n = bad[0]
        return Check(name, False, f"first mismatch n={n}: got {got.get(n)}, expected {want[n]}")
    lo, hi = min(want), max(want)
    return Check(name, True, f"n={lo}..{hi}")


def suite_table1(max_n: int = 18, sigma0_max_n: int = 16) -> list[Check]:
    out = []
    for row in TABLE1:
        top = min(max_n, sigma0_max_n) if row == "sigma0" else max_n
        want = {n: v for n, v in TABLE1[row].items() if n <= top}
        got = {n: table1_row(row, n) for n in want}
        out.append(_compare(f"table1 {row}", got, want))
    return out


def fibonacci(k: int) -> int:
    a, b = 1, 1
    for _ in range(k):
        a, b = b, a + b
    return a


def suite_fibonacci(max_n: int = 18) -> list[Check]:
    """fa(n) = F(n/2 - 2) for even n, fu(n) = 2 F(floor(n/2) - 3) for n >= 6 (F0 = F1 = 1)."""
    fa_want = {n: fibonacci(n // 2 - 2) for n in range(4, 27, 2)}
    fu_want = {n: 2 * fibonacci(n // 2 - 3) for n in range(6, 27)}
    out = [
        _compare("fibonacci fa table", TABLE1["fa"], fa_want),
        _compare("fibonacci fu table", {n: TABLE1["fu"][n] for n in fu_want}, fu_want),
    ]
    out.append(_compare(
        "fibonacci fa census",
        {n: table1_row("fa", n) for n in fa_want if n <= max_n},
        {n: v for n, v in fa_want.items() if n <= max_n}))
    out.append(_compare(
        "fibonacci fu census",
        {n: table1_row("fu", n) for n in fu_want if n <= max_n},
        {n: v for n, v in fu_want.items() if n <= max_n}))
    return out


def _gf_row(name: str, max_n: int) -> dict:
    coeffs = series.univariate(name, max_n)
    return {n: coeffs[n] for n in range(3, max_n + 1)}


def suite_series(max_n: int = 18) -> list[Check]:
    ns = range(3, max_n + 1)
    reports = {n: _census(n) for n in ns}
    out = []
    for gf, key in (("fibered", "fibered"), ("positive", "positive"), ("u1", "u1")):
        out.append(_compare(f"series {gf}", _gf_row(gf, max_n),
                            {n: reports[n].flag_counts[key] for n in ns}))
    out.append(_compare(
        "series non_counterexample", _gf_row("non_counterexample", max_n),
        {n: reports[n].flag_counts["u1"] - reports[n].flag_counts["bleiler_counterexample"]
         for n in ns}))
    genus = series.expand("genus", max_n)
    got = {(n, g): c for (n, _, g), c in genus.coeffs.items() if n >= 3}
    want = {(n, g): c for n in ns for g, c in reports[n].by_genus.items()}
    out.append(Check("series genus f(x,z)", got == want,
                     "" if got == want else f"{len(set(got.items()) ^ set(want.items()))} terms differ"))
    g1 = series.build_G1(max_n).x_coefficients()
    out.append(_compare("series G1(x,1,1)", {n: g1[n] for n in ns},
                        {n: _census(n, True).total for n in ns}))
    closed = series.expand("G1_closed", max_n)
    out.append(Check("series G1 pipeline = closed form", closed == series.build_G1(max_n)))
    return out


def suite_lens(max_p: int = 2000, u1_max_p: int = 10 ** 4) -> list[Check]:
    bad = [p for p in range(3, max_p + 1, 2) for o in (False, True)
           if lens.lens_count(p, o) != lens.lens_count_brute(p, o)]
    out = [Check("lens count vs orbit count", not bad,
                 f"odd p <= {max_p}" if not bad else f"first bad p={bad[0]}")]
    bad = [p for p in range(5, u1_max_p + 1, 2) for o in (False, True)
           if lens.u1_lens_count(p, o) != census_u1_by_determinant(p, oriented=o)]
    out.append(Check("lens u1 count vs census", not bad,
                     f"odd 5 <= p <= {u1_max_p}" if not bad else f"first bad p={bad[0]}"))
    ok = all(lens.p_seq(s) == lens.p_closed(s) and lens.q_seq(s) == lens.q_closed(s)
             for s in range(51))
    out.append(Check("lens p_s, q_s recursion = closed form", ok, "s <= 50"))
    a, b = lens.duplication_determinants(6)
    ok = sorted(a + b) == [lens.p_seq(s) for s in range(12)]
    out.append(Check("lens duplication determinants = p_s", ok, "k <= 6"))
    ok = lens.achiral_series_determinants(5) == [lens.q_seq(s) for s in range(6)]
    out.append(Check("lens achiral series determinants = q_s", ok, "k <= 5"))
    return out


def suite_monoid() -> list[Check]:
    r = mm.verify_M1_1(4)
    out = [Check("monoid M1_1 g<=4", r["equal"], f"{r['orbit_size']} vectors")]
    r = mm.verify_cnj1(9)
    out.append(Check("monoid cnj1 length<=9", not r["violations"], f"{r['vectors_explored']} vectors"))
    r = mm.verify_closure(6)
    out.append(Check("monoid closure q -> +-1/q", not r["violations"]))
    return out


SUITES = {
    "table1": lambda max_n: suite_table1(max_n),
    "fibonacci": lambda max_n: suite_fibonacci(max_n),
    "series": lambda max_n: suite_series(max_n),
    "lens": lambda max_n: suite_lens(),
    "monoid": lambda max_n: suite_monoid(),
}


def run(suite: str, max_n: int = 18) -> list[Check]:
    if suite == "all":
        return [c for name in SUITES for c in SUITES[name](max_n)]
    return SUITES[suite](max_n)
