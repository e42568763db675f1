"""Command line front end: ratknot {knot,census,series,lens,monoid,verify}.

Exit codes: 0 ok, 1 verification failure, 2 usage error, 3 invalid knot data.
Results go to stdout (JSON unless noted); progress goes to stderr.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from fractions import Fraction

from . import __version__
from .fraction_core import KnotDataError, is_even_word, is_positive_word, parse_pair, parse_word

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_DOMAIN = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _json(obj) -> str:
    def default(o):
        if isinstance(o, Fraction):
            return str(o)
        if isinstance(o, (set, frozenset, tuple)):
            return list(o)
        raise TypeError(type(o).__name__)

    return json.dumps(obj, default=default, indent=2, sort_keys=False)


def _flags(text: str | None) -> list[str]:
    return [t for t in (text or "").split(",") if t]


def _threads(args) -> int:
    from .census import default_threads

    return args.threads if args.threads else default_threads()


# ---------------------------------------------------------------------------
# knot


def cmd_knot(args) -> int:
    from .invariants import classify_u1_even_form, invariants_of_pair, invariants_of_word, unknotting_switches

    if (args.pair is None) == (args.word is None):
        raise UsageError("give either p/q or --word")
    if args.pair is not None:
        try:
            p, q = parse_pair(args.pair)
        except ValueError as e:
            raise UsageError(str(e))
        inv = invariants_of_pair(p, q)
    else:
        try:
            word = parse_word(args.word)
        except ValueError as e:
            raise UsageError(str(e))
        if args.form == "even" and not is_even_word(word):
            raise KnotDataError(f"{args.word} is not an even word")
        if args.form == "positive" and not is_positive_word(word):
            raise KnotDataError(f"{args.word} is not a positive word")
        inv = invariants_of_word(word)
    out = inv.to_dict()
    out["u1_even_form"] = classify_u1_even_form(inv.even_word)
    out["unknotting_switches"] = unknotting_switches(inv.positive_word)
    print(_json(out))
    return EXIT_OK


# ---------------------------------------------------------------------------
# census


def cmd_census(args) -> int:
    from .census import CensusFilter, STANDARD_COMBOS, census

    try:
        filt = CensusFilter(_flags(args.require), _flags(args.forbid), args.pairs_twice)
    except ValueError as e:
        raise UsageError(str(e))
    if args.max_n is not None:
        lo = args.n if args.n is not None else 3
        ns = range(lo, args.max_n + 1)
    elif args.n is not None:
        ns = [args.n]
    else:
        raise UsageError("give --n or --max-n")
    if min(ns, default=3) < 3:
        raise UsageError("crossing number must be at least 3")
    threads = _threads(args)
    reports = []
    for n in ns:
        reports.append(census(n, filt, threads=threads))
        if not args.quiet:
            print(f"census n={n}: {reports[-1].total}", file=sys.stderr)
    fmt = args.format or ("csv" if len(reports) > 1 else "json")
    if fmt == "json":
        data = [r.to_dict() for r in reports]
        print(_json(data[0] if len(data) == 1 else data))
    else:
        w = csv.writer(sys.stdout, lineterminator="\n")
        combos = list(STANDARD_COMBOS)
        w.writerow(["n", "total"] + combos + ["mean_genus", "mean_abs_signature"])
        for r in reports:
            w.writerow([r.n, r.total] + [r.flag_counts.get(c, 0) for c in combos]
                       + [str(r.mean_genus), str(r.mean_abs_signature)])
    return EXIT_OK


# ---------------------------------------------------------------------------
# series


def _terms(s) -> list:
    return [[i, j, k, str(c)] for (i, j, k), c in sorted(s.coeffs.items())]


def _print_series(name: str, s, fmt: str) -> None:
    univariate = all(j == 0 and k == 0 for (_, j, k) in s.coeffs)
    if univariate:
        coeffs = s.x_coefficients()
        start = next((i for i, c in enumerate(coeffs) if c), 0)
        if fmt == "list":
            print(",".join(str(c) for c in coeffs[start:]))
        elif fmt == "dump":
            print("\n".join(s.dump()))
        else:
            print(_json({"series": name, "order": s.order, "start": start,
                         "coefficients": [str(c) if isinstance(c, Fraction) else c
                                          for c in coeffs[start:]]}))
        return
    if fmt == "dump":
        print("\n".join(s.dump()))
    elif fmt == "list":
        raise UsageError("--format list needs a series in x only")
    else:
        print(_json({"series": name, "order": s.order, "variables": ["x", "y", "z"],
                     "terms": _terms(s)}))


def cmd_series(args) -> int:
    from . import series
    from .gf_catalog import CATALOG

    if args.order < 0:
        raise UsageError("--order must be non-negative")
    fmt = args.format or "json"
    if args.gf:
        if args.gf not in CATALOG:
            raise UsageError(f"unknown series {args.gf!r}; known: {', '.join(sorted(CATALOG))}")
        _print_series(args.gf, series.expand(args.gf, args.order), fmt)
        return EXIT_OK
    if args.pipeline is None:
        raise UsageError("give --gf NAME or --pipeline")
    if args.order < 3:
        raise UsageError("the pipeline needs --order >= 3")
    if args.pipeline == "g1":
        _print_series("G1", series.build_G1(args.order), fmt)
    elif args.pipeline == "j":
        parts = series.g1_parts(args.order)
        _print_series("J", series.select_J(parts["G1"], F3=parts["F3"]), fmt)
    elif args.pipeline == "f0":
        f0 = series.diagonal_sigma0(series.build_G1(args.order))
        _print_series("f0", series.TruncatedSeries.from_list(f0), fmt)
    elif args.pipeline == "abs_sigma":
        vals = series.sum_abs_signature_series(args.order)
        _print_series("sum_abs_signature", series.TruncatedSeries.from_list(vals), fmt)
    elif args.pipeline == "means":
        rows = [r for r in series.mean_statistics(args.order) if r]
        print(_json(rows))
    return EXIT_OK


# ---------------------------------------------------------------------------
# lens


def cmd_lens(args) -> int:
    from . import lens

    if args.p is not None:
        try:
            row = lens.lens_row(args.p)
        except ValueError as e:
            raise KnotDataError(str(e))
        print(_json(row.to_dict()))
    elif args.sweep is not None:
        rows = lens.lens_table(args.sweep, threads=_threads(args))
        if not args.quiet:
            print(f"lens sweep: {len(rows)} rows", file=sys.stderr)
        if (args.format or "csv") == "json":
            print(_json([r.to_dict() for r in rows]))
        else:
            w = csv.writer(sys.stdout, lineterminator="\n")
            w.writerow(lens.FIELDS)
            for r in rows:
                w.writerow([getattr(r, f) if not isinstance(getattr(r, f), bool)
                            else int(getattr(r, f)) for f in lens.FIELDS])
    elif args.sn_search is not None:
        print(_json({"max_s": args.sn_search, "solutions": lens.sn_search(args.sn_search)}))
    elif args.elliptic is not None:
        print(_json({"bound": args.elliptic, "points": lens.elliptic_points(args.elliptic)}))
    else:
        raise UsageError("give --p, --sweep, --sn-search or --elliptic")
    return EXIT_OK


# ---------------------------------------------------------------------------
# monoid


def cmd_monoid(args) -> int:
    from . import matrix_monoid as mm

    d = args.depth
    if args.prop == "pppp":
        rep = mm.verify_pppp(d if d is not None else 4, args.p_max or 10 ** 4)
    elif args.prop == "cnj1":
        rep = mm.verify_cnj1(d if d is not None else 12)
    elif args.prop == "m1_1":
        rep = mm.verify_M1_1(d if d is not None else 5)
    elif args.prop == "k_pos":
        rep = mm.verify_k_pos(d if d is not None else 3, args.p_max or 2000)
    else:
        rep = mm.verify_closure(d if d is not None else 6)
    print(_json(rep))
    failed = bool(rep["violations"]) or rep.get("equal") is False
    return EXIT_FAIL if failed else EXIT_OK


# ---------------------------------------------------------------------------
# verify


def cmd_verify(args) -> int:
    from .verify import run

    checks = run(args.suite, args.max_n)
    for c in checks:
        print(c.line())
    ok = all(c.passed for c in checks)
    print(f"{'PASS' if ok else 'FAIL'}  {sum(c.passed for c in checks)}/{len(checks)} checks")
    return EXIT_OK if ok else EXIT_FAIL


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="ratknot", description="Rational knots from continued fractions.")
    ap.add_argument("--version", action="version", version=f"ratknot {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    k = sub.add_parser("knot", help="invariants of one knot")
    k.add_argument("pair", nargs="?", help="Schubert pair p/q")
    k.add_argument("--word", help="Conway word, comma separated (use --word=-2,2 for a leading minus)")
    k.add_argument("--form", choices=("even", "positive", "any"), default="any")
    k.set_defaults(func=cmd_knot)

    c = sub.add_parser("census", help="count knots by crossing number")
    c.add_argument("--n", type=int)
    c.add_argument("--max-n", type=int, help="sweep from --n (default 3) to this value")
    c.add_argument("--require", help="comma separated flags")
    c.add_argument("--forbid", help="comma separated flags")
    c.add_argument("--pairs-twice", action="store_true", help="count both knots of a chiral pair")
    c.add_argument("--format", choices=("json", "csv"))
    c.add_argument("--threads", type=int)
    c.add_argument("--quiet", action="store_true")
    c.set_defaults(func=cmd_census)

    s = sub.add_parser("series", help="expand generating functions")
    s.add_argument("--gf", help="catalog name")
    s.add_argument("--pipeline", choices=("g1", "j", "f0", "abs_sigma", "means"))
    s.add_argument("--order", type=int, required=True)
    s.add_argument("--format", choices=("json", "list", "dump"))
    s.set_defaults(func=cmd_series)

    l = sub.add_parser("lens", help="lens space counts")
    l.add_argument("--p", type=int)
    l.add_argument("--sweep", type=int, metavar="MAX")
    l.add_argument("--sn-search", type=int, metavar="MAX_S")
    l.add_argument("--elliptic", type=int, metavar="BOUND")
    l.add_argument("--format", choices=("json", "csv"))
    l.add_argument("--threads", type=int)
    l.add_argument("--quiet", action="store_true")
    l.set_defaults(func=cmd_lens)

    m = sub.add_parser("monoid", help="matrix monoid orbit checks")
    m.add_argument("--prop", choices=("pppp", "cnj1", "m1_1", "k_pos", "closure"), required=True)
    m.add_argument("--depth", type=int)
    m.add_argument("--p-max", type=int)
    m.set_defaults(func=cmd_monoid)

    v = sub.add_parser("verify", help="run check suites")
    v.add_argument("--suite", choices=("table1", "fibonacci", "series", "lens", "monoid", "all"),
                   default="all")
    v.add_argument("--max-n", type=int, default=18)
    v.set_defaults(func=cmd_verify)
    return ap


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except UsageError as e:
        print(f"ratknot: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except KnotDataError as e:
        print(f"ratknot: invalid knot data: {e}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
