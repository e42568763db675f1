"""Exact truncated power series in x, y, z and the signature pipeline.

A TruncatedSeries keeps a sparse map (i, j, k) -> coefficient for the
monomial x^i y^j z^k, with i <= order.  Coefficients are Python ints or
Fractions; halves show up in the middle of the signature pipeline and
must cancel at the end.  z (and y) may carry negative exponents: the
substitution z -> 1/z is a re-indexing of monomials, never an inverse.

Rational functions are expanded by the usual coefficient recursion
S_m = (N_m - sum_{i >= 1} D_i S_{m-i}) / D_0, where D_i is the part of the
denominator of x-degree i.  D_0 has to be a nonzero constant.
"""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable

from .gf_catalog import CATALOG

Mono = tuple  # (i, j, k)


def _clean(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def _half(c):
    if isinstance(c, int) and c % 2 == 0:
        return c // 2
    return _clean(Fraction(c) / 2)


class TruncatedSeries:
    """Sparse trivariate series truncated at x-degree `order`."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: dict, order: int):
        self.order = order
        self.coeffs = {m: _clean(c) for m, c in coeffs.items() if c != 0 and m[0] <= order}

    # construction -------------------------------------------------------
    @classmethod
    def zero(cls, order: int) -> "TruncatedSeries":
        return cls({}, order)

    @classmethod
    def constant(cls, c, order: int) -> "TruncatedSeries":
        return cls({(0, 0, 0): c}, order)

    @classmethod
    def from_list(cls, coeffs: Iterable, order: int | None = None) -> "TruncatedSeries":
        coeffs = list(coeffs)
        if order is None:
            order = len(coeffs) - 1
        return cls({(i, 0, 0): c for i, c in enumerate(coeffs)}, order)

    # ring operations ----------------------------------------------------
    def _other(self, other) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            return other
        return TruncatedSeries.constant(other, self.order)

    def __add__(self, other):
        other = self._other(other)
        order = min(self.order, other.order)
        out = defaultdict(int, {m: c for m, c in self.coeffs.items() if m[0] <= order})
        for m, c in other.coeffs.items():
            if m[0] <= order:
                out[m] += c
        return TruncatedSeries(out, order)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries({m: -c for m, c in self.coeffs.items()}, self.order)

    def __sub__(self, other):
        return self + (-self._other(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            return TruncatedSeries({m: c * other for m, c in self.coeffs.items()}, self.order)
        order = min(self.order, other.order)
        by_x = defaultdict(list)
        for (i, j, k), c in other.coeffs.items():
            by_x[i].append((j, k, c))
        out = defaultdict(int)
        for (i, j, k), c in self.coeffs.items():
            for i2 in range(0, order - i + 1):
                for j2, k2, c2 in by_x.get(i2, ()):
                    out[(i + i2, j + j2, k + k2)] += c * c2
        return TruncatedSeries(out, order)

    __rmul__ = __mul__

    def half(self) -> "TruncatedSeries":
        return TruncatedSeries({m: _half(c) for m, c in self.coeffs.items()}, self.order)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        order = min(self.order, other.order)
        a = {m: c for m, c in self.coeffs.items() if m[0] <= order}
        b = {m: c for m, c in other.coeffs.items() if m[0] <= order}
        return a == b

    def __repr__(self) -> str:
        return f"TruncatedSeries(order={self.order}, terms={len(self.coeffs)})"

    # access -------------------------------------------------------------
    def coeff(self, i: int, j: int = 0, k: int = 0):
        return self.coeffs.get((i, j, k), 0)

    def truncate(self, order: int) -> "TruncatedSeries":
        return TruncatedSeries(self.coeffs, min(order, self.order))

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.coeffs.values())

    def x_coefficients(self) -> list:
        """Coefficients of x^0..x^order with y = z = 1."""
        out = [0] * (self.order + 1)
        for (i, _, _), c in self.coeffs.items():
            out[i] += c
        return [_clean(c) for c in out]

    def map_monomials(self, fn: Callable, order: int | None = None) -> "TruncatedSeries":
        """Apply fn(i, j, k) -> (factor, (i', j', k')) or None to every term."""
        order = self.order if order is None else order
        out = defaultdict(int)
        for m, c in self.coeffs.items():
            r = fn(*m)
            if r is None:
                continue
            factor, m2 = r
            if m2[0] <= order:
                out[m2] += factor * c
        return TruncatedSeries(out, order)

    def substitute(self, x=(1, (1, 0, 0)), y=(1, (0, 1, 0)), z=(1, (0, 0, 1)),
                   order: int | None = None) -> "TruncatedSeries":
        """Replace each variable by sign * monomial, e.g. y=(1, (0, 1, 2)) for y*z^2."""
        (sx, ex), (sy, ey), (sz, ez) = x, y, z

        def fn(i, j, k):
            sign = -1 if ((sx < 0) * i + (sy < 0) * j + (sz < 0) * k) % 2 else 1
            return sign, (
                i * ex[0] + j * ey[0] + k * ez[0],
                i * ex[1] + j * ey[1] + k * ez[1],
                i * ex[2] + j * ey[2] + k * ez[2],
            )

        if order is None:
            order = self.order * ex[0] if ex[0] > 0 else self.order
        return self.map_monomials(fn, order)

    def dump(self) -> list[str]:
        """One line 'x^m y^l z^k : c' per monomial, sorted."""
        return [f"x^{i} y^{j} z^{k} : {c}" for (i, j, k), c in sorted(self.coeffs.items())]


def hadamard(s: TruncatedSeries, t: TruncatedSeries) -> TruncatedSeries:
    """Coefficientwise product of two series in x alone."""
    order = min(s.order, t.order)
    out = {}
    for m, c in s.coeffs.items():
        if m in t.coeffs and m[0] <= order:
            out[m] = c * t.coeffs[m]
    return TruncatedSeries(out, order)


# ---------------------------------------------------------------------------
# rational functions


class RationalGF:
    """numerator / denominator, both sparse integer polynomials in x, y, z."""

    def __init__(self, num: dict, den: dict, name: str = ""):
        self.num = {m: c for m, c in num.items() if c}
        self.den = {m: c for m, c in den.items() if c}
        self.name = name

    @classmethod
    def from_expr(cls, text: str, name: str = "", cancel: bool = True) -> "RationalGF":
        import sympy

        x, y, z = sympy.symbols("x y z")
        expr = sympy.sympify(text, locals={"x": x, "y": y, "z": z})
        expr = sympy.cancel(sympy.together(expr)) if cancel else sympy.together(expr)
        num, den = sympy.fraction(expr)
        return cls(_poly_dict(num, (x, y, z)), _poly_dict(den, (x, y, z)), name)

    def substitute(self, **images) -> "RationalGF":
        """Monomial substitution in numerator and denominator alike."""
        num = TruncatedSeries(self.num, 10 ** 9).substitute(**images, order=10 ** 9).coeffs
        den = TruncatedSeries(self.den, 10 ** 9).substitute(**images, order=10 ** 9).coeffs
        return RationalGF(num, den, self.name)

    def expand(self, order: int) -> TruncatedSeries:
        """Power series in x up to x^order (coefficients in y, z exactly)."""
        den_by_x = defaultdict(list)
        for (i, j, k), c in self.den.items():
            den_by_x[i].append((j, k, c))
        d0 = den_by_x.get(0, [])
        if len(d0) != 1 or d0[0][:2] != (0, 0):
            raise ZeroDivisionError(
                f"denominator of {self.name or 'gf'} has no invertible constant term")
        c0 = d0[0][2]
        num_by_x = defaultdict(dict)
        for (i, j, k), c in self.num.items():
            num_by_x[i][(j, k)] = c
        top = max(den_by_x)
        rows: list[dict] = []
        for m in range(order + 1):
            acc = defaultdict(int, num_by_x.get(m, {}))
            for i in range(1, min(m, top) + 1):
                terms = den_by_x.get(i)
                if not terms:
                    continue
                prev = rows[m - i]
                for dj, dk, c in terms:
                    for (j, k), v in prev.items():
                        acc[(j + dj, k + dk)] -= c * v
            if c0 == 1:
                row = {jk: v for jk, v in acc.items() if v}
            elif c0 == -1:
                row = {jk: -v for jk, v in acc.items() if v}
            else:
                row = {jk: _clean(Fraction(v) / c0) for jk, v in acc.items() if v}
            rows.append(row)
        coeffs = {(m, j, k): v for m, row in enumerate(rows) for (j, k), v in row.items()}
        return TruncatedSeries(coeffs, order)


def _poly_dict(expr, gens) -> dict:
    import sympy

    poly = sympy.Poly(sympy.expand(expr), *gens)
    out = {}
    for monom, c in poly.terms():
        c = sympy.Rational(c)
        if c.q != 1:
            raise ValueError("rational coefficient survived clearing denominators")
        out[tuple(int(e) for e in monom)] = int(c.p)
    return out


@lru_cache(maxsize=None)
def gf_catalog(name: str) -> RationalGF:
    """The closed-form generating function called `name`."""
    if name not in CATALOG:
        raise KeyError(f"unknown generating function {name!r}; known: {sorted(CATALOG)}")
    return RationalGF.from_expr(CATALOG[name], name)


def expand(gf: RationalGF | str, order: int) -> TruncatedSeries:
    if isinstance(gf, str):
        gf = gf_catalog(gf)
    return gf.expand(order)


def univariate(name: str, order: int) -> list:
    """x-coefficients 0..order of a catalog entry with y = z = 1."""
    return expand(name, order).x_coefficients()


# ---------------------------------------------------------------------------
# the signature pipeline
#
# F_hat counts one signature group; F1 = F_hat(x,y,1), F2 = F_hat(x,y,z^2),
# R = (1 + 1/F2) F1 F2 / (1 - F1 F2) counts all sequences of groups,
# F = even-y part of R, F0 = R(x^2,y^2,z^2)/x (antipalindromes),
# F3 = R(x^2, y^2 z^2, 1) (palindromes), G = (F + F0 + F3)/2 and
# G1 = G(x,y,z) + G(x, y z^2, 1/z) - F3.

X, Y, Z = (1, (1, 0, 0)), (1, (0, 1, 0)), (1, (0, 0, 1))


@lru_cache(maxsize=None)
def r_function() -> RationalGF:
    """R as one rational function, built symbolically from F_hat."""
    import sympy

    x, y, z = sympy.symbols("x y z")
    f_hat = sympy.sympify(CATALOG["F_hat"], locals={"x": x, "y": y, "z": z})
    f1 = f_hat.subs(z, 1)
    f2 = f_hat.subs(z, z ** 2)
    r = sympy.cancel((1 + 1 / f2) * f1 * f2 / (1 - f1 * f2))
    num, den = sympy.fraction(r)
    return RationalGF(_poly_dict(num, (x, y, z)), _poly_dict(den, (x, y, z)), "R")


def g1_parts(order: int) -> dict:
    """All intermediate series of the pipeline, trivariate, to x^order."""
    if order < 3:
        raise ValueError("order must be at least 3")
    r = r_function().expand(order)
    f = (r + r.substitute(y=(-1, (0, 1, 0)))).half()
    f0 = r.substitute(x=(1, (2, 0, 0)), y=(1, (0, 2, 0)), z=(1, (0, 0, 2)), order=order + 1)
    f0 = f0.map_monomials(lambda i, j, k: (1, (i - 1, j, k)), order)
    f3 = r.substitute(x=(1, (2, 0, 0)), y=(1, (0, 2, 2)), z=(1, (0, 0, 0)), order=order)
    g = (f + f0 + f3).half()
    g1 = g + g.substitute(y=(1, (0, 1, 2)), z=(1, (0, 0, -1)), order=order) - f3
    if not g1.is_integral():
        raise ArithmeticError("G1 has non-integer coefficients: transcription error")
    return {"R": r, "F": f, "F0": f0, "F3": f3, "G": g, "G1": g1}


def build_G1(order: int) -> TruncatedSeries:
    """Knots by (crossings m, 2g, 2g + sigma), both knots of a chiral pair."""
    return g1_parts(order)["G1"]


def select_J(G1: TruncatedSeries, order: int | None = None,
             F3: TruncatedSeries | None = None) -> TruncatedSeries:
    """Knots by (crossings, 2g, |sigma|), chiral pairs once.

    G2 = G1 + F3; terms y^l z^k get weight 0 for k < l, 1/2 for k = l and 1
    for k > l, and move to y^l z^(k-l).
    """
    order = G1.order if order is None else order
    if F3 is None:
        F3 = g1_parts(order)["F3"]
    g2 = G1 + F3

    def fn(i, j, k):
        if k < j:
            return None
        return (Fraction(1, 2) if k == j else 1), (i, j, k - j)

    j = g2.map_monomials(fn, order)
    if not j.is_integral():
        raise ArithmeticError("J has non-integer coefficients")
    return j


def diagonal_sigma0(G1: TruncatedSeries) -> list:
    """f0: knots with signature 0 (pairs twice), coefficients of x^0..x^order."""
    out = [0] * (G1.order + 1)
    for (i, j, k), c in G1.coeffs.items():
        if j == k:
            out[i] += c
    return out


# ---------------------------------------------------------------------------
# the same pipeline with y = 1/s, z = s, keeping only x and s = z^sigma
#
# Every map above acts on (l, k) only through sigma = k - l and the parity
# of l, so one can put y = e/s, z = s (e = +1 or -1) into R directly.  The
# result is a two-variable series whose s-exponent is the signature, which
# makes high orders cheap.


@lru_cache(maxsize=None)
def _r_reduced(sign: int) -> RationalGF:
    return r_function().substitute(y=(sign, (0, 0, -1)))


def signature_series(order: int) -> dict:
    """Two-variable versions (x, s^sigma) of G1 and J, stored as (i, 0, sigma)."""
    rp = _r_reduced(1).expand(order)
    rm = _r_reduced(-1).expand(order)
    f = (rp + rm).half()
    f0 = rp.substitute(x=(1, (2, 0, 0)), z=(1, (0, 0, 2)), order=order + 1)
    f0 = f0.map_monomials(lambda i, j, k: (1, (i - 1, j, k)), order)
    f3 = rp.substitute(x=(1, (2, 0, 0)), z=(1, (0, 0, 0)), order=order)
    g = (f + f0 + f3).half()
    g1 = g + g.substitute(z=(1, (0, 0, -1)), order=order) - f3
    g2 = g1 + f3

    def fn(i, j, k):
        if k < 0:
            return None
        return (Fraction(1, 2) if k == 0 else 1), (i, j, k)

    jr = g2.map_monomials(fn, order)
    if not (g1.is_integral() and jr.is_integral()):
        raise ArithmeticError("signature series has non-integer coefficients")
    return {"G1": g1, "J": jr, "F3": f3}


def sum_abs_signature_series(order: int) -> list:
    """Sum of |sigma| over knots of n crossings, up to mirror, n = 0..order."""
    jr = signature_series(order)["J"]
    out = [0] * (order + 1)
    for (i, _, k), c in jr.coeffs.items():
        out[i] += k * c
    return out


def mean_statistics(order: int) -> list[dict]:
    """Exact mean genus and mean |sigma| over knots of n crossings (up to mirror).

    Entry n of the returned list holds 'count', 'mean_genus' and
    'mean_abs_signature' (Fractions); entries below 3 are None.
    """
    f = expand("genus", order)
    jr = signature_series(order)["J"]
    count = [0] * (order + 1)
    gsum = [0] * (order + 1)
    for (i, _, g), c in f.coeffs.items():
        count[i] += c
        gsum[i] += g * c
    jcount = [0] * (order + 1)
    ssum = [0] * (order + 1)
    for (i, _, s), c in jr.coeffs.items():
        jcount[i] += c
        ssum[i] += s * c
    out: list = []
    for n in range(order + 1):
        if n < 3:
            out.append(None)
            continue
        if count[n] != jcount[n]:
            raise ArithmeticError(f"genus and signature totals differ at n={n}")
        out.append({
            "n": n,
            "count": count[n],
            "mean_genus": Fraction(gsum[n], count[n]),
            "mean_abs_signature": Fraction(ssum[n], count[n]),
        })
    return out
