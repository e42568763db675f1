"""Counting lens spaces L(p, q) and the u1 knots behind them.

L(p, q) is the double branched cover of S(p, q), so lens spaces with
fundamental group Z_p are classes of q in Z_p^* under q ~ q^{+-1} (and
q ~ -q once mirror images are identified).  Those obtainable by p/+-2
surgery on a knot are the ones whose S(p, q) has unknotting number one.

The formulas use phi(p), the number omega(p) of distinct prime divisors
and r2_0(p), the number of ordered coprime pairs (a, b) with a^2 + b^2 = p.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from functools import lru_cache
from math import gcd, isqrt
from typing import Iterator

import numpy as np

SIEVE_LIMIT = 10 ** 6


# ---------------------------------------------------------------------------
# factorization


@lru_cache(maxsize=1)
def _spf() -> np.ndarray:
    """Smallest prime factor of every n < SIEVE_LIMIT."""
    spf = np.zeros(SIEVE_LIMIT, dtype=np.int64)
    for i in range(2, isqrt(SIEVE_LIMIT - 1) + 1):
        if spf[i] == 0:
            block = spf[i * i::i]
            block[block == 0] = i
    idx = np.nonzero(spf == 0)[0]
    spf[idx] = idx
    return spf


def factorize(n: int) -> dict[int, int]:
    """Prime factorization {prime: exponent} of n >= 1.

    Small numbers come from the sieve; larger ones go to sympy's factorint
    (trial division, Pollard rho and strong pseudoprime tests).
    """
    if n < 1:
        raise ValueError("n must be positive")
    if n >= SIEVE_LIMIT:
        from sympy import factorint

        return {int(k): int(v) for k, v in factorint(n).items()}
    spf = _spf()
    out: dict[int, int] = {}
    while n > 1:
        p = int(spf[n])
        out[p] = out.get(p, 0) + 1
        n //= p
    return out


def euler_phi(n: int) -> int:
    result = n
    for p in factorize(n):
        result = result // p * (p - 1)
    return result


def omega(n: int) -> int:
    return len(factorize(n))


def r2_0(n: int) -> int:
    """Ordered pairs (a, b) of positive coprime integers with a^2 + b^2 = n."""
    f = factorize(n)
    if f.get(2, 0) > 1 or any(p % 4 == 3 for p in f):
        return 0
    odd = sum(1 for p in f if p % 4 == 1)
    if n <= 2:
        return 1 if n == 2 else 0
    return 2 ** odd


def r2_0_brute(n: int) -> int:
    return sum(
        1
        for a in range(1, isqrt(n) + 1)
        for b in [isqrt(n - a * a)]
        if b >= 1 and a * a + b * b == n and gcd(a, b) == 1
    )


# ---------------------------------------------------------------------------
# closed-form counts


def _check_odd(p: int, least: int) -> None:
    if p < least or p % 2 == 0:
        raise ValueError(f"p must be odd and at least {least}, got {p}")


def lens_count(p: int, oriented: bool = False) -> int:
    """Lens spaces with fundamental group Z_p (mirrors identified unless oriented)."""
    _check_odd(p, 3)
    if oriented:
        return (euler_phi(p) + 2 ** omega(p)) // 2
    return (euler_phi(p) + r2_0(p) + 2 ** omega(p)) // 4


def lens_count_brute(p: int, oriented: bool = False) -> int:
    """Orbits of Z_p^* under q -> q^{-1} (and q -> -q when not oriented)."""
    seen = set()
    orbits = 0
    for q in range(1, p):
        if gcd(q, p) != 1 or q in seen:
            continue
        orbits += 1
        inv = pow(q, -1, p)
        seen.update((q, inv))
        if not oriented:
            seen.update((p - q, p - inv))
    return orbits


def in_N(p: int) -> bool:
    """p = 2n^2 + 2n + 1 for some n >= 1, i.e. 2p - 1 is an odd square >= 9."""
    t = 2 * p - 1
    r = isqrt(t) if t > 0 else 0
    return t >= 9 and r * r == t


def _members(seq, p: int) -> bool:
    s = 0
    while True:
        v = seq(s)
        if v >= p:
            return v == p
        s += 1


def is_ps(p: int) -> bool:
    return _members(p_seq, p)


def in_S(p: int) -> bool:
    return _members(q_seq, p)


def u1_lens_count(p: int, oriented: bool = False) -> int:
    """Lens spaces L(p, q) obtainable by p/+-2 surgery along a knot."""
    _check_odd(p, 5)
    c = 2 ** (omega((p + 1) // 2) - 1) + 2 ** (omega((p - 1) // 2) - 1)
    c -= 2 if is_ps(p) else 1
    if oriented:
        return 2 * c - in_N(p) - in_S(p)
    return c


@dataclass(frozen=True)
class LensCount:
    p: int
    unoriented: int
    oriented: int
    u1_unoriented: int
    u1_oriented: int
    is_ps: bool
    in_N: bool
    in_S: bool

    def to_dict(self) -> dict:
        return asdict(self)


FIELDS = ("p", "unoriented", "oriented", "u1_unoriented", "u1_oriented", "is_ps", "in_N", "in_S")


def lens_row(p: int) -> LensCount:
    _check_odd(p, 5)
    return LensCount(
        p=p,
        unoriented=lens_count(p),
        oriented=lens_count(p, oriented=True),
        u1_unoriented=u1_lens_count(p),
        u1_oriented=u1_lens_count(p, oriented=True),
        is_ps=is_ps(p),
        in_N=in_N(p),
        in_S=in_S(p),
    )


def _rows(bounds: tuple[int, int]) -> list[LensCount]:
    lo, hi = bounds
    return [lens_row(p) for p in range(lo, hi + 1, 2)]


def lens_table(max_p: int, threads: int = 1, chunk: int = 1000) -> list[LensCount]:
    """Rows for odd 5 <= p <= max_p, in order, split into p-ranges over workers."""
    ranges = [(lo, min(lo + chunk - 2, max_p)) for lo in range(5, max_p + 1, chunk)]
    if threads <= 1 or len(ranges) == 1:
        parts = [_rows(r) for r in ranges]
    else:
        with ProcessPoolExecutor(max_workers=threads) as ex:
            parts = list(ex.map(_rows, ranges))
    return [row for part in parts for row in part]


# ---------------------------------------------------------------------------
# the exceptional sequences


class QuadInt:
    """a + b sqrt(d) with integer a, b."""

    __slots__ = ("a", "b", "d")

    def __init__(self, a: int, b: int, d: int):
        self.a, self.b, self.d = a, b, d

    def __mul__(self, other: "QuadInt") -> "QuadInt":
        return QuadInt(self.a * other.a + self.d * self.b * other.b,
                       self.a * other.b + self.b * other.a, self.d)

    def __add__(self, other: "QuadInt") -> "QuadInt":
        return QuadInt(self.a + other.a, self.b + other.b, self.d)

    def conj(self) -> "QuadInt":
        return QuadInt(self.a, -self.b, self.d)

    def __pow__(self, k: int) -> "QuadInt":
        out, base = QuadInt(1, 0, self.d), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out


def p_closed(s: int) -> int:
    """(1/4) ((58 - 41 r2)(3 - 2 r2)^s + (58 + 41 r2)(3 + 2 r2)^s), exactly."""
    t = QuadInt(58, 41, 2) * QuadInt(3, 2, 2) ** s
    total = t + t.conj()
    assert total.b == 0 and total.a % 4 == 0
    return total.a // 4


def q_closed(s: int) -> int:
    """(1/3) ((97 - 56 r3)(2 - r3)^2s + (97 + 56 r3)(2 + r3)^2s + 1), exactly."""
    t = QuadInt(97, 56, 3) * QuadInt(2, 1, 3) ** (2 * s)
    total = t + t.conj()
    assert total.b == 0 and (total.a + 1) % 3 == 0
    return (total.a + 1) // 3


def iter_p_seq() -> Iterator[int]:
    a, b = 29, 169
    while True:
        yield a
        a, b = b, 6 * b - a


def iter_q_seq() -> Iterator[int]:
    a, b, c = 65, 901, 12545
    while True:
        yield a
        a, b, c = b, c, 15 * (c - b) + a


@lru_cache(maxsize=None)
def _prefix(which: str, n: int) -> tuple:
    it = iter_p_seq() if which == "p" else iter_q_seq()
    return tuple(next(it) for _ in range(n))


def p_seq(s: int) -> int:
    if s < 0:
        raise ValueError("s must be non-negative")
    return _prefix("p", max(64, 1 << s.bit_length()))[s]


def q_seq(s: int) -> int:
    if s < 0:
        raise ValueError("s must be non-negative")
    return _prefix("q", max(64, 1 << s.bit_length()))[s]


def sn_search(max_s: int) -> list[tuple[int, int]]:
    """All (s, n) with s <= max_s, n >= 1 and q_s = 2n^2 + 2n + 1."""
    hits = []
    for s, q in enumerate(iter_q_seq()):
        if s > max_s:
            break
        t = 2 * q - 1
        r = isqrt(t)
        if r * r == t and r >= 3:
            hits.append((s, (r - 1) // 2))
    return hits


def elliptic_points(bound: int) -> list[int]:
    """x with |x| <= bound for which 3x^4 + 2x^2 - 5 is a perfect square."""
    out = []
    for x in range(-bound, bound + 1):
        v = 3 * x ** 4 + 2 * x * x - 5
        if v >= 0 and isqrt(v) ** 2 == v:
            out.append(x)
    return out


def is_elliptic_point(x: int) -> bool:
    v = 3 * x ** 4 + 2 * x * x - 5
    return v >= 0 and isqrt(v) ** 2 == v


# ---------------------------------------------------------------------------
# words realizing the exceptional determinants


def duplication_words(k: int) -> tuple[tuple, tuple]:
    """The two even words with two different u1 presentations, for k >= 1."""
    a = (4, -2) * k + (-2, 2) + (-4, 2) * (k - 1)
    b = (2, -4) * k + (2, 2) + (-2, 4) * k
    return a, b


def _det(word) -> int:
    from .fraction_core import word_fraction

    return word_fraction(word)[0]


def duplication_determinants(k_max: int) -> tuple[list[int], list[int]]:
    if k_max < 1:
        raise ValueError("k_max must be at least 1")
    first, second = [], []
    for k in range(1, k_max + 1):
        a, b = duplication_words(k)
        first.append(_det(a))
        second.append(_det(b))
    return first, second


def achiral_series_word(k: int) -> tuple:
    return (3,) + (1, 2) * k + (1, 1, 1, 1) + (2, 1) * k + (3,)


def achiral_series_determinants(k_max: int) -> list[int]:
    return [_det(achiral_series_word(k)) for k in range(k_max + 1)]


def n11n_determinants(n_max: int) -> list[int]:
    """Determinants of the words (n, 1, 1, n); they are 2n^2 + 2n + 1."""
    return [_det((n, 1, 1, n)) for n in range(1, n_max + 1)]
