"""Continued fractions over Q plus infinity, Conway words and Schubert pairs.

A rational knot is written S(p, q) with p odd.  A Conway word
(c_1, ..., c_n) describes the same knot as the fraction

    p/q = [[c_n, ..., c_1]] = c_n + 1/(c_{n-1} + 1/(... + 1/c_1))

so the iterated fraction always consumes the word in reverse.  Every
function below says which order it expects.

Two knots S(p, q) and S(p, q') agree exactly when q' = q or q' = 1/q
modulo p; the mirror image of S(p, q) is S(p, -q).  On words, mirroring
is global negation, and turning the diagram over is reversal for odd
length and reversal combined with negation for even length.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, NamedTuple, Sequence

Word = tuple  # tuple of ints


class KnotDataError(ValueError):
    """Input does not describe a rational knot (even p, bad gcd, ...)."""


@dataclass(frozen=True)
class ExtendedRational:
    """A value of Q plus a single unsigned infinity, stored as num/den.

    den >= 0, gcd(|num|, den) = 1 and den == 0 only for infinity (1/0).
    """

    num: int
    den: int

    def __post_init__(self):
        num, den = self.num, self.den
        if den < 0:
            num, den = -num, -den
        if den == 0:
            num = 1
        else:
            g = gcd(num, den)
            num, den = num // g, den // g
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    @property
    def is_infinite(self) -> bool:
        return self.den == 0

    def __str__(self) -> str:
        if self.den == 0:
            return "inf"
        if self.den == 1:
            return str(self.num)
        return f"{self.num}/{self.den}"


INFINITY = ExtendedRational(1, 0)


def cf_value(entries: Iterable[int]) -> tuple[int, int]:
    """Return (num, den) of [[s_1, ..., s_m]] with den >= 0.

    The iterated fraction is the first column of the product of the
    matrices [[s, 1], [1, 0]].  Each factor has determinant -1, so the
    column is always coprime and the projective value obeys the rules
    1/0 = inf, 1/inf = 0 and k + inf = inf.
    """
    a, b, c, d = 1, 0, 0, 1
    for s in entries:
        a, b, c, d = a * s + b, a, c * s + d, c
    if c < 0:
        a, c = -a, -c
    elif c == 0:
        a = 1
    return a, c


def eval_cf(entries: Iterable[int]) -> ExtendedRational:
    """The iterated fraction [[s_1, ..., s_m]]; the empty one is infinity."""
    num, den = cf_value(entries)
    return ExtendedRational(num, den)


def word_fraction(word: Sequence[int]) -> tuple[int, int]:
    """(p, q) of the knot with Conway word `word`, so p/q = [[reversed word]].

    p is made non-negative; q carries the sign.
    """
    num, den = cf_value(reversed(word))
    if num < 0:
        return -num, -den
    return num, den


def collapse_zeros(word: Iterable[int]) -> Word:
    """Remove zero entries without changing the value of the reversed fraction.

    An inner zero merges its neighbours: (..., a, 0, b, ...) -> (..., a+b, ...),
    repeated while new zeros appear.  A leading zero cancels together with
    the entry after it, since [[..., a, 0]] = [[...]].  A final zero is a
    reciprocal of the whole fraction and has to stay.
    """
    out: list[int] = []
    pending_zero = False
    for s in word:
        if pending_zero:
            pending_zero = False
            if not out:
                # leading (0, s): both entries drop out
                continue
            s += out.pop()
        if s == 0:
            pending_zero = True
        else:
            out.append(s)
    if pending_zero:
        out.append(0)
    return tuple(out)


def is_even_word(word: Sequence[int]) -> bool:
    return bool(word) and len(word) % 2 == 0 and all(c != 0 and c % 2 == 0 for c in word)


def is_positive_word(word: Sequence[int]) -> bool:
    return bool(word) and all(c >= 1 for c in word)


def word_form(word: Sequence[int]) -> str:
    """Classify a word as 'even', 'positive' or 'mixed'.

    A word like (2, 2) is both; it is reported as 'even'.
    """
    if is_even_word(word):
        return "even"
    if is_positive_word(word):
        return "positive"
    return "mixed"


def mirror(word: Sequence[int]) -> Word:
    return tuple(-c for c in word)


def turnover(word: Sequence[int]) -> Word:
    """The same knot read from the other end of the diagram."""
    if len(word) % 2:
        return tuple(reversed(word))
    return tuple(-c for c in reversed(word))


def canonical_word(word: Sequence[int]) -> Word:
    """Least of w, reverse(w), -w, -reverse(w) whose first entry is positive.

    This identifies a word with its mirror image.
    """
    w = tuple(word)
    r = w[::-1]
    candidates = [v for v in (w, r, mirror(w), mirror(r)) if v and v[0] > 0]
    return min(candidates) if candidates else w


# ---------------------------------------------------------------------------
# positive and even expansions


def positive_cf(p: int, q: int) -> list[int]:
    """Regular continued fraction of p/q for p > q > 0, last entry >= 2."""
    if not 0 < q < p:
        raise KnotDataError(f"need 0 < q < p, got {p}/{q}")
    out = []
    while q:
        a, r = divmod(p, q)
        out.append(a)
        p, q = q, r
    return out


def even_cf(p: int, q: int) -> list[int]:
    """Expansion p/q = [[a_1, ..., a_2g]] with every a_i even and nonzero.

    Needs p odd and q even (or p even and q odd, which happens halfway).
    Each step takes the unique even a with |p/q - a| < 1.
    """
    if gcd(p, q) != 1:
        raise KnotDataError(f"{p}/{q} is not reduced")
    if (p - q) % 2 == 0:
        raise KnotDataError(f"{p}/{q} needs exactly one even term")
    out = []
    while True:
        if q < 0:
            p, q = -p, -q
        if q == 1:
            # even integer: this is the last entry
            out.append(p)
            return out
        # p/q lies strictly between 2k and 2k+2 and is not 2k+1
        k = p // (2 * q)
        lo = 2 * k
        a = lo if 2 * (p - lo * q) < 2 * q else lo + 2
        if a == 0 or 2 * abs(p - a * q) >= 2 * q:
            # p/q in (-1, 1): the only candidate is 0, which is not allowed
            raise KnotDataError(f"no even expansion step at {p}/{q}")
        out.append(a)
        p, q = q, p - a * q


# ---------------------------------------------------------------------------
# Schubert pairs and knot classes


class SchubertPair(NamedTuple):
    """Normalized (p, q): p odd, q even with 0 <= q < p, gcd 1."""

    p: int
    q: int

    def __str__(self) -> str:
        return f"{self.p}/{self.q}"


UNKNOT = SchubertPair(1, 0)


def _check_knot(p: int, q: int) -> None:
    if p < 1 or p % 2 == 0:
        raise KnotDataError(f"p={p} must be odd and positive (even p is a link)")
    if gcd(p, q) != 1:
        raise KnotDataError(f"gcd({p}, {q}) != 1")


def class_residues(p: int, q: int, up_to_mirror: bool = False) -> set[int]:
    """Residues mod p of all q' with S(p, q') = S(p, q) (or its mirror)."""
    _check_knot(p, q)
    if p == 1:
        return {0}
    inv = pow(q, -1, p)
    res = {q % p, inv % p}
    if up_to_mirror:
        res |= {(-r) % p for r in res}
    return res


def equivalents(pair: tuple[int, int], up_to_mirror: bool = False) -> set[SchubertPair]:
    """All normalized pairs (p, q') with q' in (0, p) even describing the knot.

    Without mirroring this is the even members of {q, 1/q} mod p; with it,
    the even members of {q, -q, 1/q, -1/q}.  The first set may be empty when
    q itself is odd (S(9, 1) for instance): such a knot is only reachable as
    the mirror of a normalized pair.
    """
    p, q = pair
    if p == 1:
        return {UNKNOT}
    return {
        SchubertPair(p, r)
        for r in class_residues(p, q, up_to_mirror)
        if r % 2 == 0
    }


def knot_key(p: int, q: int) -> tuple[int, int]:
    """Chirality-aware identity of S(p, q): (p, min of q, 1/q mod p)."""
    _check_knot(p, q)
    if p == 1:
        return (1, 0)
    return (p, min(q % p, pow(q, -1, p)))


def normalize_pair(p: int, q: int) -> SchubertPair:
    """Least normalized pair among S(p, +-q^{+-1}), identifying mirrors."""
    if p == 1:
        _check_knot(p, q)
        return UNKNOT
    return min(equivalents((p, q), up_to_mirror=True))


def even_word(p: int, q: int) -> Word:
    """Conway word with even entries for S(p, q), chirality kept.

    q may be any residue coprime to p; an even representative in (-p, p)
    is used for the expansion.
    """
    _check_knot(p, q)
    if p == 1:
        raise KnotDataError("the unknot has no even word")
    q %= p
    if q % 2:
        q -= p
    return tuple(reversed(even_cf(p, q)))


def positive_word(p: int, q: int) -> Word:
    """Conway word with positive entries for S(p, q) up to mirroring."""
    _check_knot(p, q)
    if p == 1:
        raise KnotDataError("the unknot has no positive word")
    return tuple(reversed(positive_cf(p, q % p)))


def positive_to_even(pair: tuple[int, int]) -> Word:
    """Canonical even word of a normalized pair (mirror images identified)."""
    p, q = pair
    if p == 1:
        raise KnotDataError("the unknot has no even word")
    if not (p % 2 == 1 and q % 2 == 0 and 0 < q < p and gcd(p, q) == 1):
        raise KnotDataError(f"{p}/{q} is not a normalized pair")
    return canonical_word(even_word(p, q))


def even_to_positive(word: Sequence[int]) -> Word:
    """Rewrite an even word into an all-positive word of the same knot.

    Uses [[x, a, -b, y]] = [[x, a-1, 1, b-1, -y]] at each sign change and
    merges the zeros this may create.  The first entry is made positive
    first, so the result may describe the mirror image.  The entry sum is
    the crossing number.
    """
    w = list(word)
    if not w:
        raise KnotDataError("empty word")
    if w[0] < 0:
        w = [-c for c in w]
    out = [w[0]]
    flip = 1
    for c in w[1:]:
        c *= flip
        if c > 0:
            out.append(c)
            continue
        # sign change a, -b  ->  a-1, 1, b-1 and the rest negated
        a = out.pop()
        if a == 1:
            # (..., t, 0, 1, ...) collapses to (..., t+1, ...)
            out[-1] += 1
        else:
            out.extend((a - 1, 1))
        out.append(-c - 1)
        flip = -flip
    return collapse_zeros(out)


@dataclass(frozen=True)
class KnotClass:
    """A rational knot with both normal forms.

    `canonical` identifies mirror images; `is_mirror` says whether this
    particular knot is the mirror of S(canonical) (False when achiral).
    """

    canonical: SchubertPair
    even_word: Word
    positive_word: Word
    is_mirror: bool
    key: tuple[int, int]


def knot_class(p: int, q: int) -> KnotClass:
    _check_knot(p, q)
    if p == 1:
        raise KnotDataError("the unknot is not classified here")
    canon = normalize_pair(p, q)
    key = knot_key(p, q)
    return KnotClass(
        canonical=canon,
        even_word=even_word(p, q),
        positive_word=positive_word(p, q),
        is_mirror=knot_key(*canon) != key,
        key=key,
    )


def knot_class_from_word(word: Sequence[int]) -> KnotClass:
    """Classify the knot of any Conway word (zeros allowed)."""
    p, q = word_fraction(collapse_zeros(word))
    return knot_class(p, q)


def parse_word(text: str) -> Word:
    """Parse '2,-2,2,-2' into a tuple of ints."""
    parts = [t for t in text.replace(" ", "").split(",") if t]
    if not parts:
        raise ValueError("empty word")
    return tuple(int(t) for t in parts)


def parse_pair(text: str) -> tuple[int, int]:
    """Parse 'p/q' into integers."""
    p, sep, q = text.partition("/")
    if not sep:
        raise ValueError(f"expected p/q, got {text!r}")
    return int(p), int(q)
