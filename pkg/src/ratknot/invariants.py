"""Invariants and classification flags of rational knots.

Everything is read off the even Conway word (a_1, ..., a_2g):

    crossing number   sum |a_i| minus the number of sign changes a_i a_{i+1} < 0
    genus             g
    signature         sum (-1)^(i-1) sgn(a_i)
    max coeff of the Alexander polynomial   |prod a_i| / 2^(2g)

plus the unknotting-number-one tests, which are arithmetic in (p, q).
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from math import gcd, isqrt
from typing import Sequence

from .fraction_core import (
    KnotDataError,
    class_residues,
    collapse_zeros,
    cf_value,
    knot_class,
    is_even_word,
    is_positive_word,
    word_fraction,
)


def _require_even(word: Sequence[int]) -> None:
    if not is_even_word(word):
        raise KnotDataError(f"not an even word: {tuple(word)}")


def crossing_number(word: Sequence[int]) -> int:
    _require_even(word)
    total = sum(abs(a) for a in word)
    changes = sum(1 for a, b in zip(word, word[1:]) if (a > 0) != (b > 0))
    return total - changes


def genus(word: Sequence[int]) -> int:
    _require_even(word)
    return len(word) // 2


def signature(word: Sequence[int]) -> int:
    _require_even(word)
    return sum((1 if a > 0 else -1) * (1 if i % 2 == 0 else -1) for i, a in enumerate(word))


def maxcf_alexander(word: Sequence[int]) -> int:
    """Leading Alexander coefficient, sign dropped."""
    _require_even(word)
    prod = 1
    for a in word:
        prod *= abs(a) // 2
    return prod


def is_fibered(word: Sequence[int]) -> bool:
    return all(abs(a) == 2 for a in word)


def _alternates(word: Sequence[int], first_sign: int) -> bool:
    return all((a > 0) == ((i % 2 == 0) == (first_sign > 0)) for i, a in enumerate(word))


def is_positive(word: Sequence[int]) -> bool:
    """Signs alternate strictly, starting with +."""
    return _alternates(word, 1)


def is_negative(word: Sequence[int]) -> bool:
    """Mirror image of a positive knot."""
    return _alternates(word, -1)


def is_achiral(word: Sequence[int]) -> bool:
    return tuple(word) == tuple(reversed(word))


# ---------------------------------------------------------------------------
# unknotting number one


def u1_decompositions(p: int, q: int) -> list[tuple[int, int, int, int]]:
    """All (q', m, n, sign) with S(p, q') equivalent to S(p, q) up to mirror,
    q' = 2n^2, p = 2mn + sign, m > n >= 1 and gcd(m, n) = 1."""
    found = []
    for r in sorted(class_residues(p, q, up_to_mirror=True)):
        if r % 2:
            continue
        n = isqrt(r // 2)
        if 2 * n * n != r:
            continue
        for sign in (1, -1):
            if (p - sign) % (2 * n) == 0:
                m = (p - sign) // (2 * n)
                if m > n and gcd(m, n) == 1:
                    found.append((r, m, n, sign))
    return found


def is_u1(pair: tuple[int, int]) -> bool:
    p, q = pair
    return bool(u1_decompositions(p, q))


def is_bleiler_counterexample(pair: tuple[int, int]) -> bool:
    """Unknotting number one, but not by a crossing change in the even diagram.

    Some equivalent pair is (2mn +- 1, 2n^2) with m > n > 1 coprime, and no
    decomposition at all has n = 1 or an even m or n.
    """
    decs = u1_decompositions(*pair)
    if not decs:
        return False
    return all(n > 1 and m % 2 == 1 and n % 2 == 1 for _, m, n, _ in decs)


def _form1_at(w: Sequence[int], l: int) -> bool:
    if len(w) != 2 * l + 2 or abs(w[l + 1]) != 2:
        return False
    return all(w[l + 1 + j] == -w[l + 1 - j] for j in range(1, l + 1))


def _form2_at(w: Sequence[int], l: int) -> bool:
    if l < 1 or len(w) != 2 * l + 2 or abs(w[l + 1]) != 2:
        return False
    if not all(w[l + 1 + j] == -w[l + 1 - j] for j in range(2, l + 1)):
        return False
    a, b = w[l], w[l + 2]
    if abs(a + b) != 2:
        return False
    big = a if abs(a) > abs(b) else b
    return (big > 0) != (w[l + 1] > 0)


def classify_u1_even_form(word: Sequence[int]) -> str:
    """Match the two even-word shapes of unknotting number one knots.

    form 1: (a, a_1..a_l, +-2, -a_l..-a_1)
    form 2: (a, a_1..a_l, +-2, a_l', -a_(l-1)..-a_1) with |a_l + a_l'| = 2 and
            the larger of a_l, a_l' of opposite sign to the middle 2.
    Words are tried in all four orientations (reversal and negation).
    Returns 'form1', 'form2', 'both' or 'neither'.
    """
    _require_even(word)
    w = tuple(word)
    orbit = {w, w[::-1], tuple(-a for a in w), tuple(-a for a in w[::-1])}
    l = len(w) // 2 - 1
    f1 = any(_form1_at(v, l) for v in orbit)
    f2 = any(_form2_at(v, l) for v in orbit)
    if f1 and f2:
        return "both"
    if f1:
        return "form1"
    if f2:
        return "form2"
    return "neither"


def unknotting_switches(word: Sequence[int]) -> list[int]:
    """1-based indices i where one crossing change in twist group i unknots.

    The change turns c_i into c_i - 2; the result is the unknot when the
    numerator of the reversed fraction is 1 (infinity counts as 1/0).
    """
    if not is_positive_word(word):
        raise KnotDataError(f"not a positive word: {tuple(word)}")
    hits = []
    for i in range(len(word)):
        w = list(word)
        w[i] -= 2
        num, _ = cf_value(reversed(w))
        if abs(num) == 1:
            hits.append(i + 1)
    return hits


# ---------------------------------------------------------------------------
# everything at once


@dataclass(frozen=True)
class InvariantSet:
    p: int
    q: int
    even_word: tuple
    positive_word: tuple
    crossing_number: int
    genus: int
    signature: int
    determinant: int
    maxcf_alexander: int
    fibered: bool
    positive: bool
    negative: bool
    achiral: bool
    u1: bool
    bleiler_counterexample: bool

    def to_dict(self) -> dict:
        d = asdict(self)
        d["even_word"] = list(self.even_word)
        d["positive_word"] = list(self.positive_word)
        return d


def invariants_of_pair(p: int, q: int) -> InvariantSet:
    """Invariants of S(p, q), chirality kept (q any residue prime to p)."""
    kc = knot_class(p, q)
    w = kc.even_word
    return InvariantSet(
        p=kc.canonical.p,
        q=kc.canonical.q,
        even_word=w,
        positive_word=kc.positive_word,
        crossing_number=crossing_number(w),
        genus=genus(w),
        signature=signature(w),
        determinant=p,
        maxcf_alexander=maxcf_alexander(w),
        fibered=is_fibered(w),
        positive=is_positive(w),
        negative=is_negative(w),
        achiral=is_achiral(w),
        u1=is_u1((p, q)),
        bleiler_counterexample=is_bleiler_counterexample((p, q)),
    )


def invariants_of_word(word: Sequence[int]) -> InvariantSet:
    """Invariants of the knot of an arbitrary Conway word."""
    p, q = word_fraction(collapse_zeros(word))
    if p == 1:
        raise KnotDataError("the word describes the unknot")
    return invariants_of_pair(p, q)
