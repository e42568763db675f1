"""Exhaustive census of rational knots by crossing number.

Knots are enumerated as even Conway words, one word per knot up to
mirroring: the least of w, reverse(w), -w, -reverse(w) with a positive
first entry.  The crossing number of an even word is additive entry by
entry (|a| minus one at every sign change), so a depth-first search with
a remaining-budget bound generates exactly the words of a given crossing
number.

Chiral pairs are counted once unless `count_chiral_pairs_twice` is set;
a knot is chiral exactly when its even word is not a palindrome.
"""

from __future__ import annotations

import os
import sys
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Iterator

import numpy as np

from .fraction_core import knot_key, normalize_pair, word_fraction
from .invariants import (
    is_bleiler_counterexample,
    maxcf_alexander,
    signature,
    u1_decompositions,
)

FLAGS = ("fibered", "positive", "achiral", "u1", "bleiler_counterexample", "sigma0")

# flag combinations reported in every census
STANDARD_COMBOS = {
    "fibered": ("fibered",),
    "fibered+achiral": ("fibered", "achiral"),
    "u1": ("u1",),
    "achiral+u1": ("achiral", "u1"),
    "fibered+u1": ("fibered", "u1"),
    "positive": ("positive",),
    "sigma0": ("sigma0",),
    "achiral": ("achiral",),
    "bleiler_counterexample": ("bleiler_counterexample",),
}


@dataclass(frozen=True)
class CensusFilter:
    require: frozenset = frozenset()
    forbid: frozenset = frozenset()
    count_chiral_pairs_twice: bool = False

    def __post_init__(self):
        object.__setattr__(self, "require", frozenset(self.require))
        object.__setattr__(self, "forbid", frozenset(self.forbid))
        bad = (self.require | self.forbid) - set(FLAGS)
        if bad:
            raise ValueError(f"unknown flags: {sorted(bad)}")
        if self.require & self.forbid:
            raise ValueError("a flag cannot be both required and forbidden")

    def accepts(self, flags: dict) -> bool:
        return all(flags[f] for f in self.require) and not any(flags[f] for f in self.forbid)


@dataclass
class CensusReport:
    n: int
    total: int = 0
    by_genus: dict = field(default_factory=dict)
    by_signature: dict = field(default_factory=dict)
    flag_counts: dict = field(default_factory=dict)
    pairs_twice: bool = False
    sum_genus: int = 0
    sum_abs_signature: int = 0

    @property
    def mean_genus(self) -> Fraction:
        return Fraction(self.sum_genus, self.total) if self.total else Fraction(0)

    @property
    def mean_abs_signature(self) -> Fraction:
        return Fraction(self.sum_abs_signature, self.total) if self.total else Fraction(0)

    def merge(self, other: "CensusReport") -> "CensusReport":
        out = CensusReport(self.n, pairs_twice=self.pairs_twice)
        out.total = self.total + other.total
        out.sum_genus = self.sum_genus + other.sum_genus
        out.sum_abs_signature = self.sum_abs_signature + other.sum_abs_signature
        for name in ("by_genus", "by_signature", "flag_counts"):
            merged = Counter(getattr(self, name))
            merged.update(getattr(other, name))
            setattr(out, name, dict(sorted(merged.items())))
        return out

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "pairs_twice": self.pairs_twice,
            "total": self.total,
            "by_genus": {str(k): v for k, v in sorted(self.by_genus.items())},
            "by_signature": {str(k): v for k, v in sorted(self.by_signature.items())},
            "flag_counts": dict(sorted(self.flag_counts.items())),
            "mean_genus": str(self.mean_genus),
            "mean_abs_signature": str(self.mean_abs_signature),
        }


# ---------------------------------------------------------------------------
# word generation


def _is_canonical(w: tuple) -> bool:
    if w[-1] > 0:
        return w <= w[::-1]
    return w <= tuple(-a for a in reversed(w))


def enumerate_even_words(
    n: int,
    fibered_only: bool = False,
    positive_only: bool = False,
    first_entry: int | None = None,
) -> Iterator[tuple]:
    """Every rational knot of crossing number n, once, as its canonical word.

    Mirror images are identified.  The options restrict the search to
    entries +-2, to strictly alternating signs, or to one first entry
    (used to split the work).
    """
    if n < 3:
        return
    mags = (2,) if fibered_only else None
    word: list[int] = []

    def extend(cost: int) -> Iterator[tuple]:
        length = len(word)
        if length % 2 == 0 and cost == n and length:
            w = tuple(word)
            if _is_canonical(w):
                yield w
            return
        last = word[-1] if word else 0
        # after this entry an odd length needs at least one more (cost >= 1)
        limit = n - 1 if length % 2 == 0 else n
        if length == 0:
            signs = (1,)
        elif positive_only:
            signs = (-1,) if last > 0 else (1,)
        else:
            signs = (1, -1)
        for s in signs:
            change = 1 if (last != 0 and (last > 0) != (s > 0)) else 0
            m = 2
            while cost + m - change <= limit:
                if length == 0 and first_entry is not None and m != first_entry:
                    m += 2
                    continue
                word.append(s * m)
                yield from extend(cost + m - change)
                word.pop()
                if mags is not None:
                    break
                m += 2

    yield from extend(0)


def enumerate_achiral_words(n: int, fibered_only: bool = False) -> Iterator[tuple]:
    """Achiral knots of crossing number n: palindromic even words.

    A palindrome h + reverse(h) has crossing number twice that of h, since
    the junction repeats an entry and never changes sign.
    """
    if n % 2 or n < 4:
        return
    half = n // 2
    word: list[int] = []

    def extend(cost: int) -> Iterator[tuple]:
        if cost == half and word:
            yield tuple(word) + tuple(reversed(word))
            return
        last = word[-1] if word else 0
        for s in ((1,) if not word else (1, -1)):
            change = 1 if (last != 0 and (last > 0) != (s > 0)) else 0
            m = 2
            while cost + m - change <= half:
                word.append(s * m)
                yield from extend(cost + m - change)
                word.pop()
                if fibered_only:
                    break
                m += 2

    yield from extend(0)


# ---------------------------------------------------------------------------
# per-knot data


def knot_flags(word: tuple) -> dict:
    """Mirror-invariant flags of the knot with even word `word`.

    'positive' means positive or negative (one of the pair is positive).
    """
    p, q = word_fraction(word)
    decs = u1_decompositions(p, q)
    sig = signature(word)
    n = len(word)
    return {
        "fibered": all(a == 2 or a == -2 for a in word),
        "positive": all((word[i] > 0) != (word[i + 1] > 0) for i in range(n - 1)),
        "achiral": word == word[::-1],
        "u1": bool(decs),
        "bleiler_counterexample": bool(decs) and is_bleiler_counterexample((p, q)),
        "sigma0": sig == 0,
        "signature": sig,
        "genus": n // 2,
        "determinant": p,
        "maxcf": maxcf_alexander(word),
    }


def _census_words(n: int, filt: CensusFilter, words) -> CensusReport:
    twice = filt.count_chiral_pairs_twice
    rep = CensusReport(n, pairs_twice=twice)
    by_genus: Counter = Counter()
    by_sig: Counter = Counter()
    combos: Counter = Counter()
    for w in words:
        fl = knot_flags(w)
        if not filt.accepts(fl):
            continue
        weight = 1 if (fl["achiral"] or not twice) else 2
        rep.total += weight
        g = fl["genus"]
        sig = fl["signature"]
        by_genus[g] += weight
        rep.sum_genus += weight * g
        rep.sum_abs_signature += weight * abs(sig)
        if twice:
            if fl["achiral"]:
                by_sig[sig] += 1
            else:
                by_sig[sig] += 1
                by_sig[-sig] += 1
        else:
            by_sig[abs(sig)] += 1
        for name, combo in STANDARD_COMBOS.items():
            if all(fl[f] for f in combo):
                combos[name] += weight
    rep.by_genus = dict(sorted(by_genus.items()))
    rep.by_signature = dict(sorted(by_sig.items()))
    rep.flag_counts = {k: combos.get(k, 0) for k in STANDARD_COMBOS}
    return rep


def _words_for(n: int, filt: CensusFilter, first_entry: int | None = None):
    fib = "fibered" in filt.require
    if "achiral" in filt.require:
        if first_entry not in (None, 2):
            return iter(())
        return enumerate_achiral_words(n, fibered_only=fib)
    return enumerate_even_words(
        n, fibered_only=fib, positive_only="positive" in filt.require, first_entry=first_entry
    )


def _census_part(args) -> CensusReport:
    n, filt, first = args
    return _census_words(n, filt, _words_for(n, filt, first))


def default_threads() -> int:
    env = os.environ.get("RATKNOT_THREADS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def census(
    n: int,
    filt: CensusFilter | None = None,
    threads: int = 1,
    progress: bool = False,
) -> CensusReport:
    """Count the knots of crossing number n passing `filt`.

    With threads > 1 the word tree is split by first entry and the parts are
    merged by summation, so the result does not depend on the split.
    """
    if n < 3:
        raise ValueError("crossing number must be at least 3")
    filt = filt or CensusFilter()
    if threads <= 1 or "achiral" in filt.require:
        rep = _census_words(n, filt, _words_for(n, filt))
    else:
        firsts = list(range(2, n + 2, 2))
        rep = CensusReport(n, pairs_twice=filt.count_chiral_pairs_twice)
        with ProcessPoolExecutor(max_workers=threads) as pool:
            for part in pool.map(_census_part, [(n, filt, a) for a in firsts]):
                rep = rep.merge(part)
        rep.flag_counts = {k: rep.flag_counts.get(k, 0) for k in STANDARD_COMBOS}
    if progress:
        print(f"census n={n}: {rep.total} knots", file=sys.stderr)
    return rep


# ---------------------------------------------------------------------------
# unknotting number one knots, generated arithmetically


def u1_pairs_by_determinant(p: int) -> list[tuple[int, int]]:
    """All (m, n) with p = 2mn +- 1, m > n >= 1, gcd(m, n) = 1."""
    out = []
    n = 1
    while 2 * n * (n + 1) - 1 <= p:
        for sign in (1, -1):
            if (p - sign) % (2 * n) == 0:
                m = (p - sign) // (2 * n)
                if m > n and gcd(m, n) == 1:
                    out.append((m, n))
        n += 1
    return out


def census_u1_by_determinant(p: int, oriented: bool = False) -> int:
    """Number of unknotting number one knots of determinant p.

    Unoriented: mirror images identified.  Oriented: S(p, 2n^2) and
    S(p, -2n^2) are told apart (they agree only for achiral knots).
    """
    if p < 5 or p % 2 == 0:
        raise ValueError("p must be odd and at least 5")
    keys = set()
    for m, n in u1_pairs_by_determinant(p):
        q = 2 * n * n
        if oriented:
            keys.add(knot_key(p, q))
            keys.add(knot_key(p, -q))
        else:
            keys.add(normalize_pair(p, q))
    return len(keys)


def fibonacci_bound(n: int) -> int:
    """Largest determinant of a rational knot with n crossings."""
    a, b = 1, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def u1_knots_by_crossing(n_max: int) -> dict[int, list[tuple]]:
    """Unknotting number one knots with at most n_max crossings, up to mirror.

    Generated from the arithmetic form S(2mn +- 1, 2n^2) instead of a full
    census, which keeps crossing numbers in the twenties cheap.  Each knot
    is returned as its canonical even word.
    """
    from .fraction_core import canonical_word, even_word
    from .invariants import crossing_number

    pmax = fibonacci_bound(n_max)
    seen = set()
    out: dict[int, list[tuple]] = {}
    n = 1
    while 2 * n * (n + 1) - 1 <= pmax:
        m = n + 1
        while 2 * m * n - 1 <= pmax:
            if gcd(m, n) == 1:
                for sign in (1, -1):
                    p = 2 * m * n + sign
                    if p > pmax:
                        continue
                    pair = normalize_pair(p, 2 * n * n)
                    if pair in seen:
                        continue
                    seen.add(pair)
                    w = canonical_word(even_word(p, 2 * n * n))
                    c = crossing_number(w)
                    if c <= n_max:
                        out.setdefault(c, []).append(w)
            m += 1
        n += 1
    for c in out:
        out[c].sort()
    return dict(sorted(out.items()))


# ---------------------------------------------------------------------------
# sum of |signature| by dynamic programming
#
# Write an even word as a_i = s_i * 2k_i and put t_i = (-1)^(i-1) s_i.  Then
# the signature is sum t_i, and a_i, a_(i+1) change sign exactly when
# t_i = t_(i+1).  So the crossing number is 2 sum k_i minus the number of
# equal neighbours in t.  The DP runs over (cost, running signature, last t).


def _signature_table(n: int) -> list:
    """tab[c][j] = object array over signature (offset n) of words of cost c
    whose last t is +1 (j=0) or -1 (j=1); words of any length >= 1."""
    width = 2 * n + 3
    zero = np.zeros(width, dtype=object)
    zero[:] = 0
    f = [[zero.copy(), zero.copy()] for _ in range(n + 2)]
    tail = [[zero.copy(), zero.copy()] for _ in range(n + 3)]  # sum_k f[c-2k]

    def shift(arr, t):
        out = zero.copy()
        if t > 0:
            out[1:] = arr[:-1]
        else:
            out[:-1] = arr[1:]
        return out

    for c in range(1, n + 1):
        for j in (0, 1):
            if c >= 2:
                tail[c][j] = f[c - 2][j] + tail[c - 2][j]
            else:
                tail[c][j] = zero.copy()
        # tail[c+1] needs f[c-1]
        for j in (0, 1):
            tail[c + 1][j] = f[c - 1][j] + (tail[c - 1][j] if c >= 1 else zero)
        for j, t in ((0, 1), (1, -1)):
            same = tail[c + 1][j]        # previous t equal: cost 2k - 1
            other = tail[c][1 - j]       # previous t different: cost 2k
            acc = shift(same + other, t)
            if c % 2 == 0:
                acc[n + 1 + t] += 1      # one-entry word of cost c
            f[c][j] = acc
    return f


def _word_sums(n: int):
    """(#words, sum |sig|, #palindromes, #antipalindromes, sum |sig| antipal)."""
    f = _signature_table(n)
    sig = np.arange(-n - 1, n + 2, dtype=object)
    even = (sig % 2 == 0)
    row = f[n][0] + f[n][1]
    words = int(sum(row[even]))
    abs_sum = int(sum(row[even] * abs(sig[even])))
    pal = anti = anti_abs = 0
    if n % 2 == 0:
        # palindromes: cost of half word is n/2 and t flips at the middle
        h = f[n // 2][0] + f[n // 2][1]
        pal = int(sum(h))
    else:
        # antipalindromes (w = -reverse(w)): half word cost (n+1)/2
        h = f[(n + 1) // 2][0] + f[(n + 1) // 2][1]
        anti = int(sum(h))
        anti_abs = int(sum(h * abs(2 * sig)))
    return words, abs_sum, pal, anti, anti_abs


def sum_abs_signature(n: int) -> int:
    """Sum of |signature| over rational knots of n crossings, up to mirror.

    Orbits of w under reversal and negation have four words except for
    palindromes (signature 0) and antipalindromes (two words each), so the
    class sum is (sum over words + sum over antipalindromes) / 4.
    """
    if n < 3:
        raise ValueError("n must be at least 3")
    _, abs_sum, _, _, anti_abs = _word_sums(n)
    total = abs_sum + anti_abs
    assert total % 4 == 0
    return total // 4


def count_up_to_mirror(n: int) -> int:
    """Number of rational knots of n crossings, mirror images identified."""
    words, _, pal, anti, _ = _word_sums(n)
    total = words + pal + anti
    assert total % 4 == 0
    return total // 4
