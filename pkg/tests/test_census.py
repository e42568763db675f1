from itertools import product
from math import gcd

import pytest

from ratknot.census import (
    CensusFilter,
    census,
    census_u1_by_determinant,
    count_up_to_mirror,
    enumerate_achiral_words,
    enumerate_even_words,
    knot_flags,
    sum_abs_signature,
)
from ratknot.fraction_core import canonical_word, knot_class, word_fraction
from ratknot.invariants import crossing_number

from oracles import brute_census, brute_row, is_u1_arith, residue_class


def all_even_words(n):
    """Every even word whose crossing number is n, by exhaustive search."""
    out = set()
    for length in range(2, n + 1, 2):
        mags = [range(2, 2 * n + 1, 2)] * length
        for ms in product(*mags):
            if sum(ms) > 2 * n:
                continue
            for signs in product((1, -1), repeat=length):
                w = tuple(s * m for s, m in zip(signs, ms))
                if crossing_number(w) == n:
                    out.add(w)
    return out


def test_enumerate_examples():
    assert list(enumerate_even_words(3)) == [(2, -2)]
    assert list(enumerate_even_words(4)) == [(2, 2)]
    five = {canonical_word(w) for w in enumerate_even_words(5)}
    assert five == {canonical_word((2, -2, 2, -2)), canonical_word((4, -2))}
    assert len(list(enumerate_even_words(5))) == 2


@pytest.mark.parametrize("n", range(3, 10))
def test_enumerate_against_exhaustive_words(n):
    words = list(enumerate_even_words(n))
    assert len(words) == len(set(words))
    want = {canonical_word(w) for w in all_even_words(n)}
    assert {canonical_word(w) for w in words} == want
    assert len(words) == len(brute_census(n)[n])


@pytest.mark.parametrize("n", range(3, 15))
def test_enumerate_matches_pair_census(n):
    got = sorted(word_fraction(w)[0] for w in enumerate_even_words(n))
    assert got == sorted(k["p"] for k in brute_census(14)[n])
    assert len(got) == count_up_to_mirror(n)


def test_census_examples():
    assert census(9, CensusFilter({"fibered"})).total == 7
    assert census(16, CensusFilter({"fibered", "achiral"})).total == 13
    assert census(10, CensusFilter({"sigma0"}, count_chiral_pairs_twice=True)).total == 29


ROWS = {
    "fibered": lambda k: k["fibered"],
    "achiral": lambda k: k["achiral"],
    "fibered+achiral": lambda k: k["fibered"] and k["achiral"],
    "u1": lambda k: k["u1"],
    "achiral+u1": lambda k: k["achiral"] and k["u1"],
    "fibered+u1": lambda k: k["fibered"] and k["u1"],
    "positive": lambda k: k["positive"],
}


@pytest.mark.parametrize("n", range(3, 15))
def test_census_rows_against_oracle(n):
    rep = census(n)
    assert rep.total == len(brute_census(14)[n])
    for name, pred in ROWS.items():
        assert rep.flag_counts[name] == brute_row(n, pred), name
    twice = census(n, CensusFilter({"sigma0"}, count_chiral_pairs_twice=True))
    assert twice.total == brute_row(n, lambda k: k["sigma"] == 0, pairs_twice=True)


@pytest.mark.parametrize("n", [5, 8, 11])
def test_census_report_sums(n):
    rep = census(n)
    assert sum(rep.by_genus.values()) == rep.total
    twice = census(n, CensusFilter(count_chiral_pairs_twice=True))
    assert sum(twice.by_signature.values()) == twice.total
    # the signature distribution of all knots with both mirrors is symmetric
    assert all(twice.by_signature[s] == twice.by_signature.get(-s) for s in twice.by_signature)
    gen = sum(k["genus"] for k in brute_census(11)[n])
    assert rep.mean_genus * rep.total == gen


def test_filters():
    rep = census(10, CensusFilter({"u1"}, {"fibered"}))
    assert rep.total == brute_row(10, lambda k: k["u1"] and not k["fibered"])
    with pytest.raises(ValueError):
        CensusFilter({"u1"}, {"u1"})
    with pytest.raises(ValueError):
        CensusFilter({"colourful"})
    with pytest.raises(ValueError):
        census(2)


def test_achiral_enumeration():
    for n in range(4, 15, 2):
        words = list(enumerate_achiral_words(n))
        assert all(w == w[::-1] for w in words)
        assert len(words) == brute_row(n, lambda k: k["achiral"])
    assert list(enumerate_achiral_words(7)) == []


def test_threads_do_not_change_the_report():
    for filt in (CensusFilter(), CensusFilter({"u1"}, count_chiral_pairs_twice=True)):
        a = census(12, filt, threads=1).to_dict()
        b = census(12, filt, threads=3).to_dict()
        assert a == b


def test_knot_flags_agree_with_oracle():
    for k in brute_census(10)[10]:
        fl = knot_flags(knot_class(k["p"], k["q"]).even_word)
        for f in ("fibered", "achiral", "u1", "positive"):
            assert fl[f] == k[f]
        assert abs(fl["signature"]) == abs(k["sigma"])


def test_census_u1_by_determinant_examples():
    assert census_u1_by_determinant(5) == 1
    assert census_u1_by_determinant(29) == 2
    assert census_u1_by_determinant(9) == 1
    with pytest.raises(ValueError):
        census_u1_by_determinant(8)


def test_census_u1_by_determinant_against_oracle():
    for p in range(5, 302, 2):
        classes = set()
        for q in range(1, p):
            if gcd(p, q) == 1 and is_u1_arith(p, q):
                classes.add(residue_class(p, q, up_to_mirror=True))
        assert census_u1_by_determinant(p) == len(classes), p


def test_sum_abs_signature():
    assert sum_abs_signature(3) == 2
    assert sum_abs_signature(4) == 0
    for n in range(3, 15):
        assert sum_abs_signature(n) == sum(abs(k["sigma"]) for k in brute_census(14)[n])
    for n in range(15, 21):
        assert sum_abs_signature(n) == census(n).sum_abs_signature
