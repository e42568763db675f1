"""Orbits of (1, 0) under monoids of 2x2 matrices with even lower-left entry.

M_{k,l} = [[sgn(k) + 4|kl|, 2|k| sgn(l)], [2|l|, sgn(l)]] with sgn(0) = 1.
Read (p, q) as the fraction p/q.  The strict matrix
P_{k,l} = [[1 + 4kl, 2k], [2l, 1]] prepends (2k, 2l) to the iterated
fraction; M_{k,l} is P_{k,|l|} times diag(1, -1) when l < 0, so it also
negates the tail.  For generators in {-1, 1}^2 the two readings give the
same orbit (the negations only permute the words), and the orbit is the
set of (p, q) with S(p, q) fibered and q even.  For the positive-word
statement they differ, and only the prepending reading is the statement
about positive knots; see verify_pppp.

Every verifier returns a report dict
{proposition, depth, vectors_explored, violations: [{vector, word}], ...}
and never raises on a violation.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import gcd, isqrt
from typing import Iterable, Iterator, NamedTuple

import numpy as np

Vector = tuple  # (p, q)
Gen = tuple  # (k, l)

UNITS = ((1, 1), (1, -1), (-1, 1), (-1, -1))


def sgn(x: int) -> int:
    return 1 if x >= 0 else -1


@dataclass(frozen=True)
class UnimodularMatrix:
    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if abs(self.det) != 1:
            raise ValueError(f"determinant {self.det} is not +-1")
        if self.c % 2:
            raise ValueError("lower-left entry must be even")

    @property
    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    def __matmul__(self, other: "UnimodularMatrix") -> "UnimodularMatrix":
        return UnimodularMatrix(
            self.a * other.a + self.b * other.c, self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c, self.c * other.b + self.d * other.d,
        )

    def apply(self, v: Vector) -> Vector:
        p, q = v
        return (self.a * p + self.b * q, self.c * p + self.d * q)

    def inverse(self) -> "UnimodularMatrix":
        e = self.det
        return UnimodularMatrix(self.d * e, -self.b * e, -self.c * e, self.a * e)

    def rows(self) -> list:
        return [[self.a, self.b], [self.c, self.d]]


def m_kl(k: int, l: int) -> UnimodularMatrix:
    return UnimodularMatrix(sgn(k) + 4 * abs(k * l), 2 * abs(k) * sgn(l), 2 * abs(l), sgn(l))


def prepend_matrix(k: int, l: int) -> UnimodularMatrix:
    """Matrix of x -> [[2k, 2l, x]] acting on (p, q) ~ p/q."""
    return UnimodularMatrix(1 + 4 * k * l, 2 * k, 2 * l, 1)


class OrbitNode(NamedTuple):
    vector: Vector
    word: tuple  # generators (k, l), leftmost factor first
    depth: int


ROOT = (1, 0)


def _normal(v: Vector) -> Vector:
    p, q = v
    return (-p, -q) if p < 0 or (p == 0 and q < 0) else v


def _footnote_ok(v: Vector) -> bool:
    p, q = v
    return v == ROOT or (p > q >= 1 and gcd(p, q) == 1)


def orbit(generators: Iterable[Gen], depth: int, p_max: int | None = None,
          strict: bool = False) -> Iterator[OrbitNode]:
    """Breadth-first products applied to (1, 0), one witness word per vector and depth.

    strict=False uses M_{k,l}; strict=True uses the prepending matrices and
    normalizes p >= 0.  With p_max, vectors with max(|p|, |q|) > p_max are
    dropped.  When no generator has k = 0 the M_{k,l} keep p > q >= 1 and
    gcd 1, and this is asserted on every edge.
    """
    gens = sorted(set(generators))
    mats = [(g, prepend_matrix(*g) if strict else m_kl(*g)) for g in gens]
    check = not strict and all(k != 0 for k, _ in gens)
    frontier = {ROOT: ()}
    yield OrbitNode(ROOT, (), 0)
    for d in range(1, depth + 1):
        nxt: dict = {}
        for v in sorted(frontier):
            w = frontier[v]
            for g, m in mats:
                u = m.apply(v)
                if strict:
                    u = _normal(u)
                if p_max is not None and max(abs(u[0]), abs(u[1])) > p_max:
                    continue
                if check and not _footnote_ok(u):
                    raise AssertionError(f"orbit left p > q >= 1 at {u} from {v} by {g}")
                if u not in nxt:
                    nxt[u] = (g,) + w
        frontier = nxt
        for v in sorted(frontier):
            yield OrbitNode(v, frontier[v], d)


def orbit_vectors(generators: Iterable[Gen], depth: int, **kw) -> set:
    return {node.vector for node in orbit(generators, depth, **kw)}


def u1_form(v: Vector) -> tuple[int, int, int] | None:
    """(m, n, sign) with v = (2mn + sign, 2n^2), m > n >= 1, gcd(m, n) = 1, else None."""
    return _form(v, coprime=True)


def _form(v: Vector, coprime: bool) -> tuple[int, int, int] | None:
    p, q = v
    if q <= 0 or q % 2:
        return None
    n = isqrt(q // 2)
    if 2 * n * n != q or n < 1:
        return None
    for sign in (1, -1):
        if (p - sign) % (2 * n) == 0:
            m = (p - sign) // (2 * n)
            if m > n and (not coprime or gcd(m, n) == 1):
                return m, n, sign
    return None


def _report(prop: str, depth: int, explored: int, violations: list, **extra) -> dict:
    out = {
        "proposition": prop,
        "depth": depth,
        "vectors_explored": explored,
        "violations": [{"vector": list(v), "word": [list(g) for g in w]} for v, w in violations],
    }
    out.update(extra)
    return out


# ---------------------------------------------------------------------------
# positive words: k >= 0, l <= 0


def _pppp_successors(v: Vector, p_max: int) -> Iterator[tuple[Gen, Vector]]:
    """All (k, l) with k >= 0, l <= 0 whose prepending matrix keeps v in the box.

    q' = 2lp + q and p' = p + k(4lp + 2q) are linear in l and k, so the
    admissible ranges are intervals and no generator list is needed.
    """
    p, q = v
    # |2lp + q| <= p_max, l <= 0 (p > 0 always: p stays odd)
    lo = -((p_max + q) // (2 * p))
    hi = min(0, (p_max - q) // (2 * p))
    for l in range(lo, hi + 1):
        c = 4 * l * p + 2 * q
        if c == 0:
            ks = range(0, 1)
        elif c > 0:
            ks = range(max(0, -((p_max + p) // c)), (p_max - p) // c + 1)
        else:
            ks = range(max(0, -((p_max - p) // -c)), (p_max + p) // -c + 1)
        for k in ks:
            u = _normal((p + k * c, 2 * l * p + q))
            if max(abs(u[0]), abs(u[1])) <= p_max:
                yield (k, l), u


def verify_pppp(depth: int = 4, p_max: int = 10 ** 4, literal_check_depth: int = 2,
                literal_bound: int = 3) -> dict:
    """No product of k >= 0, l <= 0 generators sends (1, 0) to (2mn+-1, 2n^2), m > n > 1.

    Products are read as prepending (2k, 2l), i.e. as positive even words.
    Vectors are kept in the box max(|p|, |q|) <= p_max at every step.  Twist
    knot vectors (n = 1) are counted separately.  As a diagnostic the same
    search with the sign-normalized M_{k,l} (|k|, |l| <= literal_bound) is
    run to literal_check_depth and its hits are reported, not asserted.
    """
    frontier = {ROOT: ()}
    seen = 1
    violations = []
    twist = 0
    for d in range(1, depth + 1):
        nxt: dict = {}
        for v in sorted(frontier):
            w = frontier[v]
            for g, u in _pppp_successors(v, p_max):
                if u not in nxt:
                    nxt[u] = (g,) + w
        frontier = nxt
        seen += len(frontier)
        for v in sorted(frontier):
            f = u1_form(v)
            if f is None:
                continue
            if f[1] == 1:
                twist += 1
            else:
                violations.append((v, frontier[v]))
    gens = [(k, l) for k in range(0, literal_bound + 1) for l in range(-literal_bound, 1)]
    literal_hits = sorted(
        (node.vector, node.word)
        for node in orbit(gens, literal_check_depth)
        if (f := u1_form(node.vector)) and f[1] > 1
    )
    return _report(
        "pppp", depth, seen, violations,
        p_max=p_max,
        semantics="prepend (2k, 2l)",
        twist_knot_vectors=twist,
        literal_matrix_hits=[{"vector": list(v), "word": [list(g) for g in w]}
                             for v, w in literal_hits[:20]],
        literal_matrix_hit_count=len(literal_hits),
    )


# ---------------------------------------------------------------------------
# k > 0, l != 0


def verify_k_pos(depth: int = 3, p_max: int = 2000) -> dict:
    """Products of prepending matrices with k > 0, l != 0 reaching (2mn+-1, 2n^2):
    (i) n = g = 1 or g = 2, (ii) at most one l < 0, and one exactly when
    p = 3 mod 4.  The even entries keep |p| increasing, so the box prunes
    nothing that could come back.
    """
    frontier = {ROOT: ()}
    seen = 1
    violations = []
    hits = 0
    for d in range(1, depth + 1):
        nxt: dict = {}
        for v in sorted(frontier):
            p, q = v
            w = frontier[v]
            for l in range(-((p_max + q) // (2 * p)), (p_max - q) // (2 * p) + 1):
                if l == 0:
                    continue
                q2 = 2 * l * p + q
                c = 4 * l * p + 2 * q
                k = 1
                while True:
                    u = _normal((p + k * c, q2))
                    if abs(u[0]) > p_max:
                        break
                    if u not in nxt:
                        nxt[u] = ((k, l),) + w
                    k += 1
        frontier = nxt
        seen += len(frontier)
        for v in sorted(frontier):
            f = u1_form(v)
            if f is None:
                continue
            hits += 1
            _, n, _ = f
            word = frontier[v]
            g = len(word)
            neg = sum(1 for _, l in word if l < 0)
            ok1 = (n == 1 and g == 1) or g == 2
            ok2 = neg <= 1 and ((neg == 1) == (v[0] % 4 == 3))
            if not (ok1 and ok2):
                violations.append((v, word))
    return _report("k_pos", depth, seen, violations, p_max=p_max, u1_vectors=hits)


# ---------------------------------------------------------------------------
# generators {-1, 1}^2: fibered knots


def _dedupe(p: np.ndarray, q: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    order = np.lexsort((q, p))
    p, q = p[order], q[order]
    keep = np.ones(len(p), dtype=bool)
    keep[1:] = (p[1:] != p[:-1]) | (q[1:] != q[:-1])
    return p[keep], q[keep]


def _unit_levels(max_len: int) -> Iterator[tuple[int, np.ndarray, np.ndarray]]:
    """Orbit vectors of M_{+-1,+-1} by word length, as int64 arrays."""
    if max_len > 23:
        raise ValueError("word length beyond int64 range")
    mats = [m_kl(*g) for g in UNITS]
    p = np.array([1], dtype=np.int64)
    q = np.array([0], dtype=np.int64)
    for d in range(1, max_len + 1):
        ps = [m.a * p + m.b * q for m in mats]
        qs = [m.c * p + m.d * q for m in mats]
        p, q = _dedupe(np.concatenate(ps), np.concatenate(qs))
        yield d, p, q


def _form_candidates(p: np.ndarray, q: np.ndarray) -> list[Vector]:
    """Vectors whose q is twice a square > 2 (cheap vectorized prefilter)."""
    h = q // 2
    n = np.round(np.sqrt(h.astype(np.float64))).astype(np.int64)
    mask = (q % 2 == 0) & (n > 1) & (n * n == h)
    return [(int(a), int(b)) for a, b in zip(p[mask], q[mask])]


def find_word(v: Vector, depth: int, generators=UNITS) -> tuple | None:
    """A word of the given length with M_word (1, 0) = v, searched backwards."""
    inverses = [(g, m_kl(*g).inverse()) for g in generators]

    def back(u, d):
        if d == 0:
            return () if u == ROOT else None
        for g, inv in inverses:
            w = inv.apply(u)
            if _footnote_ok(w) and w[0] < u[0]:
                rest = back(w, d - 1)
                if rest is not None:
                    return (g,) + rest
        return None

    return back(v, depth)


def verify_cnj1(max_len: int = 12, closure_depth: int = 8) -> dict:
    """No M_{+-1,+-1} product gives (2mn+-1, 2n^2) with m > n > 1 odd and coprime.

    Hits with m, n odd but not coprime are reported by word length.  The
    closure of each orbit level under q -> +-1/q (even representative) is
    checked up to closure_depth.
    """
    violations = []
    odd_hits: Counter = Counter()
    explored = 1
    closure_ok = True
    for d, p, q in _unit_levels(max_len):
        explored += len(p)
        for v in _form_candidates(p, q):
            f = _form(v, coprime=False)
            if f is None:
                continue
            m, n, _ = f
            if m % 2 == 0 or n % 2 == 0 or n == 1:
                continue
            if gcd(m, n) == 1:
                violations.append((v, find_word(v, d)))
            else:
                odd_hits[d] += 1
        if d <= closure_depth:
            level = set(zip(p.tolist(), q.tolist()))
            closure_ok &= all(_inverse_partner(v) in level for v in level)
    lengths = sorted(odd_hits)
    return _report(
        "cnj1", max_len, explored, violations,
        non_coprime_odd_hits={str(k): odd_hits[k] for k in lengths},
        non_coprime_only_odd_square_lengths=all(isqrt(k) ** 2 == k and k % 2 for k in lengths),
        closure_checked_to=min(closure_depth, max_len),
        closure_ok=closure_ok,
    )


def _inverse_partner(v: Vector) -> Vector:
    p, q = v
    r = pow(q, -1, p)
    return (p, r if r % 2 == 0 else p - r)


def fibered_pairs(g_max: int) -> set:
    """(p, q), q even in (0, p), S(p, q) fibered of genus <= g_max; both mirrors."""
    from .census import enumerate_even_words
    from .fraction_core import equivalents, word_fraction

    out = set()
    for n in range(3, 4 * g_max + 1):
        for w in enumerate_even_words(n, fibered_only=True):
            if len(w) <= 2 * g_max:
                out |= {tuple(e) for e in equivalents(word_fraction(w), up_to_mirror=True)}
    return out


def verify_M1_1(g_max: int = 5) -> dict:
    """Orbit of M_{+-1,+-1} to depth g_max equals the fibered pairs of genus <= g_max."""
    gens = UNITS
    nodes = list(orbit(gens, g_max))
    orbit_set = {n.vector for n in nodes}
    census_set = fibered_pairs(g_max) | {ROOT}
    only_orbit = sorted(orbit_set - census_set)
    only_census = sorted(census_set - orbit_set)
    words = {n.vector: n.word for n in nodes}
    by_genus = Counter(n.depth for n in nodes)
    return _report(
        "M1_1", g_max, len(nodes),
        [(v, words[v]) for v in only_orbit],
        equal=not only_orbit and not only_census,
        orbit_size=len(orbit_set),
        census_size=len(census_set),
        missing_from_orbit=[list(v) for v in only_census],
        vectors_by_depth={str(k): by_genus[k] for k in sorted(by_genus)},
    )


def verify_closure(depth: int = 6) -> dict:
    """Each orbit level of M_{+-1,+-1} contains (p, +-1/q) along with (p, q)."""
    explored = 1
    violations = []
    levels: dict = {}
    for node in orbit(UNITS, depth):
        levels.setdefault(node.depth, {})[node.vector] = node.word
    for d, level in levels.items():
        if d == 0:
            continue
        explored += len(level)
        for v, w in sorted(level.items()):
            if _inverse_partner(v) not in level:
                violations.append((v, w))
    return _report("closure", depth, explored, violations)


VERIFIERS = {
    "pppp": verify_pppp,
    "cnj1": verify_cnj1,
    "m1_1": verify_M1_1,
    "k_pos": verify_k_pos,
    "closure": verify_closure,
}
