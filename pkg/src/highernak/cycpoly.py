"""Cyclic polytopes C(p, 2d) on the moment curve and their triangulations.

Vertices are the integers ``0..p-1``; vertex ``t`` sits at ``(t, t^2, ..., t^delta)``.
All geometry is exact integer arithmetic.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from functools import lru_cache
from math import comb

BOUNDS = {1: 12, 2: 10, 3: 9}


class BoundExceeded(ValueError):
    pass


def moment_point(t, delta):
    return tuple(t**k for k in range(1, delta + 1))


def det(rows):
    """Exact integer determinant (Bareiss)."""
    m = [list(r) for r in rows]
    n = len(m)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[-1][-1]


def normal(points):
    """Integer normal of the hyperplane through ``delta`` affinely independent points."""
    base = points[0]
    rows = [[a - b for a, b in zip(q, base)] for q in points[1:]]
    delta = len(base)
    return tuple((-1) ** k * det([r[:k] + r[k + 1 :] for r in rows]) for k in range(delta))


def side(nrm, base, q):
    return sum(a * (b - c) for a, b, c in zip(nrm, q, base))


def gale_even(S, p):
    S = set(S)
    outside = [v for v in range(p) if v not in S]
    for i, j in itertools.combinations(outside, 2):
        if sum(1 for s in S if i < s < j) % 2:
            return False
    return True


@lru_cache(maxsize=None)
def facets(p, delta):
    """``[(vertex tuple, "lower" | "upper")]`` for the facets of C(p, delta)."""
    if p <= delta:
        raise ValueError(f"C({p},{delta}) is degenerate")
    pts = [moment_point(t, delta) for t in range(p)]
    out = []
    for S in itertools.combinations(range(p), delta):
        if not gale_even(S, p):
            continue
        nrm = normal([pts[s] for s in S])
        inside = next(q for q in range(p) if q not in S)
        if side(nrm, pts[S[0]], pts[inside]) < 0:
            nrm = tuple(-x for x in nrm)
        # the interior lies on the positive side; the outward normal is -nrm
        out.append((S, "lower" if nrm[-1] > 0 else "upper"))
    return out


def hull_facets(p, delta):
    """Facets by brute force: all other points strictly on one side (oracle)."""
    pts = [moment_point(t, delta) for t in range(p)]
    out = []
    for S in itertools.combinations(range(p), delta):
        nrm = normal([pts[s] for s in S])
        if not any(nrm):
            continue
        sides = {(side(nrm, pts[S[0]], pts[q]) > 0) for q in range(p) if q not in S}
        zeros = any(side(nrm, pts[S[0]], pts[q]) == 0 for q in range(p) if q not in S)
        if len(sides) == 1 and not zeros:
            out.append(S)
    return out


def _facet_sets(p, delta, kind=None):
    return [frozenset(S) for S, k in facets(p, delta) if kind is None or k == kind]


def gap_rule(sigma):
    return all(b >= a + 2 for a, b in zip(sigma, sigma[1:]))


def is_lower(p, d, sigma):
    s = set(sigma)
    return any(s <= F for F in _facet_sets(p, 2 * d, "lower"))


def is_upper(p, d, sigma):
    s = set(sigma)
    return not is_lower(p, d, sigma) and any(s <= F for F in _facet_sets(p, 2 * d, "upper"))


def is_internal(p, d, sigma):
    s = set(sigma)
    return not any(s <= F for F in _facet_sets(p, 2 * d))


@lru_cache(maxsize=None)
def nonlower_simplices(p, d):
    if p < 2 * d + 1:
        raise ValueError("need p >= 2d+1")
    return [s for s in itertools.combinations(range(p), d + 1) if not is_lower(p, d, s)]


def upper_simplices(p, d):
    return [s for s in nonlower_simplices(p, d) if is_upper(p, d, s)]


def internal_simplices(p, d):
    return [s for s in nonlower_simplices(p, d) if is_internal(p, d, s)]


def intertwines(s, t):
    """``s_0 < t_0 < s_1 < t_1 < ... < s_d < t_d``."""
    if len(s) != len(t):
        raise ValueError("simplices of different dimension")
    seq = [v for pair in zip(s, t) for v in pair]
    return all(a < b for a, b in zip(seq, seq[1:]))


def intersecting(s, t):
    return intertwines(s, t) or intertwines(t, s)


@dataclass(frozen=True)
class Triangulation:
    p: int
    d: int
    simplices: frozenset

    def __post_init__(self):
        object.__setattr__(self, "simplices", frozenset(tuple(s) for s in self.simplices))

    def sorted(self):
        return sorted(self.simplices)

    def __len__(self):
        return len(self.simplices)

    def to_json(self):
        return [list(s) for s in self.sorted()]

    def dumps(self):
        return json.dumps(self.to_json())


def expected_size(p, d):
    return comb(p - d - 1, d)


def _check_bound(p, d, bound):
    lim = bound if bound is not None else BOUNDS.get(d, 8)
    if p > lim:
        raise BoundExceeded(f"p={p} exceeds the enumeration bound {lim} for d={d}")


def maximal_compatible_sets(items, clash):
    """All maximal sets of pairwise non-clashing items (Bron-Kerbosch on bitsets)."""
    n = len(items)
    nbr = [0] * n
    for i in range(n):
        for j in range(n):
            if i != j and not clash(items[i], items[j]):
                nbr[i] |= 1 << j
    out = []

    def bk(r, pset, xset):
        if not pset and not xset:
            out.append(r)
            return
        pivot_pool = pset | xset
        u = pivot_pool.bit_length() - 1
        cand = pset & ~nbr[u]
        while cand:
            v = cand.bit_length() - 1
            cand &= ~(1 << v)
            bk(r | (1 << v), pset & nbr[v], xset & nbr[v])
            pset &= ~(1 << v)
            xset |= 1 << v

    bk(0, (1 << n) - 1, 0)
    return [[items[i] for i in range(n) if r >> i & 1] for r in out]


@lru_cache(maxsize=None)
def maximal_collections(p, d):
    """All maximal non-intertwining collections of non-lower d-simplices."""
    sets = maximal_compatible_sets(nonlower_simplices(p, d), intersecting)
    return tuple(sorted((tuple(sorted(s)) for s in sets)))


@lru_cache(maxsize=None)
def _triangulations(p, d):
    # maximal collections can fall short of a triangulation once d >= 3
    full = expected_size(p, d)
    sets = [s for s in maximal_collections(p, d) if len(s) == full]
    return tuple(sorted((Triangulation(p, d, s) for s in sets), key=lambda t: t.sorted()))


def triangulations(p, d, bound=None):
    _check_bound(p, d, bound)
    return list(_triangulations(p, d))


def flip_partners(T, sigma):
    if sigma not in T.simplices:
        raise KeyError(f"{sigma} is not in the triangulation")
    rest = T.simplices - {sigma}
    return [
        s
        for s in nonlower_simplices(T.p, T.d)
        if s not in T.simplices and not any(intersecting(s, t) for t in rest)
    ]


def bistellar_flip(T, sigma):
    """The triangulation with ``sigma`` replaced, or ``None`` if not flippable."""
    sigma = tuple(sigma)
    cand = flip_partners(T, sigma)
    if len(cand) != 1:
        return None
    return Triangulation(T.p, T.d, (T.simplices - {sigma}) | {cand[0]})


def flip_graph(p, d, bound=None):
    """``(triangulations, edges)`` with edges ``(i, j, removed, added)``."""
    ts = triangulations(p, d, bound)
    index = {t.simplices: i for i, t in enumerate(ts)}
    edges = []
    for i, t in enumerate(ts):
        for s in t.sorted():
            t2 = bistellar_flip(t, s)
            if t2 is not None:
                j = index[t2.simplices]
                if i < j:
                    (added,) = t2.simplices - t.simplices
                    edges.append((i, j, s, added))
    return ts, edges


def is_connected(n, edges):
    if n == 0:
        return True
    adj = {i: set() for i in range(n)}
    for e in edges:
        adj[e[0]].add(e[1])
        adj[e[1]].add(e[0])
    seen, stack = {0}, [0]
    while stack:
        for v in adj[stack.pop()] - seen:
            seen.add(v)
            stack.append(v)
    return len(seen) == n


def flip_graph_dot(p, d):
    ts, edges = flip_graph(p, d)
    lines = ["graph flips {"]
    for i, t in enumerate(ts):
        lines.append(f'  {i} [label="{t.to_json()}"];')
    for i, j, _, _ in edges:
        lines.append(f"  {i} -- {j};")
    lines.append("}")
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# windows of the apeirotope C(infinity, 2d)


def window_triangulation_check(collection, a, b, d):
    """Do the members inside ``[a, b]``, with the window's upper simplices,
    form a triangulation of the polytope on ``a..b``?"""
    p = b - a + 1
    if p < 2 * d + 1:
        return False
    inside = {tuple(s) for s in collection if a <= min(s) and max(s) <= b}
    local = {tuple(v - a for v in s) for s in inside}
    local |= set(upper_simplices(p, d))
    if not all(gap_rule(s) for s in local):
        return False
    if any(intersecting(s, t) for s, t in itertools.combinations(sorted(local), 2)):
        return False
    return len(local) == expected_size(p, d)


def ind_finite_probe(collection, I, d, search_bound):
    """First window ``[a, b]`` containing ``I`` that passes the window check."""
    lo, hi = min(I), max(I)
    windows = [(a, b) for a in range(lo - search_bound, lo + 1) for b in range(hi, hi + search_bound + 1)]
    windows.sort(key=lambda w: (w[1] - w[0], w[0]))
    for a, b in windows:
        if window_triangulation_check(collection, a, b, d):
            return (a, b)
    return None
