"""Independent brute-force oracles used to cross-check the engine."""

from __future__ import annotations

import itertools

import numpy as np

from . import exactla as la
from .oset import canonical, enumerate_objects, in_os_l, is_oseq


def _step(x, i):
    return tuple(v + (1 if j == i else 0) for j, v in enumerate(x))


def path_hom_dims(d, kupisch, max_len=None):
    """Hom dimensions by counting commutation classes of arrow paths.

    Paths run in the covering quiver (lifted tuples, arrows ``x -> x + e_i``)
    and are taken modulo commutativity squares; a class vanishes when one of
    its paths contains a length-two zero relation (a square with a missing
    corner) or, for ``d = 1``, a Kupisch relation path ``j - l_j ~> j``.
    Returns ``{(x, y): dim}`` keyed by canonical objects.

    The search stops at ``max_len``; the default is certified afterwards by
    checking that every class of that length is already zero.
    """
    objs = enumerate_objects(d, kupisch)
    n = kupisch.n
    cyc = kupisch.cyclic
    ok = (lambda z: is_oseq(z) and in_os_l(z, kupisch))
    certify = max_len is None
    if max_len is None:
        max_len = d * (max(kupisch.entries) - 1) + 1
    norm = (lambda z: canonical(z, n)) if cyc else (lambda z: z)

    def zero_pair(z, i, j):
        # the path z -> z+e_i -> z+e_i+e_j with i != j dies if the other corner is missing
        return i != j and not ok(_step(z, j))

    def kupisch_zero(x, path):
        if d != 1:
            return False
        lo, hi = x[0], x[0] + len(path)
        return any(j - kupisch[j] >= lo for j in range(lo + 1, hi + 1))

    out = {}
    for x in objs:
        by_end: dict = {}

        def walk(z, path):
            if path:
                by_end.setdefault(z, []).append(tuple(path))
            if len(path) == max_len:
                return
            for i in range(d):
                z2 = _step(z, i)
                if ok(z2):
                    path.append(i)
                    walk(z2, path)
                    path.pop()

        walk(x, [])
        out[(x, x)] = out.get((x, x), 0) + 1
        for y, paths in by_end.items():
            cls = _classes(x, paths, ok)
            alive = 0
            for members in cls:
                if not any(_has_zero(x, pth, zero_pair) or kupisch_zero(x, pth) for pth in members):
                    alive += 1
                    if certify and len(members[0]) == max_len:
                        raise RuntimeError("path bound too small")
            key = (x, norm(y))
            out[key] = out.get(key, 0) + alive
    return {k: v for k, v in out.items() if v}


def path_is_nonzero(d, kupisch, x, word):
    """Is the path from the lift ``x`` along the letters ``word`` nonzero?

    ``word`` lists coordinate indices (``i`` raises coordinate ``i``).  All
    lattice paths with the same endpoints are enumerated, grouped into
    commutation classes, and the class of ``word`` is tested for a zero member.
    """
    x = tuple(x)
    ok = (lambda z: is_oseq(z) and in_os_l(z, kupisch))
    z = x
    for i in word:
        z = _step(z, i)
        if not ok(z):
            return False
    if not ok(x):
        return False
    paths = set()

    def walk(z, counts, path):
        if not any(counts):
            paths.add(tuple(path))
            return
        for i in range(d):
            if counts[i]:
                z2 = _step(z, i)
                if ok(z2):
                    counts[i] -= 1
                    path.append(i)
                    walk(z2, counts, path)
                    path.pop()
                    counts[i] += 1

    walk(x, [list(word).count(i) for i in range(d)], [])
    word = tuple(word)

    def zero_pair(z, i, j):
        return i != j and not ok(_step(z, j))

    def kupisch_zero(pth):
        if d != 1:
            return False
        lo, hi = x[0], x[0] + len(pth)
        return any(j - kupisch[j] >= lo for j in range(lo + 1, hi + 1))

    for members in _classes(x, sorted(paths), ok):
        if word in members:
            return not any(_has_zero(x, pth, zero_pair) or kupisch_zero(pth) for pth in members)
    raise AssertionError("path missing from its own class")


def _has_zero(x, path, zero_pair):
    z = x
    for i, j in zip(path, path[1:]):
        if zero_pair(z, i, j):
            return True
        z = _step(z, i)
    return False


def _classes(x, paths, ok):
    paths = sorted(set(paths))
    idx = {p: k for k, p in enumerate(paths)}
    parent = list(range(len(paths)))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for pth in paths:
        z = x
        for k in range(len(pth) - 1):
            i, j = pth[k], pth[k + 1]
            if i != j and ok(_step(z, j)):
                other = pth[:k] + (j, i) + pth[k + 2 :]
                if other in idx:
                    parent[find(idx[pth])] = find(idx[other])
            z = _step(z, i)
    groups: dict = {}
    for pth in paths:
        groups.setdefault(find(idx[pth]), []).append(pth)
    return list(groups.values())


# ---------------------------------------------------------------------------
# quiver with homogeneous quadratic relations


def quiver_algebra_dims(vertices, arrows, relations, p=101, max_len=12):
    """Cartan data of ``kQ/I`` for homogeneous relations of length two.

    ``arrows``: ``{name: (source, target)}``; ``relations``: list of
    ``{path: coeff}`` with paths as tuples of arrow names in travel order.
    Returns ``{(source, target): dim}``.
    """
    def paths_of_len(k):
        if k == 0:
            return [((), v, v) for v in vertices]
        if k == 1:
            return [((a,), u, w) for a, (u, w) in arrows.items()]
        return [
            (pth + (a,), s, w)
            for pth, s, t in paths_of_len(k - 1)
            for a, (u, w) in arrows.items()
            if u == t
        ]

    dims: dict = {}
    for v in vertices:
        dims[(v, v)] = 1
    for k in range(1, max_len + 1):
        plist = paths_of_len(k)
        if not plist:
            break
        index = {pth: i for i, (pth, _, _) in enumerate(plist)}
        rows = []
        if k >= 2:
            for r in relations:
                for left in range(k - 1):
                    for u in _all_words(arrows, left):
                        for w in _all_words(arrows, k - 2 - left):
                            vec = np.zeros(len(plist), dtype=np.int64)
                            hit = False
                            for pth, c in r.items():
                                full = u + pth + w
                                if full in index:
                                    vec[index[full]] = (vec[index[full]] + c) % p
                                    hit = True
                            if hit and vec.any():
                                rows.append(vec)
        total_alive = 0
        for (s, t) in {(s, t) for _, s, t in plist}:
            cols = [i for i, (_, s2, t2) in enumerate(plist) if (s2, t2) == (s, t)]
            if rows:
                sub = np.array(rows)[:, cols]
                r = la.rank_dense(sub, p)
            else:
                r = 0
            alive = len(cols) - r
            if alive:
                dims[(s, t)] = dims.get((s, t), 0) + alive
                total_alive += alive
        if total_alive == 0:
            break
    return dims


def _all_words(arrows, k):
    words = [()]
    for _ in range(k):
        words = [w + (a,) for w in words for a in arrows if not w or arrows[w[-1]][1] == arrows[a][0]]
    return words


def preprojective_a3_dims(p=101):
    """The preprojective algebra of A_3 from its quiver and relations."""
    arrows = {"x1": (1, 2), "x2": (2, 3), "y1": (2, 1), "y2": (3, 2)}
    relations = [{("x1", "y1"): 1}, {("y2", "x2"): 1}, {("y1", "x1"): 1, ("x2", "y2"): -1}]
    return quiver_algebra_dims([1, 2, 3], arrows, relations, p)


# ---------------------------------------------------------------------------
# classical Nakayama oracles


def nakayama_interval_dims(n, a, b):
    """Dimension vector of the interval ``[b, a]`` for linear A_n."""
    return [1 if b <= x <= a else 0 for x in range(n)]


def catalan(k):
    from math import comb

    return comb(2 * k, k) // (k + 1)


def catalan_recursive(k, _memo={0: 1}):
    if k not in _memo:
        _memo[k] = sum(catalan_recursive(i) * catalan_recursive(k - 1 - i) for i in range(k))
    return _memo[k]


def box_points(x, y):
    return list(itertools.product(*[range(a, b + 1) for a, b in zip(x, y)]))
