"""Simplices of cyclic polytopes versus interval modules of A^(d)_n."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import cycpoly as cp
from . import homcalc as hc
from . import tilting as tl
from .algebra import auslander_type_a
from .oset import enumerate_objects, is_oseq, KupischSeries


def simplex_to_label(n, d, sigma):
    sigma = tuple(sigma)
    if len(sigma) != d + 1 or not cp.gap_rule(sigma) or min(sigma) < 0 or max(sigma) > n + 2 * d - 1:
        raise ValueError(f"{sigma} is not a non-lower simplex of C({n + 2 * d},{2 * d})")
    return tuple(sigma[j] - 2 * j for j in range(d, -1, -1))


def label_to_simplex(n, d, lam):
    lam = tuple(lam)
    if len(lam) != d + 1 or not is_oseq(lam) or lam[-1] < 0 or lam[0] > n - 1:
        raise ValueError(f"{lam} is not in os^({d + 1})_{n}")
    return tuple(lam[d - j] + 2 * j for j in range(d + 1))


@dataclass
class Dictionary:
    n: int
    d: int
    p: int
    to_label: dict
    to_simplex: dict

    def to_json(self):
        return [{"simplex": list(s), "label": list(l)} for s, l in sorted(self.to_label.items())]


def dictionary(n, d):
    p = n + 2 * d
    to_label = {s: simplex_to_label(n, d, s) for s in cp.nonlower_simplices(p, d)}
    return Dictionary(n, d, p, to_label, {v: k for k, v in to_label.items()})


def _setup(n, d, p=None):
    A = auslander_type_a(d, n, p)
    coll = tl.canonical_ct_candidate(A, d)
    return A, coll


def ext_compatibility_check(n, d, p=None):
    A, coll = _setup(n, d, p)
    dic = dictionary(n, d)
    mods = {lab: coll.members[coll.index(lab)] for lab in coll.labels}
    mismatches = []
    pairs = 0
    ext_table = {}
    for s, t in itertools.combinations(sorted(dic.to_label), 2):
        pairs += 1
        X, Y = mods[dic.to_label[s]], mods[dic.to_label[t]]
        e = (hc.ext_dim(X, Y, d), hc.ext_dim(Y, X, d))
        ext_table[(s, t)] = e
        if bool(any(e)) != cp.intersecting(s, t):
            mismatches.append((s, t))
    upper = set(cp.upper_simplices(dic.p, d))
    pi_mismatch = []
    for s, lab in dic.to_label.items():
        M = mods[lab]
        pi = hc.is_projective(M) and hc.is_injective(M)
        if pi != (s in upper):
            pi_mismatch.append(s)
    return {
        "n": n,
        "d": d,
        "pairs": pairs,
        "mismatches": mismatches,
        "projective_injective_mismatches": pi_mismatch,
        "ext_dims": ext_table,
        "ok": not mismatches and not pi_mismatch and len(dic.to_label) == len(coll),
    }


def triangulation_to_tilting(n, d, T, coll=None):
    if T.p != n + 2 * d or T.d != d:
        raise ValueError("triangulation of the wrong polytope")
    if coll is None:
        _, coll = _setup(n, d)
    return coll.sub(sorted(coll.index(simplex_to_label(n, d, s)) for s in T.simplices))


def flip_vs_mutation_check(n, d, p=None):
    A = auslander_type_a(d, n, p)
    ctx = tl.tilting_context(A, d)
    coll = ctx.collection
    tilts = {tuple(sorted(t)) for t in tl.tilting_enumerate(A, d, ctx)}
    tris = cp.triangulations(n + 2 * d, d)

    def idx(T):
        return tuple(sorted(coll.index(simplex_to_label(n, d, s)) for s in T.simplices))

    images = [idx(T) for T in tris]
    bad_squares = []
    squares = 0
    for T, img in zip(tris, images):
        for s in T.sorted():
            X = coll.index(simplex_to_label(n, d, s))
            T2 = cp.bistellar_flip(T, s)
            try:
                M2, _, seq = tl.tilting_mutate(ctx, img, X)
            except tl.NoExchangePartner:
                M2, seq = None, None
            squares += 1
            if (T2 is None) != (M2 is None) or (T2 is not None and idx(T2) != M2):
                bad_squares.append((T.to_json(), s))
            elif seq is not None and not seq.is_exact():
                bad_squares.append((T.to_json(), s))
    return {
        "n": n,
        "d": d,
        "triangulations": len(tris),
        "tilting": len(tilts),
        "bijection": len(set(images)) == len(images) and set(images) == tilts,
        "all_tilting": all(ctx.is_tilting(i) for i in images),
        "squares": squares,
        "bad_squares": bad_squares,
        "ok": len(set(images)) == len(images) and set(images) == tilts and not bad_squares,
    }


def cluster_model(n, d):
    p = n + 2 * d + 1
    objects = cp.internal_simplices(p, d)
    obj_set = set(objects)
    intersect = [(s, t) for s, t in itertools.combinations(objects, 2) if cp.intersecting(s, t)]
    tris, edges = cp.flip_graph(p, d)
    sets = [tuple(sorted(t.simplices & obj_set)) for t in tris]
    graph = []
    for i, j, removed, added in edges:
        if removed in obj_set and added in obj_set:
            graph.append((i, j))
    return {
        "p": p,
        "objects": objects,
        "intersect": intersect,
        "cluster_tilting_sets": sets,
        "mutation_graph": graph,
    }


def is_cycle(n_nodes, edges):
    deg = [0] * n_nodes
    for i, j in edges:
        deg[i] += 1
        deg[j] += 1
    return n_nodes >= 3 and all(v == 2 for v in deg) and cp.is_connected(n_nodes, edges)
