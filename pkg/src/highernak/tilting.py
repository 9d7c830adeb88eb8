"""Cluster-tilting collections, endomorphism categories and tilting mutation."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import exactla as la
from . import homcalc as hc
from .algebra import BasisMorphism, FiniteCategory
from .oset import enumerate_objects


class NoExchangePartner(RuntimeError):
    pass


@dataclass
class ModuleCollection:
    algebra: object
    members: list
    labels: list = None

    def __post_init__(self):
        if self.labels is None:
            self.labels = [m.name or i for i, m in enumerate(self.members)]
        if len(self.labels) != len(self.members):
            raise ValueError("one label per member")

    def __len__(self):
        return len(self.members)

    def index(self, label):
        return self.labels.index(label)

    def validate(self):
        for m in self.members:
            m.check()
        for i in range(len(self.members)):
            for j in range(i):
                if hc.isomorphic(self.members[i], self.members[j]):
                    raise ValueError(f"members {self.labels[j]} and {self.labels[i]} are isomorphic")
        return True

    def without(self, k):
        keep = [i for i in range(len(self)) if i != k]
        return ModuleCollection(self.algebra, [self.members[i] for i in keep], [self.labels[i] for i in keep])

    def sub(self, idx):
        return ModuleCollection(self.algebra, [self.members[i] for i in idx], [self.labels[i] for i in idx])


def canonical_ct_candidate(A, d=None):
    """All interval modules indexed by ``os^(d+1)`` of the Kupisch series."""
    d = A.d if d is None else d
    labels = enumerate_objects(d + 1, A.kupisch)
    return ModuleCollection(A, [hc.interval_module(A, lam) for lam in labels], list(labels))


def find_member(collection, X):
    """Index of the member isomorphic to ``X``, or ``None``."""
    for i, M in enumerate(collection.members):
        if M.dims == X.dims and hc.isomorphic(M, X):
            return i
    return None


# ---------------------------------------------------------------------------
# Ext computations


def rigidity_profile(collection, d, bound):
    if bound < d:
        raise ValueError("bound must be at least d")
    total = hc.direct_sum(*collection.members)
    out = {}
    for i in range(1, bound + 1):
        out[i] = sum(hc.ext_dim(X, total, i, max_deg=bound + 1) for X in collection.members)
    return out


def dz_supported(profile, d):
    return all(v == 0 for i, v in profile.items() if i % d)


# ---------------------------------------------------------------------------
# endomorphism categories


class EndCategory(FiniteCategory):
    """``Hom(i, j) = Hom(M_i, M_j)``, with a basis of words in radical generators."""

    def __init__(self, members, labels=None, p=None):
        members = list(members)
        super().__init__(labels if labels is not None else list(range(len(members))), p or members[0].p)
        self.members = members
        m = len(members)
        full = {(i, j): hc.hom_space(members[i], members[j]) for i in range(m) for j in range(m)}
        rad = {}
        for (i, j), hs in full.items():
            rad[(i, j)] = hc.radical_endos(members[i]) if i == j else hs
        rad2 = {}
        for i in range(m):
            for k in range(m):
                prods = []
                for j in range(m):
                    for f in rad[(i, j)]:
                        for g in rad[(j, k)]:
                            prods.append(g @ f)
                rad2[(i, k)] = prods
        self._maps: list = []
        words: dict = {}
        for i in range(m):
            self._new(i, i, (), hc.RepMap.identity(members[i]))
        for (i, k), rs in rad.items():
            for f in hc._complement_maps(rs, rad2[(i, k)]):
                b = self._new(i, k, None, f)
                self.arrows.append(b)
        self.identities = list(range(m))
        # breadth-first word basis
        frontier = list(self.arrows)
        while frontier:
            nxt = []
            for b in frontier:
                bb = self.basis[b]
                for a in list(self.arrows):
                    ba = self.basis[a]
                    if ba.source != bb.target:
                        continue
                    cand = self._maps[a] @ self._maps[b]
                    if cand.is_zero() or not self._independent(bb.source, ba.target, cand):
                        continue
                    nxt.append(self._new(bb.source, ba.target, bb.word + (a,), cand))
            frontier = nxt
        for (i, k), hs in full.items():
            if self.hom_dim(i, k) != len(hs):
                raise ArithmeticError(f"word basis does not span Hom({i},{k})")
        self._solvers = {}
        self._finish()

    def _new(self, s, t, word, f):
        b = len(self.basis)
        if word is None:
            word = (b,)
        self.basis.append(BasisMorphism(s, t, word))
        self._maps.append(f)
        self.hom.setdefault((s, t), []).append(b)
        return b

    def _independent(self, s, t, f):
        cur = [self._maps[b] for b in self.hom.get((s, t), [])]
        r, _ = hc._span_rank(cur)
        r2, _ = hc._span_rank(cur + [f])
        return r2 > r

    def morphism(self, b):
        return self._maps[b]

    def coordinates(self, s, t, f):
        key = (s, t)
        sol = self._solvers.get(key)
        if sol is None:
            ids = self.hom[(s, t)]
            w = np.stack([self._maps[b].flat() for b in ids], axis=1)
            rows = la.column_basis(w.T, self.p)
            sol = (ids, rows, la.inverse_dense(w[rows, :], self.p))
            self._solvers[key] = sol
        ids, rows, inv = sol
        v = f.flat()
        c = la.matmul(inv, v[rows], self.p)
        return {b: int(x) for b, x in zip(ids, c) if x}

    def _compose(self, g, f):
        h = self._maps[g] @ self._maps[f]
        if h.is_zero():
            return {}
        return self.coordinates(self.basis[f].source, self.basis[g].target, h)


def endomorphism_category(collection):
    return EndCategory(collection.members, list(collection.labels))


def auslander_certificate(G, d, cap=hc.DEFAULT_CAP):
    gl = hc.gldim(G, cap)
    dd = hc.domdim(G, cap)
    return {"holds": gl <= d + 1 <= dd, "gldim": gl, "domdim": dd}


def verify_cluster_tilting(A, collection, d):
    for x in range(len(A.objects)):
        for kind, X in (("projective", hc.projective(A, x)), ("injective", hc.injective(A, x))):
            if find_member(collection, X) is None:
                return {"verified": False, "witness": f"{kind} at {A.label(x)} is not a member"}
    cert = auslander_certificate(endomorphism_category(collection), d)
    if not cert["holds"]:
        return {"verified": False, "witness": f"certificate fails: gldim {cert['gldim']}, domdim {cert['domdim']}", **cert}
    return {"verified": True, "witness": None, **cert}


# ---------------------------------------------------------------------------
# Ext^d quiver


@dataclass
class ExtQuiver:
    vertices: list
    arrows: dict = field(default_factory=dict)

    @property
    def arrow_count(self):
        return sum(self.arrows.values())

    def loops(self):
        return sum(c for (u, v), c in self.arrows.items() if u == v)

    def to_json(self):
        return {
            "vertices": [_j(v) for v in self.vertices],
            "arrows": [{"source": _j(u), "target": _j(v), "multiplicity": c} for (u, v), c in self.arrows.items()],
        }

    def to_dot(self):
        idx = {v: i for i, v in enumerate(self.vertices)}
        lines = ["digraph ExtQuiver {"]
        for v, i in idx.items():
            lines.append(f'  {i} [label="{v}"];')
        for (u, v), c in self.arrows.items():
            for _ in range(c):
                lines.append(f"  {idx[u]} -> {idx[v]};")
        lines.append("}")
        return "\n".join(lines)


def _j(v):
    return list(v) if isinstance(v, tuple) else v


def ext_d_quiver(A, collection, d):
    simples = [i for i, S in enumerate(collection.members) if hc.schur_simple_test(collection.members, S)]
    q = ExtQuiver([collection.labels[i] for i in simples])
    for i in simples:
        for j in simples:
            e = hc.ext_dim(collection.members[i], collection.members[j], d)
            if e:
                q.arrows[(collection.labels[i], collection.labels[j])] = e
    return q


# ---------------------------------------------------------------------------
# tau_d orbits


def tau_d_orbit_reconstruction(A, d, cap=None):
    g = hc.gldim(A)
    if g > d:
        raise ValueError(f"gldim {g} > {d}: not d-hereditary")
    cap = cap or 4 * len(A.objects) + 4
    found = []
    for x in range(len(A.objects)):
        X = hc.injective(A, x)
        steps = 0
        while not X.is_zero():
            if not any(Y.dims == X.dims and hc.isomorphic(Y, X) for Y in found):
                found.append(X)
            X = hc.tau_d(X, d)
            steps += 1
            if steps > cap:
                raise hc.Undetermined("tau_d orbit does not terminate")
    return ModuleCollection(A, found)


# ---------------------------------------------------------------------------
# tilting inside the canonical candidate


def _ext_table(collection, top):
    m = len(collection)
    bad = np.zeros((m, m), dtype=bool)
    for i, X in enumerate(collection.members):
        for j, Y in enumerate(collection.members):
            bad[i, j] = any(hc.ext_dim(X, Y, k) for k in range(1, top + 1))
    return bad


@dataclass
class TiltingContext:
    collection: ModuleCollection
    size: int
    clash: np.ndarray  # clash[i, j]: Ext^{>0}(X_i, X_j) != 0

    def compatible(self, i, j):
        return not (self.clash[i, j] or self.clash[j, i])

    def is_tilting(self, idx):
        idx = list(idx)
        if len(set(idx)) != self.size:
            return False
        return all(self.compatible(i, j) for i in idx for j in idx)


def tilting_context(A, d=None):
    d = A.d if d is None else d
    coll = canonical_ct_candidate(A, d)
    g = hc.gldim(A)
    return TiltingContext(coll, len(A.objects), _ext_table(coll, max(g, 1)))


def tilting_enumerate(A, d=None, ctx=None):
    ctx = ctx or tilting_context(A, d)
    m = len(ctx.collection)
    ok = [i for i in range(m) if not ctx.clash[i, i]]
    out = []

    def rec(start, chosen):
        if len(chosen) == ctx.size:
            out.append(tuple(chosen))
            return
        for k in range(start, len(ok)):
            i = ok[k]
            if all(ctx.compatible(i, j) for j in chosen):
                chosen.append(i)
                rec(k + 1, chosen)
                chosen.pop()

    rec(0, [])
    return out


def tilting_mutate(ctx, T, X):
    """Replace member ``X`` of the tilting set ``T``.

    Returns ``(T', X', exchange sequence)`` or raises ``NoExchangePartner``.
    """
    T = tuple(sorted(T))
    if X not in T:
        raise hc.NotInCollection(f"{X} is not in the tilting set")
    rest = [i for i in T if i != X]
    partners = [
        Y
        for Y in range(len(ctx.collection))
        if Y not in T and not ctx.clash[Y, Y] and all(ctx.compatible(Y, j) for j in rest)
    ]
    if not partners:
        raise NoExchangePartner(f"member {X} has no exchange partner")
    if len(partners) > 1:
        raise ArithmeticError(f"several exchange partners {partners}")
    Y = partners[0]
    seq = exchange_sequence(ctx, rest, X, Y)
    return tuple(sorted(rest + [Y])), Y, seq


def exchange_sequence(ctx, rest, X, Y):
    """``0 -> X -> T_d -> ... -> T_1 -> Y -> 0`` (or with ``X``, ``Y`` swapped)
    built from iterated left ``add(rest)``-approximations."""
    members = [ctx.collection.members[i] for i in rest]
    for a, b in ((X, Y), (Y, X)):
        start = ctx.collection.members[a]
        target = ctx.collection.members[b]
        seq = _left_iterate(members, start, target)
        if seq is not None:
            return seq
    raise ArithmeticError("no exchange sequence found")


def _left_iterate(members, start, target, max_len=16):
    terms, maps = [start], []
    cur, prev = start, None
    for _ in range(max_len):
        _, f, C = hc.left_approximation(members, cur)
        if not f.is_mono() or C.is_zero():
            break
        Q, q = f.cokernel()
        if prev is not None:
            maps.append(f @ prev)
        else:
            maps.append(f)
        terms.append(C)
        if Q.dims == target.dims and hc.isomorphic(Q, target):
            terms.append(Q)
            maps.append(q)
            return hc.ExactSequence(terms, maps)
        if Q.is_zero():
            return None
        cur, prev = Q, q
    return None
