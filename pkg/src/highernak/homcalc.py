"""Finite-dimensional modules over a finite based category.

A module ``M`` is a contravariant functor: for an arrow ``a: s -> t`` the
matrix ``M.maps[a]`` has shape ``(dim M(s), dim M(t))`` and sends ``M(t)`` to
``M(s)``.  With this convention ``P_x(y) = Hom(y, x)`` has top ``S_x``.

All linear algebra is dense and exact over ``F_p``.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

import numpy as np

from . import exactla as la
from .oset import canonical, in_os_l, interval_support, is_oseq

INF = math.inf
DEFAULT_CAP = 64


class Undetermined(RuntimeError):
    """A computation hit its iteration cap without reaching a verdict."""


class NeedsLongerResolution(RuntimeError):
    pass


class NotInCollection(ValueError):
    pass


# ---------------------------------------------------------------------------
# representations


class Rep:
    def __init__(self, cat, dims, maps=None, name=None):
        self.cat = cat
        self.p = cat.p
        self.dims = [int(v) for v in dims]
        if len(self.dims) != len(cat.objects):
            raise ValueError("dimension vector has the wrong length")
        self.maps = {}
        maps = maps or {}
        for a in cat.arrows:
            b = cat.basis[a]
            shape = (self.dims[b.source], self.dims[b.target])
            m = maps.get(a)
            if m is None:
                m = la.zeros(*shape)
            else:
                m = np.asarray(m, dtype=np.int64).reshape(shape) % self.p
            self.maps[a] = m
        self.name = name
        self._act = {}
        self._cache = {}

    def __repr__(self):
        tag = f" {self.name}" if self.name else ""
        return f"<Rep{tag} dims={self.dims}>"

    @property
    def dimvec(self):
        return tuple(self.dims)

    def total_dim(self):
        return sum(self.dims)

    def is_zero(self):
        return not any(self.dims)

    def act(self, b):
        """Matrix of ``M(b): M(target) -> M(source)`` for a basis morphism ``b``."""
        m = self._act.get(b)
        if m is None:
            bb = self.cat.basis[b]
            m = self.word(bb.word) if bb.word else la.eye(self.dims[bb.source])
            self._act[b] = m
        return m

    def word(self, word):
        # M(a_k o ... o a_1) = M(a_1) ... M(a_k)
        m = self._act.get(word)
        if m is None:
            if len(word) == 1:
                m = self.maps[word[0]]
            else:
                m = la.matmul(self.word(word[:-1]), self.maps[word[-1]], self.p)
            self._act[word] = m
        return m

    def act_vec(self, elem: dict, x=None, y=None):
        """``M(f)`` for a linear combination ``{basis id: coeff}`` of morphisms ``x -> y``."""
        out = None
        for b, c in elem.items():
            term = self.act(b) * c
            out = term if out is None else out + term
        if out is None:
            return la.zeros(self.dims[x], self.dims[y])
        return out % self.p

    def dual(self):
        """``D M = Hom(M, k)``, a module over the opposite category."""
        op = self.cat.opposite()
        return Rep(op, self.dims, {a: m.T.copy() for a, m in self.maps.items()}, name=_dname(self.name))

    def check(self, full=False):
        bad = self.violations(full)
        if bad:
            raise ValueError(f"not a module: {bad[0]}")
        return True

    def violations(self, full=False):
        """Relations that fail.  ``full`` checks every arrow against every
        basis morphism; otherwise only length-two composites of arrows."""
        cat, p = self.cat, self.p
        out = []
        firsts = range(len(cat.basis)) if full else cat.arrows
        for f in firsts:
            bf = cat.basis[f]
            for a in cat.arrows_from[bf.target]:
                lhs = la.matmul(self.act(f), self.maps[a], p)
                res = cat.compose(a, f)
                rhs = la.zeros(*lhs.shape)
                for h, c in res.items():
                    rhs = (rhs + c * self.act(h)) % p
                if not np.array_equal(lhs, rhs):
                    out.append((f, a))
        return out

    def to_json(self):
        return {
            "dims": list(self.dims),
            "maps": {str(a): m.tolist() for a, m in self.maps.items() if m.size},
        }

    def restrict_support(self):
        return [x for x, v in enumerate(self.dims) if v]


def _dname(name):
    if name is None:
        return None
    return name[2:] if name.startswith("D(") and name.endswith(")") else f"D({name})"


@dataclass
class RepMap:
    """A morphism of modules: one matrix ``M(x) -> N(x)`` per object."""

    src: Rep
    tgt: Rep
    comps: list

    def __post_init__(self):
        p = self.src.p
        self.comps = [
            np.asarray(c, dtype=np.int64).reshape(self.tgt.dims[x], self.src.dims[x]) % p
            for x, c in enumerate(self.comps)
        ]

    @classmethod
    def zero(cls, M, N):
        return cls(M, N, [la.zeros(N.dims[x], M.dims[x]) for x in range(len(M.dims))])

    @classmethod
    def identity(cls, M):
        return cls(M, M, [la.eye(v) for v in M.dims])

    def is_natural(self):
        p = self.src.p
        for a in self.src.cat.arrows:
            b = self.src.cat.basis[a]
            lhs = la.matmul(self.comps[b.source], self.src.maps[a], p)
            rhs = la.matmul(self.tgt.maps[a], self.comps[b.target], p)
            if not np.array_equal(lhs, rhs):
                return False
        return True

    def is_zero(self):
        return not any(c.any() for c in self.comps)

    def flat(self):
        return np.concatenate([c.ravel() for c in self.comps]) if self.comps else la.zeros(0, 0).ravel()

    def __matmul__(self, other: "RepMap"):
        p = self.src.p
        return RepMap(other.src, self.tgt, [la.matmul(a, b, p) for a, b in zip(self.comps, other.comps)])

    def __add__(self, other):
        return RepMap(self.src, self.tgt, [a + b for a, b in zip(self.comps, other.comps)])

    def scale(self, c):
        return RepMap(self.src, self.tgt, [a * c for a in self.comps])

    def ranks(self):
        return [la.rank_dense(c, self.src.p) if c.size else 0 for c in self.comps]

    def is_epi(self):
        return all(r == d for r, d in zip(self.ranks(), self.tgt.dims))

    def is_mono(self):
        return all(r == d for r, d in zip(self.ranks(), self.src.dims))

    def is_iso(self):
        return self.src.dims == self.tgt.dims and self.is_epi()

    def kernel(self):
        """``(K, inclusion)``."""
        spans = []
        for x, c in enumerate(self.comps):
            if self.src.dims[x] == 0:
                spans.append(la.zeros(0, 0))
            else:
                spans.append(la.nullspace(c, self.src.p)[0])
        return submodule(self.src, spans)

    def image_spans(self):
        out = []
        for x, c in enumerate(self.comps):
            if c.size == 0:
                out.append(la.zeros(self.tgt.dims[x], 0))
            else:
                out.append(c[:, la.column_basis(c, self.src.p)])
        return out

    def image(self):
        return submodule(self.tgt, self.image_spans())

    def cokernel(self):
        return quotient(self.tgt, self.image_spans())


def direct_sum(*reps):
    if not reps:
        raise ValueError("empty direct sum")
    cat = reps[0].cat
    dims = [sum(r.dims[x] for r in reps) for x in range(len(cat.objects))]
    maps = {}
    for a in cat.arrows:
        maps[a] = _block_diag([r.maps[a] for r in reps])
    return Rep(cat, dims, maps)


def _block_diag(blocks):
    rows = sum(b.shape[0] for b in blocks)
    cols = sum(b.shape[1] for b in blocks)
    out = la.zeros(rows, cols)
    r = c = 0
    for b in blocks:
        out[r : r + b.shape[0], c : c + b.shape[1]] = b
        r += b.shape[0]
        c += b.shape[1]
    return out


def _cols(s, dim):
    s = np.asarray(s, dtype=np.int64)
    return s.reshape(dim, -1) if s.size else la.zeros(dim, 0)


def submodule(M: Rep, spans):
    """Submodule with the given bases (columns, assumed independent and stable).

    Returns ``(U, inclusion)``.
    """
    p = M.p
    bases, frees = [], []
    for x, s in enumerate(spans):
        s = _cols(s, M.dims[x]) % p
        if s.shape[1]:
            piv = la.column_basis(s, p)
            s = s[:, piv]
        # echelonize so coordinates can be read off at pivot rows
        if s.shape[1]:
            r, piv = la.rref(s.T, p)
            s = r[: len(piv)].T.copy()
            frees.append(piv)
        else:
            frees.append([])
        bases.append(s)
    dims = [b.shape[1] for b in bases]
    maps = {}
    for a in M.cat.arrows:
        b = M.cat.basis[a]
        img = la.matmul(M.maps[a], bases[b.target], p)
        coords = img[frees[b.source], :] if dims[b.source] else la.zeros(0, dims[b.target])
        if dims[b.source] and not np.array_equal(la.matmul(bases[b.source], coords, p), img):
            raise ValueError("subspaces are not closed under the action")
        if not dims[b.source] and img.any():
            raise ValueError("subspaces are not closed under the action")
        maps[a] = coords
    U = Rep(M.cat, dims, maps)
    return U, RepMap(U, M, bases)


def quotient(M: Rep, spans):
    """``M / U`` for a submodule given by spanning columns; returns ``(Q, projection)``."""
    p = M.p
    projs, comps = [], []
    for x, s in enumerate(spans):
        dim = M.dims[x]
        s = _cols(s, dim) % p
        piv = la.column_basis(s, p) if s.size else []
        sb = s[:, piv]
        comp = la.complement_columns(sb, p, dim) if dim else []
        c = la.eye(dim)[:, comp]
        full = np.hstack([sb, c])
        inv = la.inverse_dense(full, p) if dim else la.zeros(0, 0)
        projs.append(inv[len(piv) :, :])
        comps.append(c)
    dims = [c.shape[1] for c in comps]
    maps = {}
    for a in M.cat.arrows:
        b = M.cat.basis[a]
        maps[a] = la.matmul(projs[b.source], la.matmul(M.maps[a], comps[b.target], p), p)
    Q = Rep(M.cat, dims, maps)
    return Q, RepMap(M, Q, projs)


# ---------------------------------------------------------------------------
# standard modules


def simple(A, x):
    x = A.obj(x)
    dims = [0] * len(A.objects)
    dims[x] = 1
    return Rep(A, dims, name=f"S{_lab(A, x)}")


def _lab(A, x):
    lab = A.label(x)
    if isinstance(lab, tuple):
        return "(" + ",".join(map(str, lab)) + ")"
    return f"[{lab}]"


def projective_sum(A, labels):
    """``P_{x_1} + ... + P_{x_r}``; fibre at ``y`` is ``Hom(y, x_1) + ... + Hom(y, x_r)``."""
    n = len(A.objects)
    labels = [A.obj(x) for x in labels]
    dims = [sum(A.hom_dim(y, x) for x in labels) for y in range(n)]
    maps = {}
    for a in A.arrows:
        maps[a] = _block_diag([A.right_mult(a, x) for x in labels]) if labels else None
    return Rep(A, dims, maps)


def projective(A, x):
    x = A.obj(x)
    P = projective_sum(A, [x])
    P.name = f"P{_lab(A, x)}"
    P._cache["proj_label"] = x
    return P


def injective(A, x):
    x = A.obj(x)
    I = projective(A.opposite(), x).dual()
    I.name = f"I{_lab(A, x)}"
    return I


def regular(A):
    return projective_sum(A, range(len(A.objects)))


def cover_module(A, lifts, name=None):
    """Push a finite set of lifted tuples down to a thin-on-the-cover module.

    Each tuple contributes one basis vector at its (canonical) object; the
    arrow in direction ``i`` acts by 1 between ``k`` and ``k + e_i`` whenever
    both lie in the set.
    """
    lifts = [tuple(k) for k in lifts]
    fibre: dict[int, list] = {}
    where = {}
    for k in sorted(set(lifts)):
        x, _ = A.lift_key(k) if A.cyclic else (A.obj(k), 0)
        where[k] = (x, len(fibre.setdefault(x, [])))
        fibre[x].append(k)
    dims = [len(fibre.get(x, ())) for x in range(len(A.objects))]
    maps = {}
    for a in A.arrows:
        b = A.basis[a]
        i = A.arrow_direction(a)
        m = la.zeros(dims[b.source], dims[b.target])
        for r, k in enumerate(fibre.get(b.source, ())):
            k2 = tuple(v + (1 if j == i else 0) for j, v in enumerate(k))
            hit = where.get(k2)
            if hit is not None and hit[0] == b.target:
                m[r, hit[1]] = 1
        maps[a] = m
    return Rep(A, dims, maps, name=name)


def interval_lifts(A, lam):
    lam = tuple(lam)
    if len(lam) != A.d + 1 or not is_oseq(lam) or not in_os_l(lam, A.kupisch):
        raise ValueError(f"{lam} is not an admissible interval label")
    return interval_support(lam)


def interval_module(A, lam):
    """The thin module supported on ``[(lam_2..lam_{d+1}), (lam_1..lam_d)]``."""
    lam = tuple(lam)
    if A.cyclic:
        lam = canonical(lam, A.n)
    M = cover_module(A, interval_lifts(A, lam), name="M(" + ",".join(map(str, lam)) + ")")
    M._cache["interval"] = lam
    return M


# ---------------------------------------------------------------------------
# radical, top, socle


def radical_spans(M):
    cat = M.cat
    out = []
    for x in range(len(cat.objects)):
        blocks = [M.maps[a] for a in cat.arrows_from[x]]
        out.append(np.hstack(blocks) if blocks else la.zeros(M.dims[x], 0))
    return out


def radical(M):
    return submodule(M, radical_spans(M))


def top(M):
    return quotient(M, radical_spans(M))


def socle_spans(M):
    cat = M.cat
    out = []
    for x in range(len(cat.objects)):
        blocks = [M.maps[a] for a in cat.arrows_into[x]]
        if not blocks or M.dims[x] == 0:
            out.append(la.eye(M.dims[x]))
            continue
        out.append(la.nullspace(np.vstack(blocks), M.p)[0])
    return out


def socle(M):
    return submodule(M, socle_spans(M))


def top_dims(M):
    return [M.dims[x] - (la.rank_dense(s, M.p) if s.size else 0) for x, s in enumerate(radical_spans(M))]


def socle_dims(M):
    return [s.shape[1] for s in socle_spans(M)]


# ---------------------------------------------------------------------------
# projective covers and resolutions


@dataclass
class Cover:
    labels: list  # object of each generator
    gens: list  # generator vectors m_i in M(x_i)
    pi: list  # per object y: matrix P(y) -> M(y)
    kernel: Rep
    emb: list  # per object y: basis of ker pi_y inside P(y)
    offsets: list  # per object y: start of each generator block in P(y)


def _offsets(A, labels, y):
    out, s = [], 0
    for x in labels:
        out.append(s)
        s += A.hom_dim(y, x)
    return out, s


def _generators(M):
    cat, p = M.cat, M.p
    labels, gens = [], []
    for x, rs in enumerate(radical_spans(M)):
        if M.dims[x] == 0:
            continue
        for k in la.complement_columns(rs, p, M.dims[x]):
            v = la.zeros(M.dims[x], 1)[:, 0]
            v[k] = 1
            labels.append(x)
            gens.append(v)
    return labels, gens


def cover(M) -> Cover:
    hit = M._cache.get("cover")
    if hit is not None:
        return hit
    A, p = M.cat, M.p
    labels, gens = _generators(M)
    n = len(A.objects)
    pis, embs, frees, offs = [], [], [], []
    for y in range(n):
        off, tot = _offsets(A, labels, y)
        cols = []
        for x, m in zip(labels, gens):
            for g in A.homs(y, x):
                cols.append(la.matmul(M.act(g), m, p))
        pi = np.stack(cols, axis=1) if cols else la.zeros(M.dims[y], 0)
        pi = pi.reshape(M.dims[y], tot)
        pis.append(pi)
        offs.append(off)
        if tot == 0:
            embs.append(la.zeros(0, 0))
            frees.append([])
        else:
            N, free = la.nullspace(pi, p)
            embs.append(N)
            frees.append(free)
    P = projective_sum(A, labels)
    kd = [e.shape[1] for e in embs]
    kmaps = {}
    for a in A.arrows:
        b = A.basis[a]
        img = la.matmul(P.maps[a], embs[b.target], p) if kd[b.target] else la.zeros(P.dims[b.source], 0)
        kmaps[a] = img[frees[b.source], :] if kd[b.source] else la.zeros(0, kd[b.target])
    K = Rep(A, kd, kmaps)
    K._cache["ambient"] = (labels, embs)
    c = Cover(labels, gens, pis, K, embs, offs)
    M._cache["cover"] = c
    return c


def projective_cover(M):
    """``(P, epimorphism P -> M)``."""
    c = cover(M)
    P = projective_sum(M.cat, c.labels)
    return P, RepMap(P, M, c.pi)


def syzygy(M):
    return cover(M).kernel


@dataclass
class Resolution:
    """Minimal projective resolution, computed lazily.

    ``terms[k]`` lists the objects of the indecomposable summands of ``P_k``;
    ``differentials[k]`` (``k >= 1``) gives, for each generator of ``P_k``,
    its image in ``P_{k-1}`` as a coordinate vector.
    """

    module: Rep
    terms: list = field(default_factory=list)
    differentials: list = field(default_factory=list)
    syzygies: list = field(default_factory=list)
    complete: bool = False
    periodic: tuple | None = None

    def __post_init__(self):
        if not self.syzygies:
            self.syzygies = [self.module]
            self.differentials = [None]

    @property
    def length_computed(self):
        return len(self.terms) - 1

    def extend(self, k):
        """Compute terms up to ``P_k`` (or until the resolution stops)."""
        while not self.complete and len(self.terms) <= k:
            cur = self.syzygies[-1]
            if cur.is_zero():
                self.complete = True
                break
            c = cover(cur)
            self.terms.append(list(c.labels))
            if len(self.terms) > 1:
                labels, embs = cur._cache["ambient"]
                cols = [la.matmul(embs[x], m, cur.p) for x, m in zip(c.labels, c.gens)]
                self.differentials.append(cols)
            self.syzygies.append(c.kernel)
            if c.kernel.is_zero():
                self.complete = True
        return self

    def term(self, k):
        self.extend(k)
        return self.terms[k] if k < len(self.terms) else []

    def multiset(self, k):
        out = {}
        for x in self.term(k):
            out[x] = out.get(x, 0) + 1
        return out

    def to_json(self, labels=None):
        lab = labels or (lambda x: x)
        return [[_jsonable(lab(x)) for x in t] for t in self.terms]


def _jsonable(v):
    if isinstance(v, tuple):
        return [_jsonable(u) for u in v]
    if isinstance(v, np.integer):
        return int(v)
    return v


def min_proj_resolution(M, max_deg=DEFAULT_CAP):
    res = M._cache.get("resolution")
    if res is None:
        res = Resolution(M)
        M._cache["resolution"] = res
    return res.extend(max_deg)


def _coboundary(res, N, k):
    """Matrix of ``Hom(P_{k-1}, N) -> Hom(P_k, N)``."""
    A, p = N.cat, N.p
    src, tgt = res.term(k - 1), res.term(k)
    cols_dim = [N.dims[x] for x in src]
    rows_dim = [N.dims[x] for x in tgt]
    out = la.zeros(sum(rows_dim), sum(cols_dim))
    if out.size == 0:
        return out
    roff = np.cumsum([0] + rows_dim)
    coff = np.cumsum([0] + cols_dim)
    for j, xj in enumerate(tgt):
        if not rows_dim[j]:
            continue
        col = res.differentials[k][j]
        off, _ = _offsets(A, src, xj)
        for i, xi in enumerate(src):
            if not cols_dim[i]:
                continue
            block = None
            for pos, g in enumerate(A.homs(xj, xi)):
                c = int(col[off[i] + pos])
                if c:
                    t = N.act(g) * c
                    block = t if block is None else block + t
            if block is not None:
                out[roff[j] : roff[j + 1], coff[i] : coff[i + 1]] = block % p
    return out


def _cochain_dim(res, N, k):
    return sum(N.dims[x] for x in res.term(k))


def ext_dim(M, N, i, max_deg=DEFAULT_CAP):
    if i < 0:
        raise ValueError("negative degree")
    if i + 1 > max_deg:
        raise NeedsLongerResolution(f"Ext^{i} needs the resolution up to degree {i + 1}")
    res = min_proj_resolution(M, i + 1)
    c = _cochain_dim(res, N, i)
    if c == 0:
        return 0
    r_out = la.rank_dense(_coboundary(res, N, i + 1), N.p) if res.term(i + 1) else 0
    r_in = la.rank_dense(_coboundary(res, N, i), N.p) if i > 0 else 0
    return c - r_out - r_in


def hom_dim(M, N):
    return ext_dim(M, N, 0)


def hom_space(M, N):
    """A basis of ``Hom(M, N)`` as ``RepMap``s."""
    A, p = M.cat, M.p
    res = min_proj_resolution(M, 1)
    labels = res.term(0)
    dims = [N.dims[x] for x in labels]
    if sum(dims) == 0:
        return []
    if res.term(1):
        ker = la.nullspace(_coboundary(res, N, 1), p)[0]
    else:
        ker = la.eye(sum(dims))
    c = cover(M)
    off = np.cumsum([0] + dims)
    out = []
    for col in ker.T:
        ns = [col[off[i] : off[i + 1]] for i in range(len(labels))]
        comps = []
        for y in range(len(A.objects)):
            if M.dims[y] == 0 or N.dims[y] == 0:
                comps.append(la.zeros(N.dims[y], M.dims[y]))
                continue
            psi = []
            for x, nvec in zip(labels, ns):
                for g in A.homs(y, x):
                    psi.append(la.matmul(N.act(g), nvec, p))
            psi = np.stack(psi, axis=1).reshape(N.dims[y], -1)
            piv = _pivots(M, y, c)
            binv = _binv(M, y, c, piv)
            comps.append(la.matmul(psi[:, piv], binv, p))
        out.append(RepMap(M, N, comps))
    return out


def _pivots(M, y, c):
    key = ("piv", y)
    hit = M._cache.get(key)
    if hit is None:
        hit = la.column_basis(c.pi[y], M.p)
        M._cache[key] = hit
    return hit


def _binv(M, y, c, piv):
    key = ("binv", y)
    hit = M._cache.get(key)
    if hit is None:
        hit = la.inverse_dense(c.pi[y][:, piv], M.p)
        M._cache[key] = hit
    return hit


def hom_dim_naive(M, N):
    """Hom dimension by solving the intertwining equations directly (oracle)."""
    A, p = M.cat, M.p
    n = len(A.objects)
    sizes = [N.dims[x] * M.dims[x] for x in range(n)]
    off = np.cumsum([0] + sizes)
    rows = []
    for a in A.arrows:
        b = A.basis[a]
        s, t = b.source, b.target
        # phi_s M(a) - N(a) phi_t = 0, unknowns vectorized row-major
        ms, mt = M.maps[a], N.maps[a]
        for i in range(N.dims[s]):
            for j in range(M.dims[t]):
                row = la.zeros(1, int(off[-1]))[0]
                for k in range(M.dims[s]):
                    row[off[s] + i * M.dims[s] + k] += ms[k, j]
                for k in range(N.dims[t]):
                    row[off[t] + k * M.dims[t] + j] -= mt[i, k]
                rows.append(row % p)
    total = int(off[-1])
    if not rows:
        return total
    return total - la.rank_dense(np.array(rows), p)


# ---------------------------------------------------------------------------
# isomorphism, projectivity, dimensions


def is_projective(M):
    if M.is_zero():
        return True
    P, _ = projective_cover(M)
    return P.dims == M.dims


def is_injective(M):
    return is_projective(M.dual())


def _fingerprint(M):
    hit = M._cache.get("fp")
    if hit is None:
        hit = (tuple(M.dims), tuple(top_dims(M)), tuple(socle_dims(M)))
        M._cache["fp"] = hit
    return hit


def isomorphic(M, N, trials=48, seed=0):
    """``True``/``False``, or ``None`` when the randomized search is inconclusive."""
    if M.dims != N.dims:
        return False
    if M.is_zero():
        return True
    if _fingerprint(M) != _fingerprint(N):
        return False
    hmn = hom_space(M, N)
    if not hmn:
        return False
    if len(hom_space(N, M)) != len(hmn) or hom_dim(M, M) != len(hmn) or hom_dim(N, N) != len(hmn):
        return False
    for f in hmn:
        if f.is_iso():
            return True
    rng = np.random.default_rng(seed)
    p = M.p
    for _ in range(trials):
        coeffs = rng.integers(0, p, size=len(hmn))
        comps = [sum(int(c) * f.comps[x] for c, f in zip(coeffs, hmn)) % p for x in range(len(M.dims))]
        if RepMap(M, N, comps).is_iso():
            return True
    return None


def find_iso(M, N, trials=48, seed=0):
    """An explicit isomorphism ``M -> N`` or ``None``."""
    if M.dims != N.dims:
        return None
    hmn = hom_space(M, N)
    for f in hmn:
        if f.is_iso():
            return f
    rng = np.random.default_rng(seed)
    p = M.p
    for _ in range(trials if hmn else 0):
        coeffs = rng.integers(0, p, size=len(hmn))
        comps = [sum(int(c) * f.comps[x] for c, f in zip(coeffs, hmn)) % p for x in range(len(M.dims))]
        g = RepMap(M, N, comps)
        if g.is_iso():
            return g
    return None


def _resolve_with_period(M, cap):
    """Extend the resolution until it stops or a syzygy repeats."""
    res = min_proj_resolution(M, 0)
    seen = []
    k = 1
    while True:
        res.extend(k - 1)
        om = res.syzygies[k]
        if om.is_zero():
            return res
        for j, prev in seen:
            if prev.dims == om.dims and isomorphic(prev, om):
                res.periodic = (k - j, j)
                return res
        seen.append((k, om))
        k += 1
        if k > cap:
            raise Undetermined(f"no verdict after {cap} syzygies")


def projdim(M, cap=DEFAULT_CAP):
    """Projective dimension; ``INF`` once a syzygy repeats; ``-1`` for zero."""
    if M.is_zero():
        return -1
    res = _resolve_with_period(M, cap)
    if res.periodic:
        return INF
    return len(res.terms) - 1


def gldim(A, cap=DEFAULT_CAP):
    return max(projdim(simple(A, x), cap) for x in range(len(A.objects)))


def gldim_report(A, cap=DEFAULT_CAP):
    """``(gldim, objects attaining it)``."""
    vals = [projdim(simple(A, x), cap) for x in range(len(A.objects))]
    g = max(vals)
    return g, [x for x, v in enumerate(vals) if v == g]


def injective_coresolution(M, max_deg=DEFAULT_CAP):
    """Minimal injective coresolution, as the resolution of ``D M`` over the
    opposite category; term labels ``x`` stand for ``I_x``."""
    return min_proj_resolution(M.dual(), max_deg)


def injective_is_projective(A):
    hit = getattr(A, "_ip_cache", None)
    if hit is None:
        hit = [is_projective(injective(A, x)) for x in range(len(A.objects))]
        A._ip_cache = hit
    return hit


def dominant_run(A, M, cap=DEFAULT_CAP):
    """Length of the initial run of projective-injective terms in the minimal
    injective coresolution of ``M``; ``INF`` if all terms are projective."""
    ip = injective_is_projective(A)
    res = min_proj_resolution(M.dual(), 0)
    k = 0
    while True:
        if k > cap:
            raise Undetermined(f"no non-projective term among the first {cap} terms")
        t = res.term(k)
        if not t:
            return INF
        if not all(ip[x] for x in t):
            return k
        k += 1


def domdim(A, cap=DEFAULT_CAP):
    return min(dominant_run(A, projective(A, x), cap) for x in range(len(A.objects)))


def cartan(A):
    return [[A.hom_dim(y, x) for y in range(len(A.objects))] for x in range(len(A.objects))]


# ---------------------------------------------------------------------------
# Auslander-Reiten translations


def _proj_map_matrix(A, src, tgt, cols, z):
    """Matrix at ``z`` of the map between projective sums sending generator
    ``i`` of ``src`` to ``cols[i]`` (coordinates in ``P_tgt(src[i])``)."""
    toff, ttot = _offsets(A, tgt, z)
    blocks = []
    for i, xi in enumerate(src):
        goff, _ = _offsets(A, tgt, xi)
        for h in A.homs(z, xi):
            v = la.zeros(ttot, 1)[:, 0]
            for j, yj in enumerate(tgt):
                for pos, g in enumerate(A.homs(xi, yj)):
                    c = int(cols[i][goff[j] + pos])
                    if not c:
                        continue
                    for e, c2 in A.compose(g, h).items():
                        v[toff[j] + A.position(e)] += c * c2
            blocks.append(v % A.p)
    if not blocks:
        return la.zeros(ttot, 0)
    return np.stack(blocks, axis=1)


def transpose(M):
    """``Tr M``: cokernel of the dual of a minimal presentation (over ``A^op``)."""
    A = M.cat
    res = min_proj_resolution(M, 1)
    p0, p1 = res.term(0), res.term(1)
    op = A.opposite()
    Q1 = projective_sum(op, p1)
    if not p1:
        return Q1
    # generator i of P_0^* (at x_i) goes to sum_j d1[j] restricted to block i
    cols = []
    for i, xi in enumerate(p0):
        v = []
        for j, yj in enumerate(p1):
            off, _ = _offsets(A, p0, yj)
            n = A.hom_dim(yj, xi)
            v.append(res.differentials[1][j][off[i] : off[i] + n])
        cols.append(np.concatenate(v) if v else la.zeros(0, 0)[0])
    spans = [_proj_map_matrix(op, p0, p1, cols, z) for z in range(len(A.objects))]
    return quotient(Q1, spans)[0]


def tau(M):
    """``(tau M, projective_flag)``; the flag is set when ``M`` is projective."""
    if is_projective(M):
        return Rep(M.cat, [0] * len(M.dims)), True
    return transpose(M).dual(), False


def tau_inverse(M):
    t, flag = tau(M.dual())
    return t.dual(), flag


def tau_d(M, d):
    X = M
    for _ in range(d - 1):
        X = syzygy(X)
    return tau(X)[0]


# ---------------------------------------------------------------------------
# approximations in add C


def _sum_maps(M, N, maps, coeffs):
    p = M.p
    return RepMap(M, N, [sum(int(c) * f.comps[x] for c, f in zip(coeffs, maps)) % p for x in range(len(M.dims))])


def radical_endos(X):
    """Basis of the non-invertible endomorphisms of an indecomposable ``X``."""
    basis = hom_space(X, X)
    p = X.p
    scal = []
    for f in basis:
        scal.append(_scalar_part(X, f))
    # kernel of the scalar functional
    row = np.array([scal], dtype=np.int64)
    ker = la.nullspace(row, p)[0]
    return [_sum_maps(X, X, basis, ker[:, j]) for j in range(ker.shape[1])]


def _scalar_part(X, f):
    p = X.p
    for x, dim in enumerate(X.dims):
        if dim and dim % p:
            return int(np.trace(f.comps[x]) % p) * pow(dim, p - 2, p) % p
    for lam in range(p):
        g = RepMap(X, X, [(c - lam * np.eye(len(c), dtype=np.int64)) % p for c in f.comps])
        if not g.is_iso():
            return lam
    raise ArithmeticError("endomorphism ring is not split local")


def rad_hom(X, Y, same):
    return radical_endos(X) if same else hom_space(X, Y)


def _span_rank(maps):
    if not maps:
        return 0, None
    mat = np.stack([f.flat() for f in maps], axis=1)
    if mat.size == 0:
        return 0, mat
    return la.rank_dense(mat, maps[0].src.p), mat


def _complement_maps(candidates, forbidden):
    """Members of ``candidates`` extending a basis of ``span(forbidden)``
    to a basis of ``span(candidates + forbidden)``."""
    if not candidates:
        return []
    p = candidates[0].src.p
    cols = [f.flat() for f in forbidden] + [f.flat() for f in candidates]
    mat = np.stack(cols, axis=1)
    if mat.shape[0] == 0:
        return []
    piv = la.column_basis(mat, p)
    k = len(forbidden)
    return [candidates[c - k] for c in piv if c >= k]


def right_approximation(members, Y, radical_into=None):
    """Minimal right ``add(members)``-approximation ``C -> Y``.

    If ``radical_into`` is the index of ``Y`` in ``members``, only radical maps
    into ``Y`` are used (right almost split map).
    Returns ``(summand indices, RepMap C -> Y, C)``.
    """
    chosen, maps = [], []
    homs = {}
    for i, X in enumerate(members):
        homs[i] = radical_endos(X) if i == radical_into else hom_space(X, Y)
    for i, X in enumerate(members):
        forbidden = []
        for j, X2 in enumerate(members):
            if not homs[j]:
                continue
            for r in rad_hom(X, X2, i == j):
                for psi in homs[j]:
                    forbidden.append(psi @ r)
        for f in _complement_maps(homs[i], forbidden):
            chosen.append(i)
            maps.append(f)
    return chosen, *_assemble_right(members, chosen, maps, Y)


def _assemble_right(members, chosen, maps, Y):
    if not chosen:
        Z = Rep(Y.cat, [0] * len(Y.dims))
        return RepMap.zero(Z, Y), Z
    C = direct_sum(*[members[i] for i in chosen])
    comps = [np.hstack([f.comps[x] for f in maps]) for x in range(len(Y.dims))]
    return RepMap(C, Y, comps), C


def left_approximation(members, Y, radical_from=None):
    """Minimal left ``add(members)``-approximation ``Y -> C``."""
    chosen, maps = [], []
    homs = {}
    for i, X in enumerate(members):
        homs[i] = radical_endos(X) if i == radical_from else hom_space(Y, X)
    for i, X in enumerate(members):
        forbidden = []
        for j, X2 in enumerate(members):
            if not homs[j]:
                continue
            for r in rad_hom(X2, X, i == j):
                for psi in homs[j]:
                    forbidden.append(r @ psi)
        for f in _complement_maps(homs[i], forbidden):
            chosen.append(i)
            maps.append(f)
    if not chosen:
        Z = Rep(Y.cat, [0] * len(Y.dims))
        return chosen, RepMap.zero(Y, Z), Z
    C = direct_sum(*[members[i] for i in chosen])
    comps = [np.vstack([f.comps[x] for f in maps]) for x in range(len(Y.dims))]
    return chosen, RepMap(Y, C, comps), C


@dataclass
class ExactSequence:
    """``0 -> terms[0] -> terms[1] -> ... -> terms[-1] -> 0``."""

    terms: list
    maps: list  # maps[i]: terms[i] -> terms[i+1]
    summands: list = field(default_factory=list)

    def is_complex(self):
        return all((g @ f).is_zero() for f, g in zip(self.maps, self.maps[1:]))

    def is_exact(self):
        if not self.is_complex():
            return False
        if not self.maps[0].is_mono() or not self.maps[-1].is_epi():
            return False
        for f, g in zip(self.maps, self.maps[1:]):
            for x, d in enumerate(g.src.dims):
                rk_f = la.rank_dense(f.comps[x], f.src.p) if f.comps[x].size else 0
                rk_g = la.rank_dense(g.comps[x], g.src.p) if g.comps[x].size else 0
                if rk_f != d - rk_g:
                    return False
        return True

    def alternating_dims(self):
        return [sum((-1) ** i * t.dims[x] for i, t in enumerate(self.terms)) for x in range(len(self.terms[0].dims))]


def d_almost_split(A, members, X_index, d):
    """``0 -> tau_d X -> C_1 -> ... -> C_d -> X -> 0`` inside ``add(members)``."""
    if not 0 <= X_index < len(members):
        raise NotInCollection("X is not a member of the collection")
    X = members[X_index]
    if is_projective(X):
        raise ValueError("X is projective; no d-almost split sequence ends in it")
    chosen, f, C = right_approximation(members, X, radical_into=X_index)
    terms, maps, summands = [X], [f], [chosen]
    K, inc = f.kernel()
    for _ in range(d - 1):
        ch, g, C2 = right_approximation(members, K)
        maps.insert(0, inc @ g)
        terms.insert(0, C)
        summands.insert(0, ch)
        C = C2
        K, inc2 = g.kernel()
        inc = inc2
    terms.insert(0, C)
    maps.insert(0, inc)
    terms.insert(0, K)
    return ExactSequence(terms, maps, summands)


# ---------------------------------------------------------------------------
# Schur simple objects


def maximal_submodules(M, cap=10_000):
    """Each maximal submodule as spanning columns per object."""
    p = M.p
    rs = radical_spans(M)
    out = []
    for x in range(len(M.dims)):
        if M.dims[x] == 0:
            continue
        r = rs[x]
        comp = la.complement_columns(r, p, M.dims[x])
        m = len(comp)
        if m == 0:
            continue
        count = (p**m - 1) // (p - 1)
        if len(out) + count > cap:
            raise Undetermined("too many maximal submodules")
        for coeffs in _projective_points(m, p):
            # hyperplane: kernel of the functional ``coeffs`` on the top part at x
            basis_top = la.eye(M.dims[x])[:, comp]
            ker = la.nullspace(np.array([coeffs], dtype=np.int64), p)[0]
            span_x = np.hstack([r, la.matmul(basis_top, ker, p)])
            spans = [la.eye(M.dims[y]) for y in range(len(M.dims))]
            spans[x] = span_x.reshape(M.dims[x], -1)
            out.append(spans)
    return out


def _projective_points(m, p):
    for lead in range(m):
        for rest in itertools.product(range(p), repeat=m - lead - 1):
            yield (0,) * lead + (1,) + rest


def _only_epis_into(members, S):
    for spans in maximal_submodules(S):
        U, _ = submodule(S, spans)
        for X in members:
            if hom_dim(X, U):
                return False
    return True


def schur_simple_test(members, S):
    """Every nonzero ``X -> S`` is epi and every nonzero ``S -> X`` is mono."""
    if S.is_zero():
        return False
    if not _only_epis_into(members, S):
        return False
    return _only_epis_into([X.dual() for X in members], S.dual())


# ---------------------------------------------------------------------------
# resolution audits


def differential_maps(res, k):
    """Per-object matrices of ``d_k: P_k -> P_{k-1}`` (``k >= 1``) or of the
    augmentation ``P_0 -> M`` (``k = 0``)."""
    A = res.module.cat
    if k == 0:
        return cover(res.module).pi
    return [_proj_map_matrix(A, res.term(k), res.term(k - 1), res.differentials[k], z) for z in range(len(A.objects))]


def verify_resolution(res, upto=None):
    """Exactness and minimality at every computed degree; returns a list of problems."""
    A, p = res.module.cat, res.module.p
    top_deg = res.length_computed if upto is None else min(upto, res.length_computed)
    problems = []
    mats = [differential_maps(res, k) for k in range(top_deg + 1)]
    n = len(A.objects)

    def rk(m):
        return la.rank_dense(m, p) if m.size else 0

    for z in range(n):
        if rk(mats[0][z]) != res.module.dims[z]:
            problems.append(("augmentation not onto", z))
    for k in range(1, top_deg + 1):
        dims_prev = sum(A.hom_dim(z, x) for x in res.term(k - 1))
        for z in range(n):
            comp = la.matmul(mats[k - 1][z], mats[k][z], p) if mats[k][z].size and mats[k - 1][z].size else None
            if comp is not None and comp.any():
                problems.append(("not a complex", k, z))
            dims_prev = sum(A.hom_dim(z, x) for x in res.term(k - 1))
            if dims_prev - rk(mats[k - 1][z]) != rk(mats[k][z]):
                problems.append(("not exact", k - 1, z))
        # minimality: no identity component in any differential column
        for j, xj in enumerate(res.term(k)):
            off, _ = _offsets(A, res.term(k - 1), xj)
            for i, xi in enumerate(res.term(k - 1)):
                if xi == xj:
                    pos = A.position(A.identity(xi))
                    if res.differentials[k][j][off[i] + pos] % p:
                        problems.append(("not minimal", k, j))
    if res.complete and top_deg == res.length_computed and top_deg >= 0:
        last = mats[top_deg]
        for z in range(n):
            if last[z].size and rk(last[z]) != sum(A.hom_dim(z, x) for x in res.term(top_deg)):
                problems.append(("last map not injective", top_deg, z))
    return problems
