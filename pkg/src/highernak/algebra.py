"""Finite based categories and the higher Nakayama algebras.

A finite based category has finitely many objects, a chosen basis of every
Hom space, and composition structure constants.  Every basis element carries
a *word*: a path of arrows (generators of the radical) whose composite it is,
with the empty word for identities.  So a module is determined by what the
arrows do, and radicals are spanned by the non-empty words.

``BasedAlgebra`` realizes the higher Nakayama categories: objects are
weakly decreasing tuples, ``Hom(x, y)`` is one-dimensional per winding when
the whole box ``[x, y]`` lies inside the truncated object set, and composites
of basis elements are basis elements or zero.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from . import exactla
from .oset import Kind, KupischSeries, canonical, enumerate_objects, in_os_l, is_oseq, winding_of

MAX_OBJECTS = 100_000


class CompositionError(ValueError):
    pass


@dataclass(frozen=True)
class BasisMorphism:
    source: int
    target: int
    word: tuple
    winding: int = 0

    @property
    def length(self):
        return len(self.word)


class FiniteCategory:
    """Common machinery; subclasses populate ``objects`` and ``basis`` and
    implement ``_compose``."""

    def __init__(self, objects, p=None):
        self.objects = list(objects)
        self.index = {x: i for i, x in enumerate(self.objects)}
        self.p = exactla.check_prime(p if p is not None else exactla.default_prime())
        self.basis: list[BasisMorphism] = []
        self.hom: dict[tuple[int, int], list[int]] = {}
        self.identities: list[int] = []
        self.arrows: list[int] = []
        self._compose_cache: dict[tuple[int, int], dict[int, int]] = {}
        self._rmult: dict = {}
        self._lmult: dict = {}
        self._op = None
        self._pos = {}

    # -- bookkeeping -------------------------------------------------------

    def _finish(self):
        n = len(self.objects)
        self.arrows_from = [[] for _ in range(n)]
        self.arrows_into = [[] for _ in range(n)]
        for a in self.arrows:
            b = self.basis[a]
            self.arrows_from[b.source].append(a)
            self.arrows_into[b.target].append(a)
        for ids in self.hom.values():
            for k, i in enumerate(ids):
                self._pos[i] = k

    def __len__(self):
        return len(self.objects)

    def obj(self, label):
        """Object index from a label (index or tuple)."""
        if isinstance(label, (int, np.integer)) and not isinstance(label, bool):
            if 0 <= label < len(self.objects) and label not in self.index:
                return int(label)
        key = self.normalize(label)
        if key not in self.index:
            raise KeyError(f"unknown object {label!r}")
        return self.index[key]

    def normalize(self, label):
        return label

    def homs(self, x, y):
        return self.hom.get((x, y), [])

    def hom_dim(self, x, y):
        return len(self.hom.get((x, y), ()))

    def position(self, b):
        """Index of basis element ``b`` inside its own Hom space."""
        return self._pos[b]

    def identity(self, x):
        return self.identities[x]

    def is_radical(self, b):
        return len(self.basis[b].word) > 0

    def dim(self):
        return len(self.basis)

    # -- composition -------------------------------------------------------

    def compose(self, g, f):
        """``g o f`` as a dictionary ``{basis id: coefficient}``."""
        key = (g, f)
        hit = self._compose_cache.get(key)
        if hit is not None:
            return hit
        bf, bg = self.basis[f], self.basis[g]
        if bf.target != bg.source:
            raise CompositionError(f"cannot compose {g} after {f}: {bf.target} != {bg.source}")
        if not bf.word:
            res = {g: 1}
        elif not bg.word:
            res = {f: 1}
        else:
            res = self._compose(g, f)
        self._compose_cache[key] = res
        return res

    def _compose(self, g, f):
        raise NotImplementedError

    def compose_vectors(self, gv, fv):
        out: dict[int, int] = {}
        p = self.p
        for g, a in gv.items():
            for f, b in fv.items():
                for h, c in self.compose(g, f).items():
                    out[h] = (out.get(h, 0) + a * b * c) % p
        return {h: c for h, c in out.items() if c}

    def right_mult(self, a, x):
        """Matrix of ``Hom(t, x) -> Hom(s, x), g -> g o a`` for ``a: s -> t``."""
        key = (a, x)
        m = self._rmult.get(key)
        if m is None:
            ba = self.basis[a]
            src, tgt = self.homs(ba.target, x), self.homs(ba.source, x)
            m = exactla.zeros(len(tgt), len(src))
            for j, g in enumerate(src):
                for h, c in self.compose(g, a).items():
                    m[self._pos[h], j] = c
            self._rmult[key] = m
        return m

    def left_mult(self, a, x):
        """Matrix of ``Hom(x, s) -> Hom(x, t), h -> a o h`` for ``a: s -> t``."""
        key = (a, x)
        m = self._lmult.get(key)
        if m is None:
            ba = self.basis[a]
            src, tgt = self.homs(x, ba.source), self.homs(x, ba.target)
            m = exactla.zeros(len(tgt), len(src))
            for j, h in enumerate(src):
                for g, c in self.compose(a, h).items():
                    m[self._pos[g], j] = c
            self._lmult[key] = m
        return m

    def opposite(self):
        if self._op is None:
            self._op = OppositeCategory(self)
        return self._op

    @property
    def op(self):
        return self.opposite()

    # -- export ------------------------------------------------------------

    def label(self, x):
        return self.objects[x]

    def hom_dim_matrix(self):
        n = len(self.objects)
        return [[self.hom_dim(x, y) for y in range(n)] for x in range(n)]

    def to_json(self):
        return {
            "objects": [_jsonable(self.label(x)) for x in range(len(self.objects))],
            "hom_dims": self.hom_dim_matrix(),
            "arrows": [
                {"source": self.basis[a].source, "target": self.basis[a].target, "winding": self.basis[a].winding}
                for a in self.arrows
            ],
            "prime": self.p,
        }

    def to_dot(self, name="Q"):
        lines = [f"digraph {name} {{"]
        for x in range(len(self.objects)):
            lines.append(f'  {x} [label="{_fmt(self.label(x))}"];')
        for a in self.arrows:
            b = self.basis[a]
            extra = f' [label="w{b.winding}"]' if b.winding else ""
            lines.append(f"  {b.source} -> {b.target}{extra};")
        lines.append("}")
        return "\n".join(lines)


class OppositeCategory(FiniteCategory):
    def __init__(self, base: FiniteCategory):
        super().__init__(base.objects, base.p)
        self.base = base
        self.basis = [BasisMorphism(b.target, b.source, tuple(reversed(b.word)), b.winding) for b in base.basis]
        self.hom = {(y, x): ids for (x, y), ids in base.hom.items()}
        self.identities = base.identities
        self.arrows = base.arrows
        self._op = base
        self._finish()

    def normalize(self, label):
        return self.base.normalize(label)

    def label(self, x):
        return self.base.label(x)

    def _compose(self, g, f):
        return self.base.compose(f, g)


def _fmt(label):
    if isinstance(label, tuple):
        return "(" + ",".join(map(str, label)) + ")"
    return str(label)


def _jsonable(label):
    if isinstance(label, tuple):
        return [_jsonable(v) for v in label]
    if isinstance(label, (np.integer,)):
        return int(label)
    return label


# ---------------------------------------------------------------------------
# higher Nakayama categories


def universal_hom_dim(d, x, y, variant="os"):
    """Hom dimension in the universal categories on Z^d.

    ``free``: the incidence category of the product order.  ``os``: the
    quotient by tuples that are not weakly decreasing, where the whole box
    must stay weakly decreasing.
    """
    x, y = tuple(x), tuple(y)
    if len(x) != d or len(y) != d:
        raise ValueError("tuples of the wrong length")
    if not all(a <= b for a, b in zip(x, y)):
        return 0
    if variant == "free":
        return 1
    if variant not in ("os", "os-restricted"):
        raise ValueError(f"unknown variant {variant!r}")
    if not (is_oseq(x) and is_oseq(y)):
        raise ValueError("os-restricted variant needs weakly decreasing tuples")
    return int(all(y[i + 1] <= x[i] for i in range(d - 1)))


class BasedAlgebra(FiniteCategory):
    """The higher Nakayama algebra attached to ``(d, kupisch)``."""

    def __init__(self, d, kupisch: KupischSeries, p=None):
        if d < 1:
            raise ValueError("d must be >= 1")
        if not isinstance(kupisch, KupischSeries):
            raise TypeError("expected a KupischSeries")
        objs = enumerate_objects(d, kupisch, limit=MAX_OBJECTS)
        super().__init__(objs, p)
        self.d = d
        self.kupisch = kupisch
        self.cyclic = kupisch.cyclic
        self.n = kupisch.n
        self._by_key: dict[tuple[int, int, int], int] = {}
        self._build_basis()
        self._finish()

    # -- the Hom rule ------------------------------------------------------

    def ell(self, t):
        return self.kupisch[t]

    def nonzero(self, x, y):
        """Does the basis morphism between lifts ``x -> y`` survive?"""
        d = self.d
        if not all(a <= b for a, b in zip(x, y)):
            return False
        if not (in_os_l(x, self.kupisch) and in_os_l(y, self.kupisch)):
            return False
        if d == 1:
            # classical relations: the path x ~> y dies iff it is at least as long as P_y
            return y[0] - x[0] + 1 <= self.ell(y[0])
        if not all(y[i + 1] <= x[i] for i in range(d - 1)):
            return False
        xd = x[-1]
        return all(t - xd + 1 <= self.ell(t) for t in range(x[0], y[0] + 1))

    def _targets(self, x):
        """All lifts ``y`` with a nonzero morphism ``x -> y``."""
        d = self.d
        big = max(self.kupisch.entries)
        if self.cyclic:
            top = x[-1] + big - 1
        else:
            top = self.n - 1
        hi = (top,) + tuple(x[:-1])
        out = []

        def rec(i, pre):
            if i == d:
                if self.nonzero(x, pre):
                    out.append(pre)
                return
            lo_i = x[i]
            hi_i = hi[i] if i > 0 else top
            if i > 0:
                hi_i = min(hi_i, pre[i - 1])
            for v in range(lo_i, hi_i + 1):
                rec(i + 1, pre + (v,))

        rec(0, ())
        return out

    def normalize(self, label):
        label = tuple(int(v) for v in label) if not isinstance(label, tuple) else label
        if self.cyclic:
            return canonical(label, self.n)
        return label

    def lift_key(self, y):
        """``(object index, winding)`` of a lifted tuple."""
        if self.cyclic:
            return self.index[canonical(y, self.n)], winding_of(y, self.n)
        return self.index[y], 0

    def _build_basis(self):
        d = self.d
        targets = {}
        for xi, x in enumerate(self.objects):
            targets[xi] = self._targets(x)
            for y in targets[xi]:
                yi, w = self.lift_key(y)
                bid = len(self.basis)
                self.basis.append(BasisMorphism(xi, yi, (), w))  # words filled below
                self._by_key[(xi, yi, w)] = bid
                self.hom.setdefault((xi, yi), []).append(bid)
        self.identities = [self._by_key[(i, i, 0)] for i in range(len(self.objects))]
        # arrows: basis morphisms x -> x + e_i
        arrow_of = {}
        for xi, x in enumerate(self.objects):
            for i in range(d):
                y = tuple(v + (1 if j == i else 0) for j, v in enumerate(x))
                key = self.lift_key(y) if (is_oseq(y) and in_os_l(y, self.kupisch)) else None
                if key is None:
                    continue
                bid = self._by_key.get((xi,) + key)
                if bid is not None:
                    arrow_of[(xi, i)] = bid
        self.arrows = sorted(arrow_of.values())
        self._arrow_dir = {v: k[1] for k, v in arrow_of.items()}
        # words along the path raising coordinates 1, 2, ..., d in turn
        for xi, x in enumerate(self.objects):
            for y in targets[xi]:
                yi, w = self.lift_key(y)
                bid = self._by_key[(xi, yi, w)]
                word = []
                z = list(x)
                for i in range(d):
                    while z[i] < y[i]:
                        zi, zw = self.lift_key(tuple(z))
                        word.append(arrow_of[(zi, i)])
                        z[i] += 1
                self.basis[bid] = BasisMorphism(xi, yi, tuple(word), w)

    def _compose(self, g, f):
        bf, bg = self.basis[f], self.basis[g]
        w = bf.winding + bg.winding
        bid = self._by_key.get((bf.source, bg.target, w))
        if bid is None:
            return {}
        return {bid: 1}

    def lift_target(self, b):
        """The lifted target of basis element ``b`` (source at its canonical lift)."""
        bb = self.basis[b]
        y = self.objects[bb.target]
        return tuple(v + bb.winding * self.n for v in y) if self.cyclic else y

    def morphism(self, x, y):
        """Basis id of the morphism between lifts ``x -> y`` (``x`` canonical), or None."""
        x = tuple(x)
        xi = self.obj(x)
        if self.cyclic:
            shift = winding_of(x, self.n) * self.n
            y = tuple(v - shift for v in y)
            x = canonical(x, self.n)
        if not self.nonzero(x, tuple(y)):
            return None
        yi, w = self.lift_key(tuple(y))
        return self._by_key.get((xi, yi, w))

    def arrow_direction(self, a):
        return self._arrow_dir[a]

    def label(self, x):
        return self.objects[x]

    def to_json(self):
        data = super().to_json()
        data["d"] = self.d
        data["kupisch"] = self.kupisch.to_json()
        return data

    def __repr__(self):
        return f"BasedAlgebra(d={self.d}, {self.kupisch}, objects={len(self.objects)}, p={self.p})"


def build(d, kupisch, p=None) -> BasedAlgebra:
    """Construct the higher Nakayama algebra for ``(d, kupisch)``."""
    if isinstance(kupisch, dict):
        kupisch = KupischSeries.from_json(kupisch)
    return BasedAlgebra(d, kupisch, p)


def auslander_type_a(d, n, p=None) -> BasedAlgebra:
    """The d-Auslander algebra of type A_n (no Kupisch truncation)."""
    return BasedAlgebra(d, KupischSeries.linear(n), p)


def preprojective_a3(p=None) -> BasedAlgebra:
    return BasedAlgebra(2, KupischSeries(Kind.ATILDE, (3,)), p)


def compose(A: FiniteCategory, g, f):
    """``g o f`` for basis ids; returns a basis id or ``None`` for zero.

    Raises ``CompositionError`` if the pair is not composable or if the
    composite is not a single basis element.
    """
    res = A.compose(g, f)
    if not res:
        return None
    if len(res) != 1 or next(iter(res.values())) != 1:
        raise CompositionError("composite is not a basis element")
    return next(iter(res))


def window(d, lo, hi, p=None):
    """Finite window of the universal d-Nakayama category on entries ``[lo, hi]``.

    Returns ``(algebra, offset)``; object ``mu`` of the algebra stands for
    ``mu + offset * (1, ..., 1)``.
    """
    return auslander_type_a(d, hi - lo + 1, p), lo


def algebra_json(A: FiniteCategory) -> str:
    return json.dumps(A.to_json())
