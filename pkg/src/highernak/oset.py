"""Ordered sequences, Kupisch series and interval supports.

Objects of the higher Nakayama categories are weakly decreasing integer
tuples.  A Kupisch series ``(l_0, ..., l_{n-1})`` cuts out the finite object
set; in the cyclic case ``l`` is extended periodically and tuples are taken up
to translation by multiples of ``n * (1, ..., 1)``.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from enum import Enum

OSeq = tuple


class KupischError(ValueError):
    pass


class Kind(str, Enum):
    A = "A"
    ATILDE = "Atilde"


def is_oseq(entries) -> bool:
    entries = tuple(entries)
    if not entries:
        raise ValueError("an ordered sequence needs at least one entry")
    return all(entries[i] >= entries[i + 1] for i in range(len(entries) - 1))


def phi(lam, k=1):
    """Shift every entry down by ``k``."""
    return tuple(x - k for x in lam)


@dataclass(frozen=True)
class Violation:
    index: int
    reason: str

    def __str__(self):
        return f"index {self.index}: {self.reason}"


def validate_kupisch(kind, entries):
    """First violated admissibility condition, or ``None`` when admissible."""
    kind = Kind(kind)
    entries = tuple(int(x) for x in entries)
    if not entries:
        raise KupischError("empty Kupisch series")
    n = len(entries)
    for i, l in enumerate(entries):
        if l < 1:
            return Violation(i, f"entry {l} < 1")
    if kind is Kind.A:
        if entries[0] != 1:
            return Violation(0, f"type A series must start with 1, got {entries[0]}")
        for i in range(1, n):
            if entries[i] > entries[i - 1] + 1:
                return Violation(i, f"{entries[i]} > {entries[i - 1]}+1")
    else:
        for i in range(n):
            if entries[i] < 2:
                return Violation(i, f"cyclic series entries must be >= 2, got {entries[i]}")
            prev = entries[(i - 1) % n]
            if entries[i] > prev + 1:
                return Violation(i, f"{entries[i]} > {prev}+1 (cyclically)")
    return None


@dataclass(frozen=True)
class KupischSeries:
    kind: Kind
    entries: tuple

    def __post_init__(self):
        object.__setattr__(self, "kind", Kind(self.kind))
        object.__setattr__(self, "entries", tuple(int(x) for x in self.entries))
        bad = validate_kupisch(self.kind, self.entries)
        if bad is not None:
            raise KupischError(f"inadmissible Kupisch series {self.entries}: {bad}")

    @classmethod
    def type_a(cls, *entries):
        if len(entries) == 1 and not isinstance(entries[0], int):
            entries = tuple(entries[0])
        return cls(Kind.A, entries)

    @classmethod
    def type_atilde(cls, *entries):
        if len(entries) == 1 and not isinstance(entries[0], int):
            entries = tuple(entries[0])
        return cls(Kind.ATILDE, entries)

    @classmethod
    def linear(cls, n):
        """The series ``(1, 2, ..., n)``: no truncation, i.e. type A_n itself."""
        return cls(Kind.A, tuple(range(1, n + 1)))

    @property
    def n(self):
        return len(self.entries)

    @property
    def cyclic(self):
        return self.kind is Kind.ATILDE

    def __getitem__(self, t):
        """``l_t``; for cyclic series ``t`` may be any integer."""
        if self.cyclic:
            return self.entries[t % self.n]
        if not 0 <= t < self.n:
            raise IndexError(t)
        return self.entries[t]

    def to_json(self):
        return {"kind": self.kind.value, "entries": list(self.entries)}

    @classmethod
    def from_json(cls, data):
        if isinstance(data, str):
            data = json.loads(data)
        return cls(Kind(data["kind"]), tuple(data["entries"]))

    def __str__(self):
        sym = "A" if self.kind is Kind.A else "Ã"
        return f"{sym}{self.entries}"


def in_os_l(mu, kupisch: KupischSeries) -> bool:
    """Membership of a single (lifted) tuple in the Kupisch-truncated set."""
    mu = tuple(mu)
    if not is_oseq(mu):
        return False
    if kupisch.cyclic:
        return mu[0] - mu[-1] + 1 <= kupisch[mu[0]]
    if mu[-1] < 0 or mu[0] > kupisch.n - 1:
        return False
    return mu[0] - mu[-1] + 1 <= kupisch[mu[0]]


def canonical(mu, n):
    """Representative of ``mu`` modulo ``n * (1,...,1)`` with first entry in ``[0, n)``."""
    k = mu[0] // n
    return phi(mu, k * n)


def winding_of(mu, n):
    """How many periods ``mu`` sits above its canonical representative."""
    return mu[0] // n


@dataclass(frozen=True)
class OrbitLabel:
    representative: tuple
    modulus: int

    def __post_init__(self):
        object.__setattr__(self, "representative", canonical(tuple(self.representative), self.modulus))

    def lift(self, k=0):
        return phi(self.representative, -k * self.modulus)

    def __str__(self):
        return f"[{','.join(map(str, self.representative))}]_{self.modulus}"


def os_n(d, n):
    """All weakly decreasing ``d``-tuples with entries in ``[0, n-1]``, lexicographic."""
    out = [tuple(sorted(c, reverse=True)) for c in itertools.combinations_with_replacement(range(n), d)]
    return sorted(out)


def _tuples_with_top(t, d, low):
    """Weakly decreasing d-tuples with first entry t and last entry >= low."""
    if d == 1:
        return [(t,)]
    out = []
    for rest in itertools.combinations_with_replacement(range(low, t + 1), d - 1):
        out.append((t,) + tuple(sorted(rest, reverse=True)))
    return out


def enumerate_objects(d, kupisch: KupischSeries, limit=100_000):
    """Object set of the higher Nakayama category, sorted lexicographically.

    Type A: tuples in ``[0, n-1]`` with ``mu_1 - mu_d + 1 <= l_{mu_1}``.
    Cyclic: canonical representatives (``mu_1`` in ``[0, n-1]``) of the
    periodic set.
    """
    if d < 1:
        raise ValueError("d must be >= 1")
    if not isinstance(kupisch, KupischSeries):
        raise KupischError("expected a KupischSeries")
    out = []
    for t in range(kupisch.n):
        low = t + 1 - kupisch[t]
        if not kupisch.cyclic:
            low = max(low, 0)
        out.extend(_tuples_with_top(t, d, low))
        if len(out) > limit:
            raise OverflowError(f"more than {limit} objects")
    return sorted(out)


def interval_support(lam):
    """All ``kappa`` with ``lam_{i+1} <= kappa_i <= lam_i``; each is weakly decreasing."""
    lam = tuple(lam)
    if len(lam) < 2:
        raise ValueError("interval labels have length d+1 >= 2")
    if not is_oseq(lam):
        raise ValueError(f"{lam} is not weakly decreasing")
    ranges = [range(lam[i + 1], lam[i] + 1) for i in range(len(lam) - 1)]
    return {k for k in itertools.product(*ranges)}


def box(x, y):
    """Componentwise interval ``[x, y]`` in Z^d (empty unless ``x <= y``)."""
    return itertools.product(*[range(a, b + 1) for a, b in zip(x, y)])


def parse_tuple(text):
    return tuple(int(t) for t in str(text).replace("(", "").replace(")", "").split(",") if t.strip())
