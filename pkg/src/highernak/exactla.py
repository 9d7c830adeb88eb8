"""Exact linear algebra over prime fields.

Two layers live here.  ``Matrix`` is a sparse container (row dictionaries,
zeros never stored) with row-major Gaussian elimination; it is the public
surface.  The homological engine works fiber by fiber on small blocks, so it
uses the dense ``numpy`` kernels at the bottom of the module (``rref``,
``nullspace``, ...).  Both are exact: every entry is an integer in ``[0, p)``.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field

import numpy as np

DEFAULT_PRIME = 101
PRIME_ENV = "HIGHERNAK_PRIME"
_MAX_PRIME = 2**25  # keeps dense int64 products and their sums exact


class FieldError(ValueError):
    pass


class DimensionError(ValueError):
    pass


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


def check_prime(p: int) -> int:
    p = int(p)
    if not is_prime(p) or p >= _MAX_PRIME:
        raise FieldError(f"{p} is not a supported prime modulus")
    return p


def default_prime() -> int:
    """The configured field: ``$HIGHERNAK_PRIME`` if set, else 101."""
    raw = os.environ.get(PRIME_ENV)
    if raw:
        return check_prime(int(raw))
    return DEFAULT_PRIME


def inv_mod(a: int, p: int) -> int:
    a %= p
    if a == 0:
        raise ZeroDivisionError("zero has no inverse")
    return pow(a, p - 2, p)


# ---------------------------------------------------------------------------
# sparse matrices


@dataclass
class Matrix:
    """Sparse matrix over F_p.  ``rows_data[i]`` maps column -> nonzero value."""

    rows: int
    cols: int
    p: int = DEFAULT_PRIME
    rows_data: list[dict[int, int]] = field(default_factory=list)

    def __post_init__(self):
        check_prime(self.p)
        if self.rows < 0 or self.cols < 0:
            raise DimensionError("negative shape")
        if not self.rows_data:
            self.rows_data = [{} for _ in range(self.rows)]
        if len(self.rows_data) != self.rows:
            raise DimensionError("row data does not match row count")
        for r in self.rows_data:
            for c in list(r):
                if not 0 <= c < self.cols:
                    raise DimensionError(f"column {c} out of range")
                v = r[c] % self.p
                if v:
                    r[c] = v
                else:
                    del r[c]

    @classmethod
    def from_entries(cls, rows, cols, entries, p=DEFAULT_PRIME):
        data = [{} for _ in range(rows)]
        for r, c, v in entries:
            if not (0 <= r < rows and 0 <= c < cols):
                raise DimensionError(f"entry ({r}, {c}) out of range")
            data[r][c] = (data[r].get(c, 0) + v) % p
        return cls(rows, cols, p, data)

    @classmethod
    def from_dense(cls, a, p=DEFAULT_PRIME):
        a = np.asarray(a, dtype=np.int64) % p
        rows, cols = a.shape
        data = [{int(c): int(a[r, c]) for c in np.flatnonzero(a[r])} for r in range(rows)]
        return cls(rows, cols, p, data)

    @classmethod
    def identity(cls, k, p=DEFAULT_PRIME):
        return cls(k, k, p, [{i: 1} for i in range(k)])

    def entries(self):
        """Sorted ``(row, col, value)`` triples of the nonzero entries."""
        return [(r, c, v) for r, row in enumerate(self.rows_data) for c, v in sorted(row.items())]

    def to_dense(self):
        a = np.zeros((self.rows, self.cols), dtype=np.int64)
        for r, row in enumerate(self.rows_data):
            for c, v in row.items():
                a[r, c] = v
        return a

    def transpose(self):
        return Matrix.from_entries(self.cols, self.rows, [(c, r, v) for r, c, v in self.entries()], self.p)

    def nnz(self):
        return sum(len(r) for r in self.rows_data)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.rows, self.cols, self.p) == (other.rows, other.cols, other.p) and self.rows_data == other.rows_data

    def is_zero(self):
        return self.nnz() == 0


def _check_same_field(*ms):
    ps = {m.p for m in ms}
    if len(ps) != 1:
        raise FieldError("matrices over different fields")
    return ps.pop()


def _eliminate(rows_data, cols, p):
    """Reduced row echelon form of sparse rows.

    Pivots are picked column by column among the remaining rows, preferring
    the sparsest candidate row to limit fill-in.  Returns ``(rows, pivots)``
    with ``rows[k]`` having a leading 1 in column ``pivots[k]``.
    """
    remaining = [dict(r) for r in rows_data if r]
    by_col: dict[int, set[int]] = {}
    for i, r in enumerate(remaining):
        for c in r:
            by_col.setdefault(c, set()).add(i)
    alive = set(range(len(remaining)))
    reduced: list[dict[int, int]] = []
    pivots: list[int] = []
    for col in range(cols):
        cands = [i for i in by_col.get(col, ()) if i in alive and col in remaining[i]]
        if not cands:
            continue
        piv = min(cands, key=lambda i: (len(remaining[i]), i))
        alive.discard(piv)
        prow = remaining[piv]
        inv = inv_mod(prow[col], p)
        prow = {c: v * inv % p for c, v in prow.items()}
        for i in cands:
            if i == piv:
                continue
            row = remaining[i]
            f = row[col]
            for c, v in prow.items():
                nv = (row.get(c, 0) - f * v) % p
                if nv:
                    if c not in row:
                        by_col.setdefault(c, set()).add(i)
                    row[c] = nv
                else:
                    row.pop(c, None)
        reduced.append(prow)
        pivots.append(col)
    # back substitution to reach reduced form
    for k in range(len(reduced) - 1, -1, -1):
        pc = pivots[k]
        prow = reduced[k]
        for j in range(k):
            row = reduced[j]
            f = row.get(pc)
            if f:
                for c, v in prow.items():
                    nv = (row.get(c, 0) - f * v) % p
                    if nv:
                        row[c] = nv
                    else:
                        row.pop(c, None)
    return reduced, pivots


def rank(m: Matrix) -> int:
    _, piv = _eliminate(m.rows_data, m.cols, m.p)
    return len(piv)


def kernel_basis(m: Matrix) -> Matrix:
    """Columns of the returned ``cols x k`` matrix span the null space of ``m``."""
    red, piv = _eliminate(m.rows_data, m.cols, m.p)
    pivset = set(piv)
    free = [c for c in range(m.cols) if c not in pivset]
    fpos = {c: j for j, c in enumerate(free)}
    entries = [(c, j, 1) for j, c in enumerate(free)]
    for row, pc in zip(red, piv):
        for c, v in row.items():
            if c != pc:
                entries.append((pc, fpos[c], -v))
    return Matrix.from_entries(m.cols, len(free), entries, m.p)


def solve(m: Matrix, b):
    """A vector ``x`` (list) with ``m x = b``, or ``None`` if inconsistent."""
    if len(b) != m.rows:
        raise DimensionError("right-hand side has wrong length")
    p = m.p
    aug = [dict(r) for r in m.rows_data]
    for i, v in enumerate(b):
        if v % p:
            aug[i][m.cols] = v % p
    red, piv = _eliminate(aug, m.cols + 1, p)
    if piv and piv[-1] == m.cols:
        return None
    x = [0] * m.cols
    for row, pc in zip(red, piv):
        x[pc] = row.get(m.cols, 0)
    return x


def multiply(a: Matrix, b: Matrix) -> Matrix:
    p = _check_same_field(a, b)
    if a.cols != b.rows:
        raise DimensionError(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    out = []
    for row in a.rows_data:
        acc: dict[int, int] = {}
        for k, v in row.items():
            for c, w in b.rows_data[k].items():
                acc[c] = (acc.get(c, 0) + v * w) % p
        out.append({c: v for c, v in acc.items() if v})
    return Matrix(a.rows, b.cols, p, out)


# ---------------------------------------------------------------------------
# dense kernels (numpy int64, entries reduced mod p)


def zeros(r, c):
    return np.zeros((r, c), dtype=np.int64)


def eye(k):
    return np.eye(k, dtype=np.int64)


def rref(a, p):
    """Reduced row echelon form of a dense matrix; returns ``(R, pivots)``."""
    r = np.array(a, dtype=np.int64) % p
    nrows, ncols = r.shape
    pivots = []
    row = 0
    for col in range(ncols):
        if row >= nrows:
            break
        nz = np.flatnonzero(r[row:, col])
        if nz.size == 0:
            continue
        k = row + int(nz[0])
        if k != row:
            r[[row, k]] = r[[k, row]]
        inv = pow(int(r[row, col]), p - 2, p)
        if inv != 1:
            r[row] = r[row] * inv % p
        col_vals = r[:, col].copy()
        col_vals[row] = 0
        nzr = np.flatnonzero(col_vals)
        if nzr.size:
            r[nzr] = (r[nzr] - np.outer(col_vals[nzr], r[row])) % p
        pivots.append(col)
        row += 1
    return r, pivots


def rank_dense(a, p) -> int:
    a = np.asarray(a)
    if a.size == 0:
        return 0
    return len(rref(a, p)[1])


def nullspace(a, p):
    """Null space basis ``N`` (columns) and the free-variable index list.

    ``N[free, :]`` is the identity, so the coordinates of any vector ``v`` in
    the null space are simply ``v[free]``.
    """
    a = np.asarray(a, dtype=np.int64)
    ncols = a.shape[1]
    if a.shape[0] == 0:
        return eye(ncols), list(range(ncols))
    r, piv = rref(a, p)
    pivset = set(piv)
    free = [c for c in range(ncols) if c not in pivset]
    n = zeros(ncols, len(free))
    for j, c in enumerate(free):
        n[c, j] = 1
    for i, pc in enumerate(piv):
        if free:
            n[pc, :] = (-r[i, free]) % p
    return n, free


def column_basis(a, p):
    """Indices of a maximal linearly independent set of columns (greedy, left to right)."""
    a = np.asarray(a, dtype=np.int64)
    if a.size == 0:
        return []
    return rref(a, p)[1]


def complement_columns(a, p, dim):
    """Standard basis vectors of ``F_p^dim`` completing the column space of ``a``.

    Returns the list of indices ``k`` such that ``e_k`` together with the
    columns of ``a`` span everything.
    """
    a = np.asarray(a, dtype=np.int64).reshape(dim, -1)
    aug = np.hstack([a, eye(dim)])
    piv = rref(aug, p)[1]
    m = a.shape[1]
    return [c - m for c in piv if c >= m]


def solve_dense(a, b, p):
    """Some ``x`` with ``a x = b`` (``b`` may be a matrix), or ``None``."""
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    vec = b.ndim == 1
    if vec:
        b = b.reshape(-1, 1)
    n = a.shape[1]
    r, piv = rref(np.hstack([a, b]), p)
    if piv and piv[-1] >= n:
        return None
    x = zeros(n, b.shape[1])
    for i, pc in enumerate(piv):
        x[pc] = r[i, n:]
    return x[:, 0] if vec else x


def inverse_dense(a, p):
    a = np.asarray(a, dtype=np.int64)
    k = a.shape[0]
    if a.shape != (k, k):
        raise DimensionError("not square")
    r, piv = rref(np.hstack([a, eye(k)]), p)
    if piv[:k] != list(range(k)):
        raise ZeroDivisionError("singular matrix")
    return r[:, k:]


def is_invertible(a, p) -> bool:
    a = np.asarray(a)
    if a.shape[0] != a.shape[1]:
        return False
    if a.shape[0] == 0:
        return True
    return rank_dense(a, p) == a.shape[0]


def matmul(a, b, p):
    return (np.asarray(a, dtype=np.int64) @ np.asarray(b, dtype=np.int64)) % p


def is_nilpotent(a, p) -> bool:
    a = np.asarray(a, dtype=np.int64) % p
    k = a.shape[0]
    if k == 0:
        return True
    q = a.copy()
    steps = 1
    while steps < k:
        q = matmul(q, q, p)
        steps *= 2
    return not q.any()
