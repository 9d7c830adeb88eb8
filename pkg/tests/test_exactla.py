import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from highernak import exactla as la

PRIMES = [2, 3, 101]


def matrices(max_rows=6, max_cols=6):
    return st.tuples(st.integers(1, max_rows), st.integers(1, max_cols), st.sampled_from(PRIMES)).flatmap(
        lambda t: st.tuples(
            st.lists(st.lists(st.integers(0, t[2] - 1), min_size=t[1], max_size=t[1]), min_size=t[0], max_size=t[0]),
            st.just(t[2]),
        )
    )


def test_prime_checks():
    assert la.check_prime(101) == 101
    for bad in (1, 4, 100, 2**26):
        with pytest.raises(la.FieldError):
            la.check_prime(bad)


def test_default_prime_env(monkeypatch):
    monkeypatch.delenv(la.PRIME_ENV, raising=False)
    assert la.default_prime() == 101
    monkeypatch.setenv(la.PRIME_ENV, "7")
    assert la.default_prime() == 7
    monkeypatch.setenv(la.PRIME_ENV, "8")
    with pytest.raises(la.FieldError):
        la.default_prime()


def test_inv_mod():
    for p in PRIMES:
        for a in range(1, p):
            assert a * la.inv_mod(a, p) % p == 1
    with pytest.raises(ZeroDivisionError):
        la.inv_mod(0, 5)


def test_rref_small():
    a = np.array([[1, 2, 3], [2, 4, 6], [1, 0, 1]])
    r, piv = la.rref(a, 101)
    assert piv == [0, 1]
    assert la.rank_dense(a, 101) == 2
    # over F_2 the rows reduce to (1,0,1), 0, (1,0,1)
    assert la.rank_dense(a, 2) == 1


def test_rank_depends_on_characteristic():
    a = np.array([[1, 1], [1, -1]])
    assert la.rank_dense(a, 101) == 2
    assert la.rank_dense(a, 2) == 1


def test_sparse_shapes_validated():
    with pytest.raises(la.DimensionError):
        la.Matrix.from_entries(2, 2, [(2, 0, 1)])
    m = la.Matrix.from_entries(2, 3, [(0, 1, 5), (1, 2, 101)], 101)
    assert m.nnz() == 1
    assert m.transpose().to_dense().tolist() == [[0, 0], [5, 0], [0, 0]]


def test_solve_inconsistent():
    m = la.Matrix.from_dense([[1, 1], [1, 1]], 3)
    assert la.solve(m, [1, 2]) is None
    x = la.solve(m, [2, 2])
    assert (m.to_dense() @ np.array(x) - 2) % 3 == pytest.approx(0)


def test_inverse_dense():
    a = np.array([[2, 1], [1, 1]])
    inv = la.inverse_dense(a, 101)
    assert (la.matmul(a, inv, 101) == np.eye(2, dtype=np.int64)).all()
    with pytest.raises(ZeroDivisionError):
        la.inverse_dense(np.array([[1, 1], [1, 1]]), 101)


def test_nilpotent():
    assert la.is_nilpotent(np.array([[0, 1], [0, 0]]), 5)
    assert not la.is_nilpotent(np.array([[1, 0], [0, 0]]), 5)


@settings(max_examples=150, deadline=None)
@given(matrices())
def test_sparse_and_dense_agree(data):
    rows, p = data
    a = np.array(rows, dtype=np.int64)
    m = la.Matrix.from_dense(a, p)
    assert la.rank(m) == la.rank_dense(a, p)
    k = la.kernel_basis(m).to_dense()
    assert k.shape[1] == a.shape[1] - la.rank_dense(a, p)
    assert not (a @ k % p).any()
    n, free = la.nullspace(a, p)
    assert n.shape[1] == k.shape[1]
    assert not (a @ n % p).any()
    if free:
        assert (n[free] == np.eye(len(free), dtype=np.int64)).all()


@settings(max_examples=100, deadline=None)
@given(matrices(), st.randoms(use_true_random=False))
def test_solve_roundtrip(data, rnd):
    rows, p = data
    a = np.array(rows, dtype=np.int64)
    x = np.array([rnd.randrange(p) for _ in range(a.shape[1])], dtype=np.int64)
    b = a @ x % p
    sol = la.solve(la.Matrix.from_dense(a, p), b.tolist())
    assert sol is not None
    assert ((a @ np.array(sol) - b) % p == 0).all()
    dense = la.solve_dense(a, b.reshape(-1, 1), p)
    assert dense is not None
    assert ((a @ dense - b.reshape(-1, 1)) % p == 0).all()


@settings(max_examples=80, deadline=None)
@given(matrices(5, 5), matrices(5, 5))
def test_multiply_matches_numpy(d1, d2):
    (r1, p), (r2, _) = d1, d2
    a = np.array(r1, dtype=np.int64) % p
    b = np.array(r2, dtype=np.int64) % p
    b = np.resize(b, (a.shape[1], b.shape[1]))
    prod = la.multiply(la.Matrix.from_dense(a, p), la.Matrix.from_dense(b, p))
    assert (prod.to_dense() == a @ b % p).all()
    assert (la.matmul(a, b, p) == a @ b % p).all()


@settings(max_examples=80, deadline=None)
@given(matrices())
def test_column_basis_and_complement(data):
    rows, p = data
    a = np.array(rows, dtype=np.int64)
    cb = la.column_basis(a, p)
    assert len(cb) == la.rank_dense(a[:, cb], p) == la.rank_dense(a, p)
    comp = la.complement_columns(a, p, a.shape[0])
    both = np.hstack([a[:, cb], la.eye(a.shape[0])[:, comp]])
    assert both.shape[1] == a.shape[0]
    assert la.rank_dense(both, p) == a.shape[0]
