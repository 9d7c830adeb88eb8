from math import comb

import pytest
from hypothesis import given, strategies as st

from highernak.oset import (
    Kind,
    KupischError,
    KupischSeries,
    OrbitLabel,
    canonical,
    enumerate_objects,
    in_os_l,
    interval_support,
    is_oseq,
    os_n,
    parse_tuple,
    phi,
    validate_kupisch,
    winding_of,
)


def admissible(kind):
    """Random admissible Kupisch series of the given kind."""
    if kind == "A":
        def grow(steps):
            e = [1]
            for s in steps:
                e.append(max(1, min(e[-1] + 1, s)))
            return KupischSeries(Kind.A, tuple(e))

        return st.lists(st.integers(1, 5), max_size=5).map(grow)

    def fix(e):
        e = list(e)
        # lower entries until l_i <= l_{i-1} + 1 holds cyclically
        changed = True
        while changed:
            changed = False
            for i in range(len(e)):
                if e[i] > e[i - 1] + 1:
                    e[i] = e[i - 1] + 1
                    changed = True
        return KupischSeries(Kind.ATILDE, tuple(e))

    return st.lists(st.integers(2, 5), min_size=1, max_size=5).map(fix)


def test_validate_kupisch_examples():
    assert validate_kupisch("A", (1, 2, 2, 3, 3, 4, 3)) is None
    assert validate_kupisch("Atilde", (2, 3, 3, 4, 3, 2)) is None
    assert validate_kupisch("Atilde", (3, 4, 4)) is None
    bad = validate_kupisch("A", (1, 3))
    assert bad.index == 1
    assert validate_kupisch("A", (2, 3)).index == 0
    assert validate_kupisch("Atilde", (2, 4)).index == 1
    assert validate_kupisch("Atilde", (5, 2)).index == 0
    assert validate_kupisch("Atilde", (1, 2)).index == 0
    with pytest.raises(KupischError):
        validate_kupisch("A", ())


def test_series_constructor_rejects_bad_input():
    with pytest.raises(KupischError):
        KupischSeries.type_a(1, 3)


def test_periodic_indexing():
    s = KupischSeries.type_atilde(3, 4, 4)
    assert [s[i] for i in range(-3, 6)] == [3, 4, 4] * 3
    a = KupischSeries.linear(4)
    assert a.entries == (1, 2, 3, 4)
    with pytest.raises(IndexError):
        a[4]


def test_json_roundtrip():
    s = KupischSeries.type_atilde(2, 3, 3, 4, 3, 2)
    assert KupischSeries.from_json(s.to_json()) == s


def test_os_n_counts():
    for d in range(1, 5):
        for n in range(1, 6):
            assert len(os_n(d, n)) == comb(n + d - 1, d)


def test_linear_series_gives_all_of_os_n():
    for d in (1, 2, 3):
        for n in (2, 3, 4):
            assert enumerate_objects(d, KupischSeries.linear(n)) == os_n(d, n)


def test_known_object_counts():
    assert len(enumerate_objects(2, KupischSeries.type_atilde(3, 4, 4))) == 11
    assert len(enumerate_objects(2, KupischSeries.type_a(1, 2, 2, 3, 3, 4, 3))) == 18
    assert len(enumerate_objects(2, KupischSeries.type_atilde(3))) == 3
    assert len(enumerate_objects(3, KupischSeries.type_atilde(3))) == 6


def test_enumeration_limit():
    with pytest.raises(OverflowError):
        enumerate_objects(3, KupischSeries.type_atilde(6, 6, 6), limit=10)


def test_interval_support():
    assert interval_support((2, 1, 0)) == {(2, 1), (2, 0), (1, 1), (1, 0)}
    assert interval_support((1, 1)) == {(1,)}
    with pytest.raises(ValueError):
        interval_support((0, 1))


def test_parse_tuple():
    assert parse_tuple("(3,-1, 0)") == (3, -1, 0)
    assert parse_tuple("4") == (4,)


@given(st.lists(st.integers(-20, 20), min_size=1, max_size=4), st.integers(1, 6))
def test_canonical_is_a_retraction(mu, n):
    mu = tuple(sorted(mu, reverse=True))
    c = canonical(mu, n)
    assert 0 <= c[0] < n
    assert canonical(c, n) == c
    assert phi(c, -winding_of(mu, n) * n) == mu
    assert OrbitLabel(mu, n).lift(winding_of(mu, n)) == mu


@given(st.sampled_from(["A", "Atilde"]).flatmap(admissible), st.integers(1, 3))
def test_objects_are_members(s, d):
    objs = enumerate_objects(d, s)
    assert objs == sorted(set(objs))
    for mu in objs:
        assert is_oseq(mu)
        assert in_os_l(mu, s)
    if s.cyclic:
        for mu in objs:
            assert in_os_l(phi(mu, -s.n), s)
            assert 0 <= mu[0] < s.n


@given(admissible("A"), st.integers(1, 3))
def test_type_a_objects_inside_os_n(s, d):
    objs = set(enumerate_objects(d, s))
    everything = set(os_n(d, s.n))
    assert objs <= everything
    assert objs == {mu for mu in everything if in_os_l(mu, s)}
