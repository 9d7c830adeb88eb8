import itertools
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from highernak import cycpoly as cp
from highernak import oracles


def test_det_and_normal():
    assert cp.det([[2, 0], [0, 3]]) == 6
    assert cp.det([[0, 1], [1, 0]]) == -1
    assert cp.det([[1, 2], [2, 4]]) == 0
    assert cp.det([]) == 1
    nrm = cp.normal([(0, 0), (1, 1)])
    assert cp.side(nrm, (0, 0), (1, 0)) * cp.side(nrm, (0, 0), (0, 1)) < 0


@pytest.mark.parametrize("p,delta", [(p, dl) for dl in (2, 3, 4) for p in range(dl + 1, 9)])
def test_gale_facets_match_hull(p, delta):
    assert sorted(S for S, _ in cp.facets(p, delta)) == sorted(cp.hull_facets(p, delta))


def test_polygon_sides():
    f = dict(cp.facets(5, 2))
    assert f[(0, 4)] == "upper"
    assert all(k == "lower" for S, k in f.items() if S != (0, 4))


def test_degenerate_polytope():
    with pytest.raises(ValueError):
        cp.facets(3, 4)


def test_catalan_counts():
    assert [len(cp.triangulations(p, 1)) for p in range(3, 13)] == [oracles.catalan(p - 2) for p in range(3, 13)]
    assert all(oracles.catalan(k) == oracles.catalan_recursive(k) for k in range(12))


def test_cyclic_four_polytope_counts():
    # published counts of triangulations of C(p, 4)
    assert [len(cp.triangulations(p, 2)) for p in range(5, 10)] == [1, 2, 7, 40, 357]


def test_cyclic_six_polytope_counts():
    assert [len(cp.triangulations(p, 3)) for p in range(7, 10)] == [1, 2, 9]
    # some maximal collections are not triangulations
    assert len(cp.maximal_collections(9, 3)) == 12


@pytest.mark.parametrize("p,d", [(6, 1), (8, 1), (7, 2), (8, 2), (9, 2), (8, 3)])
def test_triangulation_sizes(p, d):
    for T in cp.triangulations(p, d):
        assert len(T) == cp.expected_size(p, d) == comb(p - d - 1, d)
        assert all(cp.gap_rule(s) for s in T.simplices)


def test_bound():
    with pytest.raises(cp.BoundExceeded):
        cp.triangulations(13, 1)
    assert len(cp.triangulations(6, 1, bound=6)) == 14


def test_nonlower_counts():
    for d in (1, 2, 3):
        for n in range(1, 6):
            assert len(cp.nonlower_simplices(n + 2 * d, d)) == comb(n + d, d + 1)


def test_nonlower_is_gap_rule():
    for p, d in [(7, 1), (8, 2), (9, 3)]:
        nl = set(cp.nonlower_simplices(p, d))
        allsimp = set(itertools.combinations(range(p), d + 1))
        assert nl == {s for s in allsimp if cp.gap_rule(s)}


def test_upper_and_internal_partition_nonlower():
    for p, d in [(6, 1), (8, 2), (9, 3)]:
        nl = set(cp.nonlower_simplices(p, d))
        up = set(cp.upper_simplices(p, d))
        inn = set(cp.internal_simplices(p, d))
        assert up | inn == nl and not up & inn
        for T in cp.triangulations(p, d):
            assert up <= T.simplices


def test_intertwining():
    assert cp.intertwines((0, 2), (1, 3))
    assert not cp.intertwines((1, 3), (0, 2))
    assert cp.intersecting((1, 3), (0, 2))
    assert not cp.intersecting((0, 2), (0, 3))
    with pytest.raises(ValueError):
        cp.intertwines((0, 2), (1, 3, 5))


def test_maximal_compatible_sets_small():
    items = [1, 2, 3]
    clash = lambda a, b: a + b == 3
    assert sorted(sorted(s) for s in cp.maximal_compatible_sets(items, clash)) == [[1, 3], [2, 3]]


@pytest.mark.parametrize("p,d", [(6, 1), (7, 1), (7, 2), (8, 2), (9, 3)])
def test_flip_graph_connected(p, d):
    ts, edges = cp.flip_graph(p, d)
    assert cp.is_connected(len(ts), edges)
    for i, j, removed, added in edges:
        assert ts[i].simplices - {removed} == ts[j].simplices - {added}


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([(6, 1), (7, 1), (7, 2), (8, 2)]), st.randoms(use_true_random=False))
def test_flip_is_an_involution(case, rnd):
    p, d = case
    T = rnd.choice(cp.triangulations(p, d))
    s = rnd.choice(T.sorted())
    T2 = cp.bistellar_flip(T, s)
    if T2 is None:
        # every diagonal of a polygon flips; in higher dimension some internal simplices are stuck
        assert s in cp.upper_simplices(p, d) or (d > 1 and len(cp.flip_partners(T, s)) != 1)
        return
    (added,) = T2.simplices - T.simplices
    assert cp.bistellar_flip(T2, added) == T


def test_flip_requires_member():
    T = cp.triangulations(5, 1)[0]
    with pytest.raises(KeyError):
        cp.flip_partners(T, (9, 11))


def test_triangulation_json():
    T = cp.triangulations(5, 1)[0]
    assert T.to_json() == [list(s) for s in T.sorted()]
    assert cp.flip_graph_dot(5, 1).count("--") == 5


def test_window_check():
    T = cp.triangulations(7, 2)[3]
    inner = [s for s in T.simplices if s not in cp.upper_simplices(7, 2)]
    assert cp.window_triangulation_check(inner, 0, 6, 2)
    moved = [tuple(v + 10 for v in s) for s in inner]
    assert cp.window_triangulation_check(moved, 10, 16, 2)
    assert not cp.window_triangulation_check(inner[1:], 0, 6, 2)
    assert not cp.window_triangulation_check(inner, 0, 3, 2)


def test_ind_finite_probe():
    T = cp.triangulations(6, 1)[0]
    coll = [tuple(v + 3 for v in s) for s in T.simplices]
    a, b = cp.ind_finite_probe(coll, (4, 5), 1, 4)
    assert a <= 4 and 5 <= b
    assert cp.window_triangulation_check(coll, a, b, 1)
    assert (a, b) == (3, 5)
    assert cp.window_triangulation_check(coll, 3, 8, 1)
    assert cp.ind_finite_probe([], (0, 1), 1, 0) is None
