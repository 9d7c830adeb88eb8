from math import comb

import pytest

from highernak import bridge as br
from highernak import cycpoly as cp
from highernak.oset import os_n


def test_simplex_label_bijection():
    for n in range(1, 7):
        for d in (1, 2, 3):
            dic = br.dictionary(n, d)
            labels = set(dic.to_label.values())
            assert len(labels) == len(dic.to_label) == comb(n + d, d + 1)
            assert labels == set(os_n(d + 1, n))
            for s, lam in dic.to_label.items():
                assert br.label_to_simplex(n, d, lam) == s


def test_index_shift():
    assert br.simplex_to_label(2, 1, (0, 3)) == (1, 0)
    assert br.label_to_simplex(3, 2, (2, 1, 0)) == (0, 3, 6)


def test_bad_inputs():
    with pytest.raises(ValueError):
        br.simplex_to_label(2, 1, (0, 1))
    with pytest.raises(ValueError):
        br.label_to_simplex(2, 1, (0, 1))
    with pytest.raises(ValueError):
        br.label_to_simplex(2, 1, (2, 0))


@pytest.mark.parametrize("n,d", [(2, 1), (3, 1), (4, 1), (2, 2), (3, 2)])
def test_ext_compatibility(n, d):
    out = br.ext_compatibility_check(n, d)
    assert out["ok"], out
    assert out["pairs"] == comb(comb(n + d, d + 1), 2)


@pytest.mark.parametrize("n,d,count", [(2, 1, 2), (3, 1, 5), (4, 1, 14), (2, 2, 2), (3, 2, 7)])
def test_flip_vs_mutation(n, d, count):
    out = br.flip_vs_mutation_check(n, d)
    assert out["ok"], out
    assert out["triangulations"] == out["tilting"] == count


def test_triangulation_to_tilting():
    T = cp.triangulations(5, 1)[0]
    coll = br.triangulation_to_tilting(3, 1, T)
    assert len(coll) == 3
    with pytest.raises(ValueError):
        br.triangulation_to_tilting(4, 1, T)


def test_cluster_model_pentagon():
    cm = br.cluster_model(2, 1)
    assert len(cm["objects"]) == 5
    assert len(cm["cluster_tilting_sets"]) == 5
    assert br.is_cycle(5, cm["mutation_graph"])
    assert len(cm["intersect"]) == 5


def test_cluster_model_square():
    cm = br.cluster_model(1, 1)
    assert len(cm["objects"]) == 2
    assert len(cm["cluster_tilting_sets"]) == 2


def test_cluster_mutation_replaces_one_object():
    cm = br.cluster_model(3, 1)
    sets = cm["cluster_tilting_sets"]
    for i, j in cm["mutation_graph"]:
        assert len(set(sets[i]) ^ set(sets[j])) == 2


def test_is_cycle():
    assert br.is_cycle(3, [(0, 1), (1, 2), (2, 0)])
    assert not br.is_cycle(4, [(0, 1), (1, 0), (2, 3), (3, 2)])
