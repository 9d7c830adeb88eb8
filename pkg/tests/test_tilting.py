import pytest

from highernak import homcalc as hc
from highernak import oracles
from highernak import tilting as tl
from highernak.algebra import auslander_type_a, build, preprojective_a3
from highernak.oset import KupischSeries, os_n
from highernak.suite import preprojective_collections


def test_canonical_candidate_labels():
    A = auslander_type_a(2, 3)
    C = tl.canonical_ct_candidate(A, 2)
    assert C.labels == os_n(3, 3)
    assert C.validate()


def test_validate_rejects_duplicates():
    A = auslander_type_a(1, 3)
    P = hc.projective(A, 0)
    with pytest.raises(ValueError):
        tl.ModuleCollection(A, [P, hc.projective(A, 0)]).validate()
    with pytest.raises(ValueError):
        tl.ModuleCollection(A, [P], ["a", "b"])


def test_sub_and_without():
    A = auslander_type_a(1, 3)
    C = tl.canonical_ct_candidate(A, 1)
    assert len(C.without(0)) == len(C) - 1
    assert C.sub([1, 2]).labels == C.labels[1:3]


@pytest.mark.parametrize("d,s", [
    (1, KupischSeries.linear(3)),
    (2, KupischSeries.linear(3)),
    (2, KupischSeries.type_atilde(3, 4, 4)),
    (2, KupischSeries.type_a(1, 2, 2, 3, 3, 4, 3)),
    (3, KupischSeries.type_atilde(3, 3)),
], ids=str)
def test_canonical_candidate_is_cluster_tilting(d, s):
    A = build(d, s)
    C = tl.canonical_ct_candidate(A, d)
    out = tl.verify_cluster_tilting(A, C, d)
    assert out["verified"], out
    assert out["gldim"] <= d + 1 <= out["domdim"]
    prof = tl.rigidity_profile(C, d, 2 * d + 2)
    assert tl.dz_supported(prof, d)
    assert all(prof[i] == 0 for i in range(1, d))


def test_missing_projective_is_a_witness():
    A = auslander_type_a(2, 3)
    C = tl.canonical_ct_candidate(A, 2)
    k = next(i for i, M in enumerate(C.members) if hc.is_projective(M))
    out = tl.verify_cluster_tilting(A, C.without(k), 2)
    assert not out["verified"]
    assert "not a member" in out["witness"]


def test_too_small_collection_fails_certificate():
    # projectives and injectives alone are not 2-cluster-tilting over A^(2)_3
    A = auslander_type_a(2, 3)
    C = tl.canonical_ct_candidate(A, 2)
    keep = [i for i, M in enumerate(C.members) if hc.is_projective(M) or hc.is_injective(M)]
    assert len(keep) < len(C)
    out = tl.verify_cluster_tilting(A, C.sub(keep), 2)
    assert not out["verified"]


def test_rigidity_bound_validation():
    A = auslander_type_a(2, 3)
    with pytest.raises(ValueError):
        tl.rigidity_profile(tl.canonical_ct_candidate(A, 2), 2, 1)


@pytest.mark.parametrize("n,d", [(2, 1), (3, 1), (2, 2), (3, 2)])
def test_endomorphism_category_is_next_algebra(n, d):
    G = tl.endomorphism_category(tl.canonical_ct_candidate(auslander_type_a(d, n), d))
    C = auslander_type_a(d + 1, n)
    assert list(G.objects) == list(C.objects)
    assert G.hom_dim_matrix() == C.hom_dim_matrix()
    cert = tl.auslander_certificate(G, d)
    assert cert["holds"] and cert["gldim"] == d + 1


def test_endomorphism_category_composition_is_associative():
    G = tl.endomorphism_category(tl.canonical_ct_candidate(auslander_type_a(1, 3), 1))
    m = len(G)
    for x in range(m):
        for y in range(m):
            for z in range(m):
                for w in range(m):
                    for f in G.homs(x, y):
                        for g in G.homs(y, z):
                            for h in G.homs(z, w):
                                a = G.compose_vectors({h: 1}, G.compose(g, f))
                                b = G.compose_vectors(G.compose(h, g), {f: 1})
                                assert a == b


def test_preprojective_collections():
    A, M, N = preprojective_collections()
    assert len(M) == len(N) == 6
    assert tl.verify_cluster_tilting(A, M, 2)["verified"]
    assert tl.verify_cluster_tilting(A, N, 2)["verified"]
    qm = tl.ext_d_quiver(A, M, 2)
    assert len(qm.vertices) == 1 and qm.loops() == 1
    qn = tl.ext_d_quiver(A, N, 2)
    assert qn.vertices == [] and qn.arrow_count == 0
    assert qm.to_dot().count("->") == 1
    assert qm.to_json()["arrows"][0]["multiplicity"] == 1


@pytest.mark.parametrize("n,d", [(3, 1), (4, 1), (2, 2), (3, 2)])
def test_tau_d_orbits(n, d):
    A = auslander_type_a(d, n)
    R = tl.tau_d_orbit_reconstruction(A, d)
    C = tl.canonical_ct_candidate(A, d)
    assert len(R) == len(C)
    assert sorted(tl.find_member(C, X) for X in R.members) == list(range(len(C)))


def test_tau_d_orbits_need_d_hereditary():
    with pytest.raises(ValueError):
        tl.tau_d_orbit_reconstruction(build(1, KupischSeries.type_a(1, 2, 2, 3, 3, 4, 3)), 1)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_tilting_counts_are_catalan(n):
    A = auslander_type_a(1, n)
    assert len(tl.tilting_enumerate(A, 1)) == oracles.catalan(n)


def test_mutation_is_an_involution():
    A = auslander_type_a(2, 3)
    ctx = tl.tilting_context(A, 2)
    tilts = set(tl.tilting_enumerate(A, 2, ctx))
    moves = 0
    for T in tilts:
        for X in T:
            try:
                T2, Y, seq = tl.tilting_mutate(ctx, T, X)
            except tl.NoExchangePartner:
                continue
            moves += 1
            assert T2 in tilts
            assert seq.is_exact()
            back, X2, _ = tl.tilting_mutate(ctx, T2, Y)
            assert back == tuple(sorted(T)) and X2 == X
    assert moves > 0


def test_mutate_rejects_non_member():
    A = auslander_type_a(1, 3)
    ctx = tl.tilting_context(A, 1)
    T = tl.tilting_enumerate(A, 1, ctx)[0]
    other = next(i for i in range(len(ctx.collection)) if i not in T)
    with pytest.raises(hc.NotInCollection):
        tl.tilting_mutate(ctx, T, other)


def test_ext_quiver_of_preprojective_candidate():
    A = preprojective_a3()
    q = tl.ext_d_quiver(A, tl.canonical_ct_candidate(A, 2), 2)
    assert q.vertices == [(0, 0, 0)]
