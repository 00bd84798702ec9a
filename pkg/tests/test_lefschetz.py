import pytest

from bbwlab.lefschetz import (
    K0_LABEL,
    LefschetzCollection,
    NoIntegralSolution,
    build_collection,
    gram_determinant,
    gram_matrix,
    index_bundle,
    k_decompose,
    restrict_hyperplane,
    space_for,
    tilde_difference,
    tilde_upsilon_set,
    upsilon_set,
    verify_exceptional,
)
from bbwlab.linalg import is_upper_unitriangular
from bbwlab.spaces import Space

CASES = [("gr", n) for n in range(3, 9)] + [("sgr", m) for m in (2, 3, 4)] + [("ogr", m) for m in (2, 3, 4)] + [("quadric", n) for n in (5, 7)]


@pytest.mark.parametrize("family,p", CASES)
def test_full_and_reduced_agree(family, p):
    sp = space_for(family, p)
    coll = build_collection(family, p)
    full = verify_exceptional(sp, coll, "full")
    red = verify_exceptional(sp, coll, "reduced")
    assert full.passed and red.passed
    assert len(coll) == sp.rank_k0
    assert is_upper_unitriangular(full.gram)
    assert gram_determinant(full.gram) == 1


@pytest.mark.parametrize("family,p", [("gr", n) for n in range(3, 9)] + [("sgr", m) for m in (2, 3, 4)] + [("ogr", m) for m in (2, 3, 4)])
def test_collection_matches_index_set(family, p):
    sp = space_for(family, p)
    coll = build_collection(family, p)
    want = sorted(str(index_bundle(sp, i)) for i in upsilon_set(family, p))
    assert sorted(coll.labels) == want


def test_small_collections_exactly():
    sp = Space.sgr(2)
    assert build_collection("sgr", 2).objects == [sp.O(), sp.U_dual(), sp.O(1), sp.O(2)]
    sp = Space.ogr(2)
    assert build_collection("ogr", 2).objects == [sp.O(), sp.spinor(), sp.O(1), sp.spinor(1)]
    sp = Space.gr(3)
    assert build_collection("gr", 3).objects == [sp.O(), sp.O(1), sp.O(2)]


def test_wrong_order_is_caught_with_witness():
    sp = Space.gr(4)
    rep = verify_exceptional(sp, [sp.O(1), sp.O()], "full")
    assert not rep.passed
    v = rep.first_violation
    assert (v.i, v.j, v.degree, v.dim) == (0, 1, 0, 6)
    assert rep.to_json()["verdict"] == "fail"


def test_non_exceptional_object_is_caught():
    sp = Space.gr(4)
    rep = verify_exceptional(sp, [sp.sym(1) + sp.O()], "full")
    assert not rep.passed


def test_parallel_matches_serial():
    sp = Space.gr(7)
    coll = build_collection("gr", 7)
    assert verify_exceptional(sp, coll, jobs=1).to_json() == verify_exceptional(sp, coll, jobs=3).to_json()


def test_report_json_shape():
    sp = Space.ogr(3)
    j = verify_exceptional(sp, build_collection("ogr", 3), "reduced").to_json()
    assert j["verdict"] == "pass" and j["lengths"] == {"collection": 12, "rank_k0": 12}
    assert j["gram_upper_unitriangular"] is True


def test_bad_partitions_and_params():
    sp = Space.gr(4)
    with pytest.raises(ValueError):
        LefschetzCollection(sp, (sp.O(),), (1, 2))
    with pytest.raises(ValueError):
        LefschetzCollection(sp, (sp.O(),), (2,))
    with pytest.raises(ValueError):
        build_collection("gr", 2)
    with pytest.raises(ValueError):
        build_collection("sgr", 1)
    with pytest.raises(ValueError):
        verify_exceptional(sp, [sp.O()], "reduced")


@pytest.mark.parametrize("m", [2, 3, 4])
def test_hyperplane_restriction_of_gr_gives_sgr(m):
    r = restrict_hyperplane(build_collection("gr", 2 * m))
    sgr = build_collection("sgr", m)
    assert r.partition == sgr.partition
    assert r.retarget(Space.sgr(m)).labels == sgr.labels


def test_restriction_partition_shift():
    coll = build_collection("gr", 7)
    r = restrict_hyperplane(coll)
    assert r.partition == coll.partition[1:]
    with pytest.raises(ValueError):
        restrict_hyperplane(LefschetzCollection(Space.gr(4), (Space.gr(4).O(),), (1,)))


def test_tilde_sets():
    for n in range(4, 10):
        assert set(upsilon_set("gr", n)) <= set(tilde_upsilon_set("gr", n))
    # the floor reading drops collection objects for odd n
    assert not set(upsilon_set("gr", 7)) <= set(tilde_upsilon_set("gr", 7, reading="floor"))
    assert tilde_difference("gr", 7, reading="floor") == []
    for m in (2, 3, 4):
        assert set(upsilon_set("sgr", m)) <= set(tilde_upsilon_set("sgr", m))
    with pytest.raises(ValueError):
        tilde_upsilon_set("gr", 5, reading="other")


def test_k_decompose_certificates():
    sp = Space.gr(5)
    coll = build_collection("gr", 5)
    dec = k_decompose(sp, coll, sp.sym(3, 1))
    assert dec.label == K0_LABEL
    assert dec.nonzero() == {"O": -1, "O(1)": 10, "U*(1)": -10, "U*(2)": 25, "O(3)": -50, "O(4)": 25, "U*(4)": -5}
    for i, obj in enumerate(coll.objects):
        one = k_decompose(sp, coll, obj)
        assert one.coefficients == tuple(1 if j == i else 0 for j in range(len(coll)))


@pytest.mark.parametrize("family,p", [("gr", n) for n in range(4, 9)] + [("sgr", m) for m in (2, 3, 4)] + [("ogr", m) for m in (2, 3, 4)])
def test_tilde_difference_is_integral(family, p):
    sp = space_for(family, p)
    coll = build_collection(family, p)
    g = gram_matrix(sp, coll.objects)
    for idx in tilde_difference(family, p):
        k_decompose(sp, coll, index_bundle(sp, idx), gram=g)


def test_k_decompose_rejects_bad_input():
    sp = Space.ogr(2)
    coll = build_collection("ogr", 2)
    with pytest.raises(ValueError):
        k_decompose(sp, coll.objects[:2], sp.spinor())
    sp3 = Space.gr(3)
    with pytest.raises(ValueError):
        k_decompose(sp3, [sp3.O(1), sp3.O(), sp3.O(2)], sp3.O())


def test_inconsistent_gram_is_reported():
    sp = Space.gr(3)
    coll = build_collection("gr", 3)
    identity = [[int(i == j) for j in range(3)] for i in range(3)]
    with pytest.raises(NoIntegralSolution):
        k_decompose(sp, coll, sp.O(3), gram=identity)
