import pytest

from rank4om.errors import OMError
from rank4om.polytope import (
    ReorientationSet,
    caratheodory_witness,
    chirotope_extreme_points,
    contract,
    extreme_points,
    face_report,
    facets,
    gale_evenness_facets,
    is_face,
    is_face_by_covector,
    is_matroid_polytope,
    reorient,
    restrict,
)
from rank4om.realization import chirotope_from_points, random_realizable
from rank4om.signs import OrientedMatroid, is_acyclic


def om(chi):
    return OrientedMatroid.from_chirotope(chi)


def tri(*ts):
    return frozenset(frozenset(int(c) for c in t) for t in ts)


def test_bipyramid_faces(bipyramid):
    rep = face_report(om(bipyramid))
    assert rep.is_polytope and rep.acyclic
    assert rep.facets == tri("123", "124", "134", "235", "245", "345")
    assert sorted(map(sorted, rep.faces[2])) == [[1, 2], [1, 3], [1, 4], [2, 3], [2, 4],
                                                 [2, 5], [3, 4], [3, 5], [4, 5]]
    assert is_face(om(bipyramid), {1, 2, 4}) and not is_face(om(bipyramid), {2, 3, 4})
    assert not is_face(om(bipyramid), {1, 5})


def test_face_by_covector_agrees(bipyramid, cyclic):
    import itertools

    for chi in (bipyramid, cyclic[6]):
        M = om(chi)
        for k in (1, 2, 3):
            for F in itertools.combinations(M.elements, k):
                assert is_face(M, F) == is_face_by_covector(M, F)


@pytest.mark.parametrize("n", [5, 6, 7, 8, 9])
def test_cyclic_facets_match_gale_evenness(cyclic, n):
    assert facets(om(cyclic[n])) == gale_evenness_facets(n)


def test_gale_evenness_small_values():
    assert gale_evenness_facets(6) == tri("123", "126", "134", "145", "156", "236", "346", "456")
    assert len(gale_evenness_facets(9)) == 2 * (9 - 2)


def test_interior_point_instance(interior):
    assert interior.sign_string() == "++-+-"
    assert not is_matroid_polytope(interior)
    assert extreme_points(om(interior)) == {1, 2, 3, 4}
    assert caratheodory_witness(om(interior)) == {1, 2, 3, 4, 5}


def test_caratheodory_witness_random_interior():
    chi = chirotope_from_points(random_realizable(7, 4, mode="interior"))
    assert chirotope_extreme_points(chi) == {1, 2, 3, 4, 5, 6}
    W = caratheodory_witness(om(chi))
    assert W == {1, 2, 3, 4, 7}
    assert not is_matroid_polytope(restrict(om(chi), W))


def test_caratheodory_none_for_polytope(cyclic):
    assert caratheodory_witness(om(cyclic[7])) is None


def test_fast_extreme_points_agree(random_convex):
    for seed in range(12):
        for mode in ("convex", "interior"):
            chi = chirotope_from_points(random_realizable(6 + seed % 3, seed, mode=mode))
            for F in ((), (1,), (2, 5)):
                c = chi.reoriented(F)
                assert chirotope_extreme_points(c) == extreme_points(om(c))


def test_reorientation_of_bipyramid(bipyramid):
    R = reorient(om(bipyramid), ReorientationSet({5}))
    assert is_acyclic(R)
    assert extreme_points(R) == {2, 3, 4, 5}
    assert not is_acyclic(reorient(om(bipyramid), {1, 5}))


def test_minors(cyclic):
    M = om(cyclic[7])
    assert restrict(M, (1, 2, 3, 4, 5)).n == 5
    C = contract(M, (7,))
    assert C.rank == 3 and 7 not in C.elements
    with pytest.raises(OMError):
        restrict(M, (1, 2, 3))
    with pytest.raises(OMError):
        contract(M, (1, 2, 3, 4))
    with pytest.raises(OMError):
        restrict(M, (1, 2, 3, 4, 99))
