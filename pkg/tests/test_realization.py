from fractions import Fraction

import pytest

from rank4om.errors import OMError
from rank4om.realization import (
    PointConfig,
    chirotope_from_points,
    circle_picture,
    cyclic_points,
    int_det,
    orientation,
    random_realizable,
    side_predicates,
    simplex_points,
    sphere_point,
)
from rank4om.signs import validate_chirotope


def test_int_det():
    assert int_det([[2, 0], [0, 3]]) == 6
    assert int_det([[0, 1], [1, 0]]) == -1
    assert int_det([[1, 2], [2, 4]]) == 0
    assert int_det([[2, -1, 0], [-1, 2, -1], [0, -1, 2]]) == 4


def test_orientation_sign_convention():
    assert orientation((0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)) == -1
    assert orientation((0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 0)) == 0


def test_known_chirotopes(bipyramid, simplex, cyclic):
    assert chirotope_from_points(simplex_points()).sign_string() == "+"
    assert bipyramid.sign_string() == "++-++"
    assert bipyramid(1, 2, 3, 4) == 1 and bipyramid(1, 2, 4, 3) == -1
    assert bipyramid(1, 2, 4, 5) == -1 and bipyramid(2, 3, 4, 5) == 1
    for n in (5, 6, 7):
        assert set(cyclic[n].sign_string()) == {"+"}


def test_sphere_point_is_rational_and_on_sphere():
    p = sphere_point(Fraction(3, 4), Fraction(-1, 2))
    assert all(isinstance(c, Fraction) for c in p)
    assert sum(c * c for c in p) == 1


def test_random_realizable_is_seeded():
    a = random_realizable(6, 0)
    assert a == random_realizable(6, 0) and a != random_realizable(6, 1)
    assert chirotope_from_points(a).sign_string() == "+--++-++----+++"
    assert random_realizable(5, 0).points[0] == (Fraction(1088, 3261), Fraction(1376, 3261), Fraction(2749, 3261))


def test_random_realizable_valid(random_convex):
    for n, seed in ((5, 1), (7, 2), (9, 3)):
        assert validate_chirotope(random_convex(n, seed)).valid


def test_generator_input_errors():
    with pytest.raises(OMError):
        random_realizable(3, 0)
    with pytest.raises(OMError):
        random_realizable(6, 0, mode="bogus")
    with pytest.raises(OMError):
        PointConfig([(0, 0)])


def test_side_predicates_match_chirotope():
    P = random_realizable(6, 7)
    chi = chirotope_from_points(P, normalize=False)
    for (t, e), s in side_predicates(P).items():
        assert s == chi(*t, e)


@pytest.mark.parametrize("P", [random_realizable(8, 3), cyclic_points(7)], ids=["inscribed", "cyclic"])
def test_circle_picture_reproduces_signs(P):
    pic, chi = circle_picture(P)
    assert pic.mismatches == []
    for t in pic.circles:
        for e in range(1, P.n + 1):
            if e not in t:
                assert pic.drawn_side(t, e) == chi(*t, e)


def test_circle_picture_detects_inscribed_input(bipyramid):
    assert circle_picture(random_realizable(8, 3))[0].inscribed
    assert not circle_picture(cyclic_points(6))[0].inscribed


def test_circle_picture_reports_interior_mismatches():
    # an interior point cannot sit on the sphere, so the drawing disagrees somewhere
    pic, _ = circle_picture(random_realizable(6, 2, mode="interior"))
    assert pic.mismatches and all(e not in t for t, e in pic.mismatches)
