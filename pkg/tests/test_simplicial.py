import itertools

import pytest

from rank4om.errors import MonotonicityViolation, NotAPolytopeError, OMError, SizeGuardError
from rank4om.polytope import extreme_points, facets
from rank4om.signs import LexExtension, OrientedMatroid, is_acyclic
from rank4om.simplicial import (
    Quadruple,
    SideOracle,
    brute_force_simplicial,
    default_extension,
    entry_conditions,
    find_simplicial_reorientation,
    region_members,
    sphere_extension,
)

BIP_SIMPLICIAL = [[1], [1, 2, 3, 4], [1, 2, 5], [1, 3, 5], [1, 4, 5], [2, 3], [2, 3, 4, 5],
                  [2, 4], [3, 4], [5]]
CYC6_SIMPLICIAL = [[1, 2, 3, 4, 6], [1, 2, 3, 5], [1, 2, 4], [1, 3], [1, 3, 4, 5, 6], [1, 6], [2],
                   [2, 3, 4, 5], [2, 4, 5, 6], [3, 5, 6], [4, 6], [5]]


def simplicial_ok(chi, F, Q):
    R = OrientedMatroid.from_chirotope(chi.reoriented(F))
    return is_acyclic(R) and facets(R) == Quadruple(*Q).triples() and len(extreme_points(R)) == 4


def test_quadruple_basics():
    Q = Quadruple(1, 2, 3, 4)
    assert tuple(Q.replace(1, 7)) == (1, 7, 3, 4)
    assert len(Q.triples()) == 4
    with pytest.raises(OMError):
        Quadruple(1, 1, 2, 3)


def test_default_extension_terms(bipyramid):
    assert default_extension(bipyramid, 3, 4).terms == ((3, -1), (4, -1), (1, -1), (2, -1))
    assert default_extension(bipyramid, 1, 2).terms == ((1, -1), (2, -1), (3, -1), (4, -1))
    assert default_extension(bipyramid, 3, 4, 5, 1).terms == ((3, -1), (4, -1), (5, -1), (1, -1))


def test_entry_conditions_hold_for_default_extension(cyclic, random_convex):
    # q = [e3-, e4-, ...] sits across (e1 e2 e4) from e3 and across (e1 e2 e3) from e4
    for chi in (cyclic[6], random_convex(7, 1)):
        for Q in itertools.islice(itertools.permutations(chi.elements, 4), 0, None, 97):
            Q = Quadruple(*Q)
            assert entry_conditions(SideOracle(chi, default_extension(chi, Q.e3, Q.e4)), Q)


def test_bipyramid_region_and_descent(bipyramid):
    Q = Quadruple(1, 2, 3, 4)
    assert sorted(region_members(SideOracle(bipyramid, default_extension(bipyramid, 3, 4)), Q)) == [5]
    assert str(sphere_extension(bipyramid, Q)) == "[1+,2+,3-,4-]"
    res = find_simplicial_reorientation(bipyramid)
    assert sorted(res.F.F) == [1, 2, 5]
    assert tuple(res.quadruple) == (1, 5, 3, 4)
    assert res.iterations == 1 and res.attempts == 1
    assert res.trace[1] == {"quadruple": [1, 5, 3, 4], "region": [], "witness": 5, "replaced": 2}


def test_cyclic6_descent(cyclic):
    res = find_simplicial_reorientation(cyclic[6])
    assert sorted(res.F.F) == [1, 2, 4] and tuple(res.quadruple) == (4, 2, 3, 5)
    assert res.attempts == 3
    seeded = find_simplicial_reorientation(cyclic[6], initial=(2, 4, 5, 6))
    assert seeded.attempts == 1 and tuple(seeded.quadruple) == (2, 4, 5, 3)
    assert str(seeded.extension) == "[2+,6-,1-,3+]"


def test_brute_force_oracles(bipyramid, cyclic):
    assert sorted(map(sorted, brute_force_simplicial(bipyramid))) == BIP_SIMPLICIAL
    assert sorted(map(sorted, brute_force_simplicial(cyclic[6]))) == CYC6_SIMPLICIAL


def test_brute_force_relabel_invariant(random_convex):
    chi = random_convex(6, 9)
    perm = {1: 4, 2: 6, 3: 1, 4: 2, 5: 3, 6: 5}
    base = brute_force_simplicial(chi)
    moved = brute_force_simplicial(chi.relabeled(perm))
    assert moved == {frozenset(perm[e] for e in F) for F in base}


def test_brute_force_complement_closed(cyclic):
    found = brute_force_simplicial(cyclic[7])
    E = frozenset(range(1, 8))
    assert found and all(E - F in found for F in found)


def test_descent_result_is_simplicial(random_convex):
    for n, seed in ((6, 0), (7, 5), (8, 2), (9, 1)):
        chi = random_convex(n, seed)
        res = find_simplicial_reorientation(chi)
        assert simplicial_ok(chi, res.F.F, res.quadruple)
        assert res.iterations <= n - 4
        if n <= 8:
            assert res.F.F in brute_force_simplicial(chi)


def test_descent_with_prescribed_extension_only(cyclic):
    # every start with q = [e3-, e4-, a-, b-] that succeeds must be simplicial
    chi = cyclic[7]
    from rank4om.simplicial import _descend

    hits = 0
    for Q in itertools.islice(itertools.permutations(chi.elements, 4), 0, 200, 7):
        Q = Quadruple(*Q)
        try:
            F, Qs, trace = _descend(chi, Q, default_extension(chi, Q.e3, Q.e4))
        except MonotonicityViolation:
            continue
        hits += 1
        assert len(trace) - 1 <= chi.n - 4
        for step in trace:
            assert len(step["quadruple"]) == 4
    assert hits > 0


def test_entry_condition_violation_raises(bipyramid):
    from rank4om.simplicial import _descend

    wrong = LexExtension(((3, 1), (4, 1), (1, 1), (2, 1)))
    with pytest.raises(MonotonicityViolation):
        _descend(bipyramid, Quadruple(1, 2, 3, 4), wrong)


def test_input_guards(interior, random_convex):
    with pytest.raises(NotAPolytopeError):
        find_simplicial_reorientation(interior)
    with pytest.raises(SizeGuardError):
        brute_force_simplicial(random_convex(10, 0))
