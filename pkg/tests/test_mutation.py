import pytest

from rank4om.errors import NotAMutationError, OMError, SizeGuardError
from rank4om.mutation import explore_flip_graph, flip, is_mutation, mutations
from rank4om.polytope import is_matroid_polytope
from rank4om.signs import validate_chirotope
from rank4om.simplicial import find_simplicial_reorientation

CYC6_MUTATIONS = [(1, 2, 3, 4), (1, 2, 3, 6), (1, 2, 5, 6), (1, 4, 5, 6), (2, 3, 4, 5), (3, 4, 5, 6)]


def test_bipyramid_all_bases_are_mutations(bipyramid):
    assert mutations(bipyramid) == list(bipyramid.bases)


def test_simplex_flip(simplex):
    assert flip(simplex, (4, 3, 2, 1)).sign_string() == "-"


def test_cyclic6_mutations(cyclic):
    assert mutations(cyclic[6]) == CYC6_MUTATIONS


def test_non_mutation_flip_raises(cyclic):
    assert not is_mutation(cyclic[6], (1, 2, 3, 5))
    with pytest.raises(NotAMutationError):
        flip(cyclic[6], (1, 2, 3, 5))
    with pytest.raises(OMError):
        flip(cyclic[6], (1, 2, 3))
    with pytest.raises(OMError):
        flip(cyclic[6], (1, 2, 3, 9))


def test_flip_is_an_involution(cyclic):
    chi = cyclic[6]
    for b in CYC6_MUTATIONS:
        assert flip(flip(chi, b), b) == chi


def test_flip_graph_cyclic6_depth2(cyclic):
    full = explore_flip_graph(cyclic[6], 2)
    kept = explore_flip_graph(cyclic[6], 2, preserve_polytope=True)
    assert (len(full.nodes), len(full.edges)) == (28, 36)
    assert (len(kept.nodes), len(kept.edges)) == (15, 18)
    assert set(kept.edges) <= set(full.edges)
    assert set(kept.mutation_counts.values()) == {6}
    assert all(is_matroid_polytope(c) for c in kept.chirotopes.values())
    assert all(validate_chirotope(c).valid for c in full.chirotopes.values())
    assert max(full.depth.values()) == 2


def test_flip_graph_depth0_and_guards(cyclic, interior):
    g = explore_flip_graph(cyclic[6], 0)
    assert g.nodes == ["+" * 15] and g.edges == [] and g.mutation_counts == {"+" * 15: 6}
    with pytest.raises(SizeGuardError):
        explore_flip_graph(cyclic[8], 1)
    with pytest.raises(OMError):
        explore_flip_graph(cyclic[6], -1)
    with pytest.raises(OMError):
        explore_flip_graph(interior, 1, preserve_polytope=True)


@pytest.mark.parametrize("n, seed", [(5, 0), (6, 1), (6, 4), (7, 2), (7, 6)])
def test_final_quadruple_is_a_mutation(random_convex, n, seed):
    chi = random_convex(n, seed)
    res = find_simplicial_reorientation(chi)
    assert is_mutation(chi.reoriented(res.F.F), tuple(res.quadruple))
