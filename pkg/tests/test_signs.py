import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rank4om.errors import GroundSetMismatch, NonUniformError, OMError
from rank4om.signs import (
    Chirotope,
    LexExtension,
    OrientedMatroid,
    SignVector,
    check_cocircuit_axioms,
    chirotope_to_cocircuits,
    cocircuits_to_chirotope,
    compose,
    covector_span,
    is_acyclic,
    is_acyclic_exhaustive,
    lex_extension,
    perm_sign,
    rank_by_chain,
    separation_set,
    validate_chirotope,
)

E3 = (1, 2, 3)
signs = st.sampled_from((-1, 0, 1))


def sv(*s):
    return SignVector(tuple(range(1, len(s) + 1)), tuple(s))


def test_compose_definition_case():
    assert compose(sv(1, 0, -1), sv(-1, 1, 1)) == sv(1, 1, -1)


def test_compose_zero_is_identity():
    X = sv(1, 0, -1)
    Z = SignVector.zero(E3)
    assert compose(X, Z) == X and compose(Z, X) == X


def test_compose_order_matters():
    assert compose(sv(0, 1), sv(0, -1)) == sv(0, 1)
    assert compose(sv(0, -1), sv(0, 1)) == sv(0, -1)


def test_compose_ground_set_mismatch():
    with pytest.raises(GroundSetMismatch):
        compose(sv(1, 0), sv(1, 0, 1))


def test_separation_set():
    assert separation_set(sv(1, -1, 0, 1), sv(-1, -1, 1, -1)) == {1, 4}
    assert separation_set(sv(0, 0), sv(1, -1)) == frozenset()


@given(st.lists(signs, min_size=1, max_size=7), st.data())
def test_compose_associative_and_idempotent(a, data):
    b = data.draw(st.lists(signs, min_size=len(a), max_size=len(a)))
    c = data.draw(st.lists(signs, min_size=len(a), max_size=len(a)))
    X, Y, Z = sv(*a), sv(*b), sv(*c)
    assert compose(compose(X, Y), Z) == compose(X, compose(Y, Z))
    assert compose(X, X) == X
    assert separation_set(X, Y) == separation_set(Y, X)


def test_perm_sign():
    assert perm_sign((1, 2, 3, 4)) == 1
    assert perm_sign((1, 2, 4, 3)) == -1
    assert perm_sign((2, 1, 4, 3)) == 1
    assert perm_sign((1, 1, 2, 3)) == 0


def test_chirotope_alternating_lookup(bipyramid):
    assert bipyramid(1, 2, 3, 4) == 1
    assert bipyramid(1, 2, 4, 3) == -1
    assert bipyramid(2, 1, 4, 3) == 1
    assert bipyramid(1, 1, 2, 3) == 0


def test_chirotope_rejects_bad_tables():
    with pytest.raises(OMError):
        Chirotope(range(1, 6), 4, [1, 1, 1, 1])
    with pytest.raises(OMError):
        Chirotope(range(1, 5), 4, [2])


def test_chirotope_to_cocircuits_uniform_shape(cyclic):
    C = chirotope_to_cocircuits(cyclic[6])
    assert len(C) == 2 * 20
    assert all(len(X.zeros) == 3 for X in C)
    assert {X.zeros for X in C} == {frozenset(t) for t in itertools.combinations(range(1, 7), 3)}


def test_nonuniform_cocircuits_rejected():
    chi = Chirotope(range(1, 6), 4, [1, 0, 1, 1, 1])
    with pytest.raises(NonUniformError):
        chirotope_to_cocircuits(chi)


def test_cocircuit_round_trip(cyclic, bipyramid, random_convex):
    for chi in (cyclic[6], cyclic[7], bipyramid, random_convex(8, 2)):
        back = cocircuits_to_chirotope(chirotope_to_cocircuits(chi), chi.bases[0])
        assert back == chi.normalized()


def test_negated_chirotope_has_same_cocircuits(cyclic):
    chi = cyclic[7]
    assert chirotope_to_cocircuits(chi.negated()) == chirotope_to_cocircuits(chi)


def test_validate_realizable(bipyramid, cyclic, random_convex):
    for chi in (bipyramid, cyclic[6], cyclic[8], random_convex(7, 11)):
        rep = validate_chirotope(chi)
        assert rep.alternating and rep.uniform and rep.valid
        assert rep.axioms.checked == ("C0", "C1", "C2", "C3", "C3'")


def test_axioms_detect_missing_negative(cyclic):
    C = set(chirotope_to_cocircuits(cyclic[6]))
    X = min(C, key=str)
    C.discard(-X)
    rep = check_cocircuit_axioms(C)
    assert not rep.ok and "C1" in rep.failed()


def test_axioms_detect_zero_vector():
    rep = check_cocircuit_axioms({SignVector.zero(E3), sv(1, 0, 0), sv(-1, 0, 0)})
    assert "C0" in rep.failed()


def test_axioms_detect_support_containment():
    rep = check_cocircuit_axioms({sv(1, 0, 0), sv(-1, 0, 0), sv(1, 1, 0), sv(-1, -1, 0)})
    assert "C2" in rep.failed()


def test_flipped_nonmutation_fails_elimination_at_n6(cyclic):
    chi = cyclic[6]
    rep = validate_chirotope(chi.with_flipped((1, 2, 3, 5)))
    assert not rep.valid
    axiom, (X, Y, e) = rep.axioms.violations[0]
    assert axiom == "C3" and e in separation_set(X, Y)


def test_literal_modular_form_is_blind_at_n6(cyclic):
    # after contracting X0 & Y0 only one position is left to constrain Z, and
    # one of +-Z always matches it, so no table on six elements can fail
    chi = cyclic[6]
    for b in chi.bases:
        assert "C3'" not in validate_chirotope(chi.with_flipped(b)).axioms.failed()


def test_literal_modular_form_catches_a_flip_at_n7():
    # a reorientation of a random realizable configuration on seven points
    chi = Chirotope.from_string(7, 4, "+---++--+++++--+-++----+--+---+++--")
    assert validate_chirotope(chi).valid
    rep = validate_chirotope(chi.with_flipped((1, 2, 3, 4)))
    X, Y, e = next(w for a, w in rep.axioms.violations if a == "C3'")
    assert len(X.zeros - Y.zeros) == 1 and e in separation_set(X, Y)


def test_ground_set_mismatch_in_axiom_check():
    with pytest.raises(GroundSetMismatch):
        check_cocircuit_axioms({sv(1, 0), sv(1, 0, 0)})


def test_acyclic_and_covectors_small(bipyramid):
    M = OrientedMatroid.from_chirotope(bipyramid)
    assert is_acyclic(M) and is_acyclic_exhaustive(M)
    assert not is_acyclic(OrientedMatroid.from_chirotope(bipyramid.reoriented({1, 5})))
    assert rank_by_chain(M) == 4
    V = covector_span(M)
    assert SignVector.zero(M.elements) in V
    assert all(-X in V for X in V)


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10_000), st.sets(st.integers(1, 6)))
def test_acyclic_matches_exhaustive(seed, flip):
    from rank4om.realization import chirotope_from_points, random_realizable

    chi = chirotope_from_points(random_realizable(6, seed)).reoriented(flip)
    M = OrientedMatroid.from_chirotope(chi)
    assert is_acyclic(M) == is_acyclic_exhaustive(M)


def test_restrict_and_contract(cyclic):
    chi = cyclic[7]
    r = chi.restrict((1, 3, 5, 6, 7))
    assert r.elements == (1, 3, 5, 6, 7) and r(1, 3, 5, 6) == chi(1, 3, 5, 6)
    c = chi.contract((2,))
    assert c.rank == 3 and c(1, 3, 4) == chi(2, 1, 3, 4)


def test_relabel_preserves_validity(random_convex):
    chi = random_convex(6, 5)
    perm = {1: 3, 2: 1, 3: 2, 4: 6, 5: 4, 6: 5}
    rel = chi.relabeled(perm)
    assert validate_chirotope(rel).valid
    assert rel(3, 1, 2, 6) == chi(1, 2, 3, 4)


def test_lex_extension_first_nonzero_term(cyclic):
    chi = cyclic[6]
    ext = lex_extension(chi, LexExtension(((3, -1), (4, -1), (1, 1), (2, 1))))
    q = 7
    assert ext.n == 7
    assert ext(1, 2, 4, q) == -chi(1, 2, 4, 3)
    assert ext(1, 2, 3, q) == -chi(1, 2, 3, 4)
    assert ext(3, 4, 5, q) == chi(3, 4, 5, 1)
    assert ext(1, 2, 5, 6) == chi(1, 2, 5, 6)


def test_lex_extension_is_valid(random_convex):
    chi = random_convex(7, 3)
    for terms in (((1, 1), (2, -1), (3, 1), (4, -1)), ((5, -1), (6, -1), (1, -1), (2, -1))):
        assert validate_chirotope(lex_extension(chi, LexExtension(terms))).valid


def test_lex_extension_input_errors(cyclic):
    with pytest.raises(OMError):
        LexExtension(((1, 1), (1, -1)))
    with pytest.raises(OMError):
        lex_extension(cyclic[6], LexExtension(((1, 1), (2, 1), (3, 1))))
    with pytest.raises(OMError):
        lex_extension(cyclic[6], LexExtension(((1, 1), (2, 1), (3, 1), (9, 1))))
