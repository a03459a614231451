"""Reorientations with exactly four facets (simplicial topes) of rank-4 matroid polytopes.

The descent works with a reference point q added as a lexicographic
extension.  For a triple lam and an element e off it,
s_lam(e) = chi'(lam, e) * chi'(lam, q); O_lam collects s = +1 (q's side)
and I_lam collects s = -1.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .errors import MonotonicityViolation, NotAPolytopeError, OMError, SizeGuardError
from .polytope import ReorientationSet, extreme_points, facets, is_matroid_polytope
from .signs import (
    LIMITS,
    Chirotope,
    LexExtension,
    OrientedMatroid,
    _as_matroid,
    is_acyclic,
    lex_extension,
)


@dataclass(frozen=True)
class Quadruple:
    e1: int
    e2: int
    e3: int
    e4: int

    def __post_init__(self):
        if len({self.e1, self.e2, self.e3, self.e4}) != 4:
            raise OMError("quadruple entries must be distinct")

    def __iter__(self):
        return iter((self.e1, self.e2, self.e3, self.e4))

    def replace(self, k: int, x: int) -> "Quadruple":
        vals = list(self)
        vals[k] = x
        return Quadruple(*vals)

    def triples(self) -> frozenset:
        return frozenset(frozenset(t) for t in itertools.combinations(tuple(self), 3))


class SideOracle:
    def __init__(self, chi: Chirotope, ext: LexExtension):
        self.chi = chi
        self.ext = ext
        self.q = max(chi.elements) + 1
        self.chi_ext = lex_extension(chi, ext, label=self.q)
        self._cache = {}

    @property
    def elements(self):
        return self.chi.elements

    def side(self, lam, e) -> int:
        key = (tuple(lam), e)
        v = self._cache.get(key)
        if v is None:
            c = self.chi_ext
            v = c(*lam, e) * c(*lam, self.q)
            self._cache[key] = v
        return v

    def O(self, lam, e) -> bool:
        return self.side(lam, e) == 1

    def I(self, lam, e) -> bool:
        return self.side(lam, e) == -1


def _clauses(oracle: SideOracle, Q: Quadruple, e: int):
    """Matching replacement indices (0..3) for element e, in clause order."""
    e1, e2, e3, e4 = Q
    s = oracle.side
    out = []
    if s((e1, e3, e4), e) == -1 and s((e2, e3, e4), e) == 1:
        out.append(0)
    if s((e1, e3, e4), e) == 1 and s((e2, e3, e4), e) == -1:
        out.append(1)
    if s((e1, e2, e3), e) == 1 and s((e1, e2, e4), e) == -1:
        out.append(2)
    if s((e1, e2, e3), e) == -1 and s((e1, e2, e4), e) == 1:
        out.append(3)
    return out


def region_members(oracle: SideOracle, Q: Quadruple) -> frozenset:
    """Elements outside Q lying in one of the four sign-pair regions of Q."""
    Qs = set(Q)
    return frozenset(e for e in oracle.elements if e not in Qs and _clauses(oracle, Q, e))


def entry_conditions(oracle: SideOracle, Q: Quadruple) -> bool:
    e1, e2, e3, e4 = Q
    return oracle.I((e1, e2, e4), e3) and oracle.I((e1, e2, e3), e4)


def default_extension(chi: Chirotope, e3: int, e4: int, a: int | None = None, b: int | None = None) -> LexExtension:
    """q = [e3-, e4-, a-, b-]; a, b default to the two smallest elements outside {e3, e4}."""
    rest = [e for e in chi.elements if e not in (e3, e4)]
    if a is None or b is None:
        a, b = rest[0], rest[1]
    return LexExtension(((e3, -1), (e4, -1), (a, -1), (b, -1)))


def _lex_sign(chi: Chirotope, lam, terms) -> int:
    for a, eps in terms:
        if a not in lam:
            v = chi(*lam, a)
            if v:
                return eps * v
    return 0


def sphere_extension(chi: Chirotope, Q: Quadruple) -> LexExtension | None:
    """First lex extension [a+, b, c, d] meeting the entry conditions of Q whose
    extended chirotope is still a matroid polytope (q in convex position).

    Candidates run over a in (e1, e2, rest), then ordered triples and signs.
    """
    e1, e2, e3, e4 = Q
    want124 = -chi(e1, e2, e4, e3)
    want123 = -chi(e1, e2, e3, e4)
    firsts = [e1, e2] + [e for e in chi.elements if e not in (e1, e2)]
    for a in firsts:
        others = [e for e in chi.elements if e != a]
        for rest in itertools.permutations(others, 3):
            for signs in itertools.product((1, -1), repeat=3):
                terms = ((a, 1),) + tuple(zip(rest, signs))
                if _lex_sign(chi, (e1, e2, e4), terms) != want124:
                    continue
                if _lex_sign(chi, (e1, e2, e3), terms) != want123:
                    continue
                ext = LexExtension(terms)
                if is_matroid_polytope(lex_extension(chi, ext)):
                    return ext
    return None


@dataclass
class SimplicialResult:
    F: ReorientationSet
    quadruple: Quadruple
    trace: list = field(default_factory=list)
    extension: LexExtension | None = None
    attempts: int = 1

    @property
    def iterations(self) -> int:
        return len(self.trace) - 1

    def as_dict(self):
        return {
            "F": sorted(self.F.F),
            "quadruple": list(self.quadruple),
            "iterations": self.iterations,
            "extension": str(self.extension),
            "attempts": self.attempts,
            "trace": self.trace,
        }


def _descend(chi: Chirotope, Q: Quadruple, ext: LexExtension):
    oracle = SideOracle(chi, ext)
    if not entry_conditions(oracle, Q):
        raise MonotonicityViolation(f"entry conditions fail for {tuple(Q)} with {ext}")
    W = region_members(oracle, Q)
    trace = [{"quadruple": list(Q), "region": sorted(W)}]
    while W:
        # single-clause witnesses first, then by element and clause order
        cands = sorted((len(c) > 1, e, k) for e in W for c in [_clauses(oracle, Q, e)] for k in c)
        step = None
        for _, x, k in cands:
            Q2 = Q.replace(k, x)
            W2 = region_members(oracle, Q2)
            if len(W2) < len(W) and entry_conditions(oracle, Q2):
                step = (x, k, Q2, W2)
                break
        if step is None:
            raise MonotonicityViolation(f"no replacement shrinks the region of {tuple(Q)} (witnesses {sorted(W)})")
        x, slot, Q, W = step
        trace.append({"quadruple": list(Q), "region": sorted(W), "witness": x, "replaced": slot + 1})
    e1, e2, e3, e4 = Q
    F = {e for e in chi.elements if e not in Q
         and oracle.O((e1, e2, e3), e) and oracle.O((e1, e2, e4), e)}
    F |= {e1, e2}
    return ReorientationSet(F), Q, trace


def _check_simplicial(chi: Chirotope, F: ReorientationSet, Q: Quadruple) -> bool:
    M = OrientedMatroid.from_chirotope(chi.reoriented(F.F))
    return (is_acyclic(M) and facets(M) == Q.triples()
            and len(extreme_points(M)) == 4)


def _initial_quadruples(chi: Chirotope):
    return (Quadruple(*p) for p in itertools.permutations(chi.elements, 4))


def find_simplicial_reorientation(M, *, initial: Quadruple | tuple | None = None,
                                  max_attempts: int | None = None,
                                  check_polytope: bool = True) -> SimplicialResult:
    """Descend from a quadruple to one whose region is empty, then read off F.

    Each start first uses a reference point in convex position with M
    (``sphere_extension``), then q = [e3-, e4-, a-, b-].  Failed descents
    (monotonicity or final-check failures) are retried from the next initial
    quadruple, then with alternative extension points a, b.
    """
    M = _as_matroid(M)
    chi = M.chirotope
    if chi is None or chi.rank != 4 or not chi.is_uniform():
        raise OMError("a uniform rank-4 chirotope is required")
    if check_polytope and not is_matroid_polytope(M):
        raise NotAPolytopeError("input is not a matroid polytope")
    starts = list(_initial_quadruples(chi))
    if initial is not None:
        first = initial if isinstance(initial, Quadruple) else Quadruple(*initial)
        starts.remove(first)
        starts.insert(0, first)
    attempts = 0
    errors = []

    def first_pass(Q):
        ext = sphere_extension(chi, Q)
        if ext is not None:
            yield ext
        yield default_extension(chi, Q.e3, Q.e4)

    def second_pass(Q):
        rest = [e for e in chi.elements if e not in (Q.e3, Q.e4)]
        for a, b in itertools.permutations(rest, 2):
            if (a, b) != (rest[0], rest[1]):
                yield default_extension(chi, Q.e3, Q.e4, a, b)

    for pass_no in (0, 1):
        for Q0 in starts:
            exts = first_pass(Q0) if pass_no == 0 else second_pass(Q0)
            for ext in exts:
                attempts += 1
                if max_attempts is not None and attempts > max_attempts:
                    raise MonotonicityViolation(f"no simplicial reorientation after {attempts - 1} attempts: "
                                                + "; ".join(errors[:3]))
                try:
                    F, Q, trace = _descend(chi, Q0, ext)
                except MonotonicityViolation as exc:
                    errors.append(str(exc))
                    continue
                if _check_simplicial(chi, F, Q):
                    return SimplicialResult(F, Q, trace, ext, attempts)
                errors.append(f"final check failed for {tuple(Q)}")
    raise MonotonicityViolation("no simplicial reorientation found: " + "; ".join(errors[:3]))


def brute_force_simplicial(M, *, max_n: int | None = None) -> frozenset:
    """Every F (closed under complement) with -F M acyclic and exactly four facets."""
    M = _as_matroid(M)
    chi = M.chirotope
    limit = LIMITS["max_n"] if max_n is None else max_n
    if M.n > limit:
        raise SizeGuardError(f"n = {M.n} exceeds the brute-force limit {limit}")
    E = M.elements
    found = set()
    for k in range(len(E)):
        for F in itertools.combinations(E[:-1], k):
            R = OrientedMatroid.from_chirotope(chi.reoriented(F))
            if is_acyclic(R) and len(facets(R)) == 4:
                found.add(frozenset(F))
                found.add(frozenset(E) - frozenset(F))
    return frozenset(found)
