"""Minors, faces and matroid-polytope recognition for uniform rank-4 matroids."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable

from .errors import OMError
from .signs import (
    Chirotope,
    OrientedMatroid,
    SignVector,
    _as_matroid,
    covector_span,
    is_acyclic,
)


@dataclass(frozen=True)
class ReorientationSet:
    F: frozenset

    def __init__(self, F: Iterable[int] = ()):
        object.__setattr__(self, "F", frozenset(F))

    def __iter__(self):
        return iter(sorted(self.F))

    def __len__(self):
        return len(self.F)


def restrict(M, A: Iterable[int]) -> OrientedMatroid:
    """M[A], computed on the chirotope (uniform rank preserved)."""
    M = _as_matroid(M)
    A = set(A)
    if len(A) < M.rank:
        raise OMError(f"restriction needs at least {M.rank} elements")
    if not A <= set(M.elements):
        raise OMError("restriction set is not a subset of the ground set")
    if M.chirotope is not None:
        return OrientedMatroid.from_chirotope(M.chirotope.restrict(A))
    keep = tuple(sorted(A))
    return OrientedMatroid(keep, {X.restrict(keep) for X in M.cocircuits if X.zeros <= A}, M.rank)


def contract(M, A: Iterable[int]) -> OrientedMatroid:
    """M/A: cocircuits X restricted to E \\ A for X0 containing A."""
    M = _as_matroid(M)
    A = frozenset(A)
    if len(A) > M.rank - 1:
        raise OMError(f"can contract at most {M.rank - 1} elements")
    if not A <= set(M.elements):
        raise OMError("contraction set is not a subset of the ground set")
    rest = tuple(e for e in M.elements if e not in A)
    cocircuits = {X.restrict(rest) for X in M.cocircuits if X.zeros >= A}
    chi = M.chirotope.contract(A) if M.chirotope is not None else None
    return OrientedMatroid(rest, cocircuits, M.rank - len(A), chi)


def reorient(M, F: Iterable[int]) -> OrientedMatroid:
    """-F M: every cocircuit entry on F negated."""
    M = _as_matroid(M)
    F = frozenset(F.F if isinstance(F, ReorientationSet) else F)
    chi = M.chirotope.reoriented(F) if M.chirotope is not None else None
    return OrientedMatroid(M.elements, {X.reorient(F) for X in M.cocircuits}, M.rank, chi)


def is_face(M, F: Iterable[int]) -> bool:
    """True iff M/F is acyclic.  Sets of size >= rank are never proper faces."""
    M = _as_matroid(M)
    F = frozenset(F)
    if len(F) >= M.rank:
        return False
    if not F:
        return is_acyclic(M)
    # conformal test on cocircuits vanishing on F, without building the minor
    rest_mask = 0
    for X in M.cocircuits:
        if X.zeros >= F and not X.minus:
            rest_mask |= X.masks()[0]
    want = 0
    for i, e in enumerate(M.elements):
        if e not in F:
            want |= 1 << i
    return rest_mask == want


def is_face_by_covector(M, F: Iterable[int], *, max_n: int | None = None) -> bool:
    """Face test by searching the covector span for X0 = F, X+ = E \\ F."""
    M = _as_matroid(M)
    F = frozenset(F)
    target = SignVector(M.elements, tuple(0 if e in F else 1 for e in M.elements))
    return target in covector_span(M, max_n=max_n)


def extreme_points(M) -> frozenset[int]:
    M = _as_matroid(M)
    return frozenset(e for e in M.elements if is_face(M, {e}))


def facets(M) -> frozenset[frozenset]:
    """Triples lambda whose cocircuit pair contains a nonnegative vector."""
    M = _as_matroid(M)
    out = set()
    for X in M.cocircuits:
        if not X.minus and len(X.zeros) == M.rank - 1:
            out.add(X.zeros)
    return frozenset(out)


def chirotope_extreme_points(chi: Chirotope) -> frozenset[int]:
    """extreme_points for a uniform chirotope, read off its sign table directly.

    e is extreme iff the nonnegative cocircuits vanishing at e cover E - e.
    """
    E = chi.elements
    bit = {e: 1 << i for i, e in enumerate(E)}
    cover = dict.fromkeys(E, 0)
    r = chi.rank
    for lam in itertools.combinations(E, r - 1):
        signs = 0
        mask = 0
        for f in E:
            if f in lam:
                continue
            signs |= 1 if chi(*lam, f) > 0 else 2
            mask |= bit[f]
            if signs == 3:
                break
        if signs != 3:
            for e in lam:
                cover[e] |= mask
    full = (1 << len(E)) - 1
    return frozenset(e for e in E if cover[e] | bit[e] == full)


def is_matroid_polytope(M) -> bool:
    if isinstance(M, Chirotope) and M.is_uniform():
        return chirotope_extreme_points(M) == frozenset(M.elements)
    M = _as_matroid(M)
    return extreme_points(M) == frozenset(M.elements)


def caratheodory_witness(M) -> frozenset | None:
    """A 5-subset Q with M[Q] not a matroid polytope, or None for polytopes."""
    M = _as_matroid(M)
    if M.n < M.rank + 1:
        raise OMError("need at least rank + 1 elements")
    if is_matroid_polytope(M):
        return None
    bad = set(M.elements) - extreme_points(M)
    for Q in itertools.combinations(M.elements, M.rank + 1):
        if bad.isdisjoint(Q):
            continue
        if not is_matroid_polytope(restrict(M, Q)):
            return frozenset(Q)
    return None


@dataclass
class FaceReport:
    faces: dict = field(default_factory=dict)
    extreme_points: frozenset = frozenset()
    facets: frozenset = frozenset()
    is_polytope: bool = False
    acyclic: bool = False

    def as_dict(self):
        return {
            "acyclic": self.acyclic,
            "is_matroid_polytope": self.is_polytope,
            "extreme_points": sorted(self.extreme_points),
            "facets": sorted(sorted(f) for f in self.facets),
            "faces": {str(k): sorted(sorted(f) for f in v) for k, v in self.faces.items()},
        }


def face_report(M) -> FaceReport:
    M = _as_matroid(M)
    faces = {}
    for k in range(M.rank):
        faces[k] = [frozenset(F) for F in itertools.combinations(M.elements, k) if is_face(M, F)]
    ext = extreme_points(M)
    return FaceReport(faces, ext, facets(M), ext == frozenset(M.elements), is_acyclic(M))


def gale_evenness_facets(n: int) -> frozenset[frozenset]:
    """Facet triples of the cyclic 3-polytope on n points, by Gale's evenness rule.

    A 3-subset S is a facet iff every pair of non-members i < j has an even
    number of members of S strictly between them.
    """
    out = set()
    for S in itertools.combinations(range(1, n + 1), 3):
        Sset = set(S)
        ok = True
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                if i in Sset or j in Sset:
                    continue
                between = sum(1 for k in range(i + 1, j) if k in Sset)
                if between % 2:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.add(frozenset(S))
    return frozenset(out)
