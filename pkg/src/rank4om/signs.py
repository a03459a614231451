"""Sign vectors, chirotopes, cocircuits and the oriented matroid axioms.

Ground sets are tuples of positive integers in increasing order; for files
and generators they are ``1..n``.  Sign vectors are stored aligned to their
ground set so they can be hashed and compared cheaply.
"""
from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from math import comb
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    GroundSetMismatch,
    NonUniformError,
    OMError,
    PropagationError,
    SizeGuardError,
)

# Exponential operations (covector spans, 2^n scans) refuse larger inputs
# unless the caller overrides the guard.
LIMITS = {"max_n": 9}


def _guard(n, max_n):
    limit = LIMITS["max_n"] if max_n is None else max_n
    if n > limit:
        raise SizeGuardError(f"ground set of size {n} exceeds guard {limit}")


def perm_sign(seq: Sequence[int]) -> int:
    """Sign of the permutation sorting ``seq``; 0 on a repeated entry."""
    seq = list(seq)
    if len(set(seq)) != len(seq):
        return 0
    sign = 1
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                sign = -sign
    return sign


@dataclass(frozen=True)
class GroundSet:
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise OMError("ground set needs at least one element")

    @property
    def elements(self) -> tuple[int, ...]:
        return tuple(range(1, self.n + 1))

    def upto(self, a: int) -> frozenset[int]:
        """All elements f with f <= a."""
        return frozenset(range(1, min(a, self.n) + 1))


@dataclass(frozen=True)
class SignVector:
    elements: tuple[int, ...]
    signs: tuple[int, ...]
    _index: dict = field(default=None, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if len(self.elements) != len(self.signs):
            raise OMError("sign vector length does not match its ground set")
        if any(s not in (-1, 0, 1) for s in self.signs):
            raise OMError("sign entries must be -1, 0 or +1")
        object.__setattr__(self, "_index", {e: i for i, e in enumerate(self.elements)})

    @classmethod
    def from_mapping(cls, elements: Sequence[int], mapping: dict) -> "SignVector":
        elements = tuple(elements)
        return cls(elements, tuple(int(mapping.get(e, 0)) for e in elements))

    @classmethod
    def zero(cls, elements: Sequence[int]) -> "SignVector":
        elements = tuple(elements)
        return cls(elements, (0,) * len(elements))

    def __getitem__(self, e: int) -> int:
        return self.signs[self._index[e]]

    def support_of(self, sigma: int) -> frozenset[int]:
        return frozenset(e for e, s in zip(self.elements, self.signs) if s == sigma)

    @property
    def plus(self) -> frozenset[int]:
        return self.support_of(1)

    @property
    def minus(self) -> frozenset[int]:
        return self.support_of(-1)

    @property
    def zeros(self) -> frozenset[int]:
        return self.support_of(0)

    def is_zero(self) -> bool:
        return not any(self.signs)

    def __neg__(self) -> "SignVector":
        return SignVector(self.elements, tuple(-s for s in self.signs))

    def compose(self, other: "SignVector") -> "SignVector":
        return compose(self, other)

    def restrict(self, subset: Iterable[int]) -> "SignVector":
        keep = tuple(e for e in self.elements if e in set(subset))
        return SignVector(keep, tuple(self[e] for e in keep))

    def reorient(self, flip: Iterable[int]) -> "SignVector":
        flip = set(flip)
        return SignVector(self.elements, tuple(-s if e in flip else s for e, s in zip(self.elements, self.signs)))

    def canonical(self) -> "SignVector":
        """The representative of {X, -X} whose first nonzero entry is +1."""
        for s in self.signs:
            if s:
                return self if s > 0 else -self
        return self

    def masks(self) -> tuple[int, int]:
        pos = neg = 0
        for i, s in enumerate(self.signs):
            if s > 0:
                pos |= 1 << i
            elif s < 0:
                neg |= 1 << i
        return pos, neg

    def __str__(self):
        return "".join("+" if s > 0 else "-" if s < 0 else "0" for s in self.signs)


def _check_same(X: SignVector, Y: SignVector):
    if X.elements != Y.elements:
        raise GroundSetMismatch(f"ground sets differ: {X.elements} vs {Y.elements}")


def compose(X: SignVector, Y: SignVector) -> SignVector:
    """(X o Y)_e = X_e if X_e != 0 else Y_e."""
    _check_same(X, Y)
    return SignVector(X.elements, tuple(x if x else y for x, y in zip(X.signs, Y.signs)))


def separation_set(X: SignVector, Y: SignVector) -> frozenset[int]:
    """Elements where X and Y carry opposite nonzero signs."""
    _check_same(X, Y)
    return frozenset(e for e, x, y in zip(X.elements, X.signs, Y.signs) if x and x == -y)


def _from_masks(elements, pos, neg) -> SignVector:
    return SignVector(elements, tuple(1 if pos >> i & 1 else -1 if neg >> i & 1 else 0 for i in range(len(elements))))


# --------------------------------------------------------------------------
# chirotopes


class Chirotope:
    """Alternating sign map on ordered ``rank``-tuples of a ground set.

    Values are stored on sorted tuples in lexicographic order; lookups on
    arbitrary tuples apply the sorting permutation's sign.
    """

    def __init__(self, elements: Sequence[int], rank: int, values):
        self.elements = tuple(sorted(elements))
        self.rank = int(rank)
        self.bases = tuple(itertools.combinations(self.elements, self.rank))
        if isinstance(values, dict):
            if set(values) != set(self.bases):
                raise OMError("value table keys must be exactly the sorted rank-tuples")
            vals = tuple(int(values[b]) for b in self.bases)
        else:
            vals = tuple(int(v) for v in values)
        if len(vals) != len(self.bases):
            raise OMError(f"expected {len(self.bases)} values, got {len(vals)}")
        if any(v not in (-1, 0, 1) for v in vals):
            raise OMError("chirotope values must be -1, 0 or +1")
        self.values = vals
        self._table = dict(zip(self.bases, vals))

    @classmethod
    def from_string(cls, n: int, rank: int, signs: str) -> "Chirotope":
        lookup = {"+": 1, "-": -1, "0": 0}
        return cls(range(1, n + 1), rank, [lookup[c] for c in signs])

    @property
    def n(self) -> int:
        return len(self.elements)

    def __call__(self, *idx) -> int:
        if len(idx) == 1 and isinstance(idx[0], (tuple, list)):
            idx = tuple(idx[0])
        if len(idx) != self.rank:
            raise OMError(f"expected {self.rank} indices")
        s = perm_sign(idx)
        if s == 0:
            return 0
        return s * self._table[tuple(sorted(idx))]

    def sign_string(self) -> str:
        return "".join("+" if v > 0 else "-" if v < 0 else "0" for v in self.values)

    def is_uniform(self) -> bool:
        return all(self.values)

    def negated(self) -> "Chirotope":
        return Chirotope(self.elements, self.rank, [-v for v in self.values])

    def with_flipped(self, basis) -> "Chirotope":
        basis = tuple(sorted(basis))
        return Chirotope(self.elements, self.rank, [-v if b == basis else v for b, v in zip(self.bases, self.values)])

    def normalized(self) -> "Chirotope":
        """Global sign fixed so the first nonzero basis value is +1."""
        for v in self.values:
            if v:
                return self if v > 0 else self.negated()
        return self

    def reoriented(self, flip: Iterable[int]) -> "Chirotope":
        flip = set(flip)
        return Chirotope(
            self.elements, self.rank,
            [v * (-1) ** len(flip.intersection(b)) for b, v in zip(self.bases, self.values)],
        )

    def restrict(self, subset: Iterable[int]) -> "Chirotope":
        subset = tuple(sorted(set(subset)))
        if not set(subset) <= set(self.elements):
            raise OMError("restriction set is not a subset of the ground set")
        return Chirotope(subset, self.rank, [self._table[b] for b in itertools.combinations(subset, self.rank)])

    def contract(self, subset: Iterable[int]) -> "Chirotope":
        """chi/A(mu) = chi(A, mu) for A listed in increasing order."""
        A = tuple(sorted(set(subset)))
        rest = tuple(e for e in self.elements if e not in A)
        r = self.rank - len(A)
        if r < 0:
            raise OMError("cannot contract more elements than the rank")
        return Chirotope(rest, r, [self(*A, *mu) for mu in itertools.combinations(rest, r)])

    def relabeled(self, perm: dict) -> "Chirotope":
        """Chirotope of the matroid with element e renamed perm[e]."""
        inv = {v: k for k, v in perm.items()}
        new_elems = tuple(sorted(perm[e] for e in self.elements))
        return Chirotope(new_elems, self.rank, [self(*(inv[x] for x in b)) for b in itertools.combinations(new_elems, self.rank)])

    def __eq__(self, other):
        return isinstance(other, Chirotope) and (self.elements, self.rank, self.values) == (
            other.elements, other.rank, other.values)

    def __hash__(self):
        return hash((self.elements, self.rank, self.values))

    def __repr__(self):
        return f"Chirotope(n={self.n}, r={self.rank}, {self.sign_string()!r})"


def chirotope_to_cocircuits(chi: Chirotope) -> frozenset[SignVector]:
    """Cocircuits +-X_lambda with X_lambda(e) = chi(lambda, e)."""
    if not chi.is_uniform():
        raise NonUniformError("cocircuit derivation requires a uniform chirotope")
    out = set()
    E = chi.elements
    for lam in itertools.combinations(E, chi.rank - 1):
        X = SignVector(E, tuple(chi(*lam, e) for e in E))
        out.add(X)
        out.add(-X)
    return frozenset(out)


def cocircuits_by_zero_set(C: Iterable[SignVector]) -> dict[frozenset, SignVector]:
    """Map each zero set to its canonical representative."""
    return {X.zeros: X.canonical() for X in C}


def cocircuits_to_chirotope(C: Iterable[SignVector], anchor: Sequence[int]) -> Chirotope:
    """Recover the chirotope with chi(anchor) = +1 by basis-exchange propagation."""
    C = list(C)
    if not C:
        raise OMError("empty cocircuit set")
    E = C[0].elements
    zero_map: dict[frozenset, SignVector] = {}
    for X in C:
        if X.elements != E:
            raise GroundSetMismatch("cocircuits live on different ground sets")
        Z = X.zeros
        prev = zero_map.get(Z)
        if prev is not None and prev != X and prev != -X:
            raise PropagationError(f"two non-opposite cocircuits share zero set {sorted(Z)}")
        zero_map[Z] = X
    sizes = {len(z) for z in zero_map}
    if len(sizes) != 1:
        raise NonUniformError("cocircuit zero sets have different sizes")
    r = sizes.pop() + 1
    anchor = tuple(sorted(anchor))
    if len(anchor) != r or not set(anchor) <= set(E):
        raise OMError(f"anchor must be a sorted {r}-subset of the ground set")
    for lam in itertools.combinations(E, r - 1):
        if frozenset(lam) not in zero_map:
            raise NonUniformError(f"no cocircuit vanishes exactly on {lam}")
    value = {anchor: 1}
    queue = deque([anchor])
    while queue:
        B = queue.popleft()
        vB = value[B]
        for f in B:
            lam = tuple(x for x in B if x != f)
            X = zero_map[frozenset(lam)]
            # chi(lam, f) for the ordered tuple (lam..., f)
            chi_lam_f = perm_sign(lam + (f,)) * vB
            for e in E:
                if e in B:
                    continue
                chi_lam_e = X[e] * X[f] * chi_lam_f
                B2 = tuple(sorted(lam + (e,)))
                v = perm_sign(lam + (e,)) * chi_lam_e
                old = value.get(B2)
                if old is None:
                    value[B2] = v
                    queue.append(B2)
                elif old != v:
                    raise PropagationError(f"inconsistent sign for basis {B2}")
    chi = Chirotope(E, r, value)
    if chirotope_to_cocircuits(chi) != frozenset(C) | frozenset(-X for X in C):
        raise PropagationError("propagated chirotope does not reproduce the cocircuits")
    if frozenset(C) != frozenset(-X for X in C):
        raise PropagationError("cocircuit set is not closed under negation")
    return chi


# --------------------------------------------------------------------------
# axioms


@dataclass
class AxiomReport:
    ok: bool
    violations: list = field(default_factory=list)
    uniform: bool = False
    corank: int | None = None
    checked: tuple = ()

    def failed(self) -> set[str]:
        return {v[0] for v in self.violations}

    def as_dict(self):
        return {
            "ok": self.ok,
            "uniform": self.uniform,
            "corank": self.corank,
            "checked": list(self.checked),
            "violations": [
                {"axiom": a, "witness": [str(x) if isinstance(x, SignVector) else sorted(x) if isinstance(x, frozenset) else x for x in w]}
                for a, w in self.violations
            ],
        }


def check_cocircuit_axioms(C: Iterable[SignVector], *, max_witnesses: int = 20) -> AxiomReport:
    """Check (C0)-(C3), plus the modular form (C3') when all zero sets agree in size.

    (C3) is checked in its elimination form: for X != -Y and e in S(X, Y)
    some Z has Z_e = 0, Z+ within X+ u Y+ and Z- within X- u Y-.  The
    modular form follows the literal statement: for |X0 \\ Y0| = 1 some Z
    has Z0 = (X0 & Y0) | {e}, Z+ containing X+ & Y+ and Z- containing
    X- & Y-.
    """
    C = list(set(C))
    violations: list = []
    checked = ["C0", "C1", "C2", "C3"]

    def add(axiom, *witness):
        if sum(1 for v in violations if v[0] == axiom) < max_witnesses:
            violations.append((axiom, witness))

    if not C:
        return AxiomReport(True, [], True, None, tuple(checked))
    E = C[0].elements
    for X in C:
        if X.elements != E:
            raise GroundSetMismatch("cocircuits live on different ground sets")
    Cset = set(C)
    for X in C:
        if X.is_zero():
            add("C0", X)
    for X in C:
        if -X not in Cset:
            add("C1", X)
    masks = [X.masks() for X in C]
    nz = [p | q for p, q in masks]
    full = (1 << len(E)) - 1
    zero = [full & ~s for s in nz]
    for i in range(len(C)):
        for j in range(len(C)):
            if i == j:
                continue
            if zero[i] & ~zero[j] == 0 and masks[i] != masks[j] and masks[i] != (masks[j][1], masks[j][0]):
                if not C[i].is_zero():
                    add("C2", C[i], C[j])

    # elimination (C3), vectorised per eliminated element
    P = np.array([m[0] for m in masks], dtype=np.int64)
    N = np.array([m[1] for m in masks], dtype=np.int64)
    ii, jj = np.triu_indices(len(C), k=1)
    opposite = (P[ii] == N[jj]) & (N[ii] == P[jj])
    ii, jj = ii[~opposite], jj[~opposite]
    S = (P[ii] & N[jj]) | (N[ii] & P[jj])
    AP = P[ii] | P[jj]
    AN = N[ii] | N[jj]
    for k in range(len(E)):
        bit = np.int64(1 << k)
        sel = (S & bit) != 0
        if not sel.any():
            continue
        cand = ((P | N) & bit) == 0
        ZP, ZN = P[cand], N[cand]
        ap, an = AP[sel], AN[sel]
        if len(ZP) == 0:
            ok = np.zeros(len(ap), dtype=bool)
        else:
            ok = (((ZP[None, :] & ~ap[:, None]) == 0) & ((ZN[None, :] & ~an[:, None]) == 0)).any(axis=1)
        for idx in np.nonzero(~ok)[0][:max_witnesses]:
            a, b = ii[sel][idx], jj[sel][idx]
            add("C3", C[a], C[b], E[k])

    sizes = {len(X.zeros) for X in C}
    uniform = len(sizes) == 1
    corank = None
    if uniform:
        corank = sizes.pop()
        checked.append("C3'")
        by_zero: dict[frozenset, list] = {}
        for X in C:
            by_zero.setdefault(X.zeros, []).append(X)
        for X in C:
            X0 = X.zeros
            for Y in C:
                if len(X0 - Y.zeros) != 1:
                    continue
                common = X0 & Y.zeros
                for e in separation_set(X, Y):
                    need = common | {e}
                    pp = X.plus & Y.plus
                    mm = X.minus & Y.minus
                    if not any(Z.plus >= pp and Z.minus >= mm for Z in by_zero.get(need, ())):
                        add("C3'", X, Y, e)
    return AxiomReport(not violations, violations, uniform, corank, tuple(checked))


@dataclass
class ChirotopeReport:
    alternating: bool
    uniform: bool
    valid: bool
    axioms: AxiomReport | None

    def as_dict(self):
        return {
            "alternating": self.alternating,
            "uniform": self.uniform,
            "valid": self.valid,
            "axioms": None if self.axioms is None else self.axioms.as_dict(),
        }


def validate_chirotope(chi: Chirotope, *, expected_len: int | None = None) -> ChirotopeReport:
    if expected_len is not None and len(chi.values) != expected_len:
        raise OMError(f"value table has length {len(chi.values)}, expected {expected_len}")
    if len(chi.values) != comb(chi.n, chi.rank):
        raise OMError("value table length does not match C(n, r)")
    alternating = True
    for b in chi.bases:
        v = chi(*b)
        for perm in itertools.permutations(range(chi.rank)):
            tup = tuple(b[p] for p in perm)
            if chi(*tup) != perm_sign(perm) * v:
                alternating = False
                break
        if not alternating:
            break
    uniform = chi.is_uniform()
    if not uniform:
        return ChirotopeReport(alternating, False, False, None)
    report = check_cocircuit_axioms(chirotope_to_cocircuits(chi))
    return ChirotopeReport(alternating, True, alternating and report.ok, report)


# --------------------------------------------------------------------------
# oriented matroids


class OrientedMatroid:
    """An oriented matroid given by its cocircuits, with an optional chirotope cache."""

    def __init__(self, elements: Sequence[int], cocircuits: Iterable[SignVector], rank: int | None = None,
                 chirotope: Chirotope | None = None):
        self.elements = tuple(sorted(elements))
        self.cocircuits = frozenset(cocircuits)
        for X in self.cocircuits:
            if X.elements != self.elements:
                raise GroundSetMismatch("cocircuit ground set differs from the matroid's")
        if rank is None:
            if chirotope is not None:
                rank = chirotope.rank
            elif self.cocircuits:
                rank = min(len(X.zeros) for X in self.cocircuits) + 1  # exact when uniform
            else:
                rank = 0
        self.rank = rank
        self.chirotope = chirotope

    @classmethod
    def from_chirotope(cls, chi: Chirotope) -> "OrientedMatroid":
        return cls(chi.elements, chirotope_to_cocircuits(chi), chi.rank, chi)

    @property
    def n(self) -> int:
        return len(self.elements)

    @property
    def ground(self) -> GroundSet:
        return GroundSet(self.n)

    def cocircuit(self, zero_set: Iterable[int]) -> SignVector:
        """Canonical cocircuit with the given zero set."""
        Z = frozenset(zero_set)
        for X in self.cocircuits:
            if X.zeros == Z:
                return X.canonical()
        raise KeyError(sorted(Z))

    def __eq__(self, other):
        return isinstance(other, OrientedMatroid) and self.elements == other.elements and self.cocircuits == other.cocircuits

    def __hash__(self):
        return hash((self.elements, self.cocircuits))

    def __repr__(self):
        return f"OrientedMatroid(n={self.n}, rank={self.rank}, |C*|={len(self.cocircuits)})"


def _as_matroid(M) -> OrientedMatroid:
    return OrientedMatroid.from_chirotope(M) if isinstance(M, Chirotope) else M


def _span_masks(M: OrientedMatroid) -> set[tuple[int, int]]:
    cmasks = {X.masks() for X in M.cocircuits}
    span = set(cmasks)
    frontier = list(span)
    while frontier:
        new = []
        for p, q in frontier:
            s = p | q
            for cp, cq in cmasks:
                r = (p | (cp & ~s), q | (cq & ~s))
                if r not in span:
                    span.add(r)
                    new.append(r)
        frontier = new
    span.add((0, 0))
    return span


def covector_span(M, *, max_n: int | None = None) -> frozenset[SignVector]:
    """All compositions of cocircuits, plus the zero vector."""
    M = _as_matroid(M)
    _guard(M.n, max_n)
    return frozenset(_from_masks(M.elements, p, q) for p, q in _span_masks(M))


def rank_by_chain(M, *, max_n: int | None = None) -> int:
    """Length of a longest strictly increasing chain of covectors above 0."""
    M = _as_matroid(M)
    _guard(M.n, max_n)
    span = sorted(_span_masks(M), key=lambda m: bin(m[0] | m[1]).count("1"))
    height: dict = {}
    for p, q in span:
        best = 0
        for (yp, yq), h in height.items():
            if (yp, yq) != (p, q) and yp & ~p == 0 and yq & ~q == 0:
                best = max(best, h + 1 if (yp | yq) else 1)
        height[(p, q)] = best if (p | q) else 0
    return max(height.values())


def is_acyclic(M) -> bool:
    """True iff the all-positive vector is a covector.

    Any all-positive covector is a conformal composition of cocircuits, all of
    which are nonnegative, so composing every nonnegative cocircuit decides it.
    """
    M = _as_matroid(M)
    if M.n == 0:
        return True
    pos = 0
    for X in M.cocircuits:
        p, q = X.masks()
        if q == 0:
            pos |= p
    return pos == (1 << M.n) - 1


def is_acyclic_exhaustive(M, *, max_n: int | None = None) -> bool:
    M = _as_matroid(M)
    return ((1 << M.n) - 1, 0) in _span_masks(M) if M.n else True


@dataclass(frozen=True)
class LexExtension:
    """Signed priority list [a1^e1, a2^e2, ...] of existing elements."""

    terms: tuple

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple((int(a), int(s)) for a, s in self.terms))
        elems = [a for a, _ in self.terms]
        if len(set(elems)) != len(elems):
            raise OMError("lexicographic extension terms must use distinct elements")
        if any(s not in (-1, 1) for _, s in self.terms):
            raise OMError("lexicographic extension signs must be +-1")

    def __str__(self):
        return "[" + ",".join(f"{a}{'+' if s > 0 else '-'}" for a, s in self.terms) + "]"


def lex_extension(chi: Chirotope, q: LexExtension, label: int | None = None) -> Chirotope:
    """Extend a uniform rank-4 chirotope by a lexicographic extension point.

    chi'(lam, q) = eps_i * chi(lam, a_i) for the first term with a nonzero value.
    The new element gets ``label`` (default: one more than the largest element).
    """
    if len(q.terms) < chi.rank:
        raise OMError(f"need at least {chi.rank} distinct terms")
    if not all(a in chi.elements for a, _ in q.terms):
        raise OMError("extension terms must be existing elements")
    if label is None:
        label = max(chi.elements) + 1
    if label in chi.elements:
        raise OMError("extension label already in use")
    new_elems = tuple(sorted(chi.elements + (label,)))
    vals = {}
    for b in itertools.combinations(new_elems, chi.rank):
        if label not in b:
            vals[b] = chi(*b)
            continue
        lam = tuple(x for x in b if x != label)
        v = 0
        for a, eps in q.terms:
            s = chi(*lam, a)
            if s:
                v = eps * s
                break
        # chi'(b) for b sorted = sign(permutation from (lam, q) to b) * chi'(lam, q)
        vals[b] = perm_sign(lam + (label,)) * v
    return Chirotope(new_elems, chi.rank, vals)
