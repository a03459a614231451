"""Mutations (basis flips that keep a valid chirotope) and flip-graph exploration."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .errors import NotAMutationError, OMError, SizeGuardError
from .polytope import is_matroid_polytope
from .signs import Chirotope, validate_chirotope


def _basis(chi: Chirotope, b) -> tuple:
    b = tuple(sorted(b))
    if len(b) != chi.rank or len(set(b)) != chi.rank or not set(b) <= set(chi.elements):
        raise OMError(f"{b} is not a basis index of the ground set")
    return b


def is_mutation(chi: Chirotope, b) -> bool:
    b = _basis(chi, b)
    return validate_chirotope(chi.with_flipped(b)).valid


def flip(chi: Chirotope, b) -> Chirotope:
    b = _basis(chi, b)
    out = chi.with_flipped(b)
    if not validate_chirotope(out).valid:
        raise NotAMutationError(f"flipping {b} does not give a valid chirotope")
    return out


def mutations(chi: Chirotope) -> list[tuple]:
    """All bases whose flip is a mutation, in lexicographic order."""
    return [b for b in chi.bases if is_mutation(chi, b)]


@dataclass
class FlipGraph:
    nodes: list = field(default_factory=list)  # canonical sign strings, sorted
    edges: list = field(default_factory=list)  # (key, key, basis) with key_a < key_b
    depth: dict = field(default_factory=dict)  # key -> BFS distance from the start
    mutation_counts: dict = field(default_factory=dict)
    chirotopes: dict = field(default_factory=dict)

    def as_dict(self):
        return {
            "nodes": [{"chirotope": k, "depth": self.depth[k], "mutations": self.mutation_counts[k]}
                      for k in self.nodes],
            "edges": [[a, b, list(basis)] for a, b, basis in self.edges],
        }


def explore_flip_graph(chi: Chirotope, depth: int, *, preserve_polytope: bool = False,
                       max_n: int = 7) -> FlipGraph:
    """Breadth-first closure over mutations up to ``depth`` steps from chi.

    Nodes are keyed by the sign string normalized to +1 at the first basis.
    With ``preserve_polytope`` a flip is followed only when both ends are
    matroid polytopes.  Mutation counts are unfiltered.
    """
    if chi.n > max_n:
        raise SizeGuardError(f"n = {chi.n} exceeds the exploration limit {max_n}")
    if depth < 0:
        raise OMError("depth must be non-negative")
    start = chi.normalized()
    if not validate_chirotope(start).valid:
        raise OMError("start chirotope is not valid")
    if preserve_polytope and not is_matroid_polytope(start):
        raise OMError("start chirotope is not a matroid polytope")
    key0 = start.sign_string()
    seen = {key0: start}
    dist = {key0: 0}
    counts = {}
    edges = set()
    frontier = {}

    queue = deque([key0])
    while queue:
        k = queue.popleft()
        cur = seen[k]
        flips = []
        for b in cur.bases:
            nb = cur.with_flipped(b)
            if validate_chirotope(nb).valid:
                flips.append((b, nb.normalized()))
        counts[k] = len(flips)
        if dist[k] == depth:
            frontier[k] = flips
            continue
        for b, nb in flips:
            k2 = nb.sign_string()
            if k2 not in seen:
                if preserve_polytope and not is_matroid_polytope(nb):
                    continue
                seen[k2] = nb
                dist[k2] = dist[k] + 1
                queue.append(k2)
            edges.add((min(k, k2), max(k, k2), b))
    # nodes at the depth frontier never expand, so edges among them are added here
    for k, flips in frontier.items():
        for b, nb in flips:
            k2 = nb.sign_string()
            if k2 in frontier:
                edges.add((min(k, k2), max(k, k2), b))
    nodes = sorted(seen)
    return FlipGraph(nodes, sorted(edges), dist, counts, {k: seen[k] for k in nodes})
