"""Read-only analysis of PPC configurations: sides, verification, cocircuits, lenses."""
from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field

from ..errors import OMError
from ..signs import SignVector


def face_parity(m, cid: int, root_face: int = 0) -> list[int]:
    """Two-colouring of the faces by crossing parity of curve ``cid``."""
    face_of, cycles = m.faces()
    if not cycles:
        return [0]
    color = [-1] * len(cycles)
    color[root_face] = 0
    queue = deque([root_face])
    twin, curve = m.twin, m.curve
    while queue:
        f = queue.popleft()
        cf = color[f]
        for d in cycles[f]:
            g = face_of[twin[d]]
            want = cf ^ (curve[d] == cid)
            if color[g] == -1:
                color[g] = want
                queue.append(g)
            elif color[g] != want:
                raise OMError(f"curve {cid} does not separate the sphere consistently")
    if -1 in color:
        raise OMError("face adjacency graph is disconnected")
    return color


def vertex_face(m, v: int) -> int:
    return m.face_of(m.out[v])


def element_face(cfg, e: int) -> int | None:
    """A face incident to p_e (any, for vertices), or None on an empty map."""
    if e in cfg.point_vertex:
        return vertex_face(cfg.map, cfg.point_vertex[e])
    d = cfg.floats[e]
    return None if d is None else cfg.map.face_of(d)


def curve_vertices(m, cid: int) -> set[int]:
    return {m.org[d] for d in m.darts() if m.curve[d] == cid}


def curve_points(cfg, cid: int) -> set[int]:
    m = cfg.map
    return {m.vertices[v].payload for v in curve_vertices(m, cid) if m.vertices[v].kind == "point"}


def _is_single_cycle(m, cid: int) -> bool:
    darts = [d for d in m.darts() if m.curve[d] == cid]
    if not darts:
        return False
    by_vertex = {}
    for d in darts:
        by_vertex.setdefault(m.org[d], []).append(d)
    if any(len(v) != 2 for v in by_vertex.values()):
        return False
    # walk the cycle
    start = darts[0]
    d = start
    seen = 0
    while True:
        seen += 1
        w = m.head(d)
        back = m.twin[d]
        a, b = by_vertex[w]
        d = b if a == back else a
        if d == start or seen > len(darts):
            break
    return seen * 2 == len(darts)


def pair_meetings(m, c1: int, c2: int):
    """(number of crossing vertices of c1 and c2, list of (vertex, weight)) for shared points.

    A shared point counts 1 when the two curves cross there and 2 when they
    only touch.
    """
    crossings = 0
    shared = []
    for v in m.vertex_ids():
        vert = m.vertices[v]
        if vert.kind == "cross":
            if set(vert.payload) == {c1, c2}:
                crossings += 1
            continue
        rot = [m.curve[d] for d in m.rotation(v)]
        if c1 in rot and c2 in rot:
            seq = [c for c in rot if c in (c1, c2)]
            # transversal iff the two curves alternate around the vertex
            transversal = len(seq) == 4 and seq[0] != seq[1] and seq[1] != seq[2]
            shared.append((v, 1 if transversal else 2))
    return crossings, shared


def meeting_count(m, c1: int, c2: int) -> int:
    k, shared = pair_meetings(m, c1, c2)
    return k + sum(w for _, w in shared)


@dataclass
class PPCReport:
    violations: list = field(default_factory=list)
    counts: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.violations

    def as_dict(self):
        return {"ok": self.ok, "counts": self.counts, "violations": self.violations}


def verify_ppc(cfg, *, m_weak: int = 2) -> PPCReport:
    """Map validity, (P1), general position, (P2) and (P3^m) with m = 2."""
    m = cfg.map
    rep = PPCReport()
    V, E, F, C = m.counts()
    rep.counts = {"V": V, "E": E, "F": F, "components": C, "curves": len(cfg.curves)}
    if not m.euler_ok():
        rep.violations.append({"rule": "euler", "V": V, "E": E, "F": F, "components": C})
    live_curves = set(cfg.triples_by_id)
    for v in m.vertex_ids():
        vert = m.vertices[v]
        rot = [m.curve[d] for d in m.rotation(v)]
        if vert.kind == "cross":
            a, b = vert.payload
            if len(rot) != 4 or rot[0] != rot[2] or rot[1] != rot[3] or {rot[0], rot[1]} != {a, b}:
                rep.violations.append({"rule": "crossing", "vertex": v, "rotation": rot})
        else:
            for c in set(rot):
                if rot.count(c) != 2:
                    rep.violations.append({"rule": "point-degree", "point": vert.payload, "curve": c})
    for cid in sorted(live_curves):
        if not _is_single_cycle(m, cid):
            rep.violations.append({"rule": "cycle", "curve": list(cfg.triples_by_id[cid])})
    # (P2): one curve per triple; (P1)/general position: exactly its three points
    seen = {}
    points_of = {}
    for cid, tri in cfg.triples_by_id.items():
        if tri in seen:
            rep.violations.append({"rule": "P2", "triple": list(tri), "curves": [seen[tri], cid]})
        seen[tri] = cid
        pts = curve_points(cfg, cid)
        points_of[cid] = pts
        if len(pts) < 3:
            rep.violations.append({"rule": "P1", "triple": list(tri), "points": sorted(pts)})
        elif pts != set(tri):
            rep.violations.append({"rule": "general-position", "triple": list(tri), "points": sorted(pts)})
    n = cfg.chirotope.n
    for tri in itertools.combinations(cfg.chirotope.elements, 3):
        if tri not in seen and len(cfg.triples_by_id) == n * (n - 1) * (n - 2) // 6:
            rep.violations.append({"rule": "P2", "triple": list(tri), "curves": []})
    # (P3^m)
    crossing_pairs = {}
    for v in m.vertex_ids():
        vert = m.vertices[v]
        if vert.kind == "cross":
            key = tuple(sorted(vert.payload))
            crossing_pairs[key] = crossing_pairs.get(key, 0) + 1
    ids = sorted(live_curves)
    for c1, c2 in itertools.combinations(ids, 2):
        common = points_of[c1] & points_of[c2]
        if len(common) < m_weak:
            continue
        total = meeting_count(m, c1, c2)
        if total > 2:
            rep.violations.append({"rule": f"P3^{m_weak}", "curves": [list(cfg.triples_by_id[c1]),
                                   list(cfg.triples_by_id[c2])], "meetings": total})
    return rep


def extract_sign_vector(cfg, cid: int, *, parity=None) -> SignVector:
    """+1 on the reference side of the curve, -1 on the other, 0 on the curve."""
    m = cfg.map
    ref = cfg.reference_face()
    color = parity if parity is not None else face_parity(m, cid, ref)
    on_curve = curve_vertices(m, cid)
    vals = []
    for e in cfg.chirotope.elements:
        if e in cfg.point_vertex and cfg.point_vertex[e] in on_curve:
            vals.append(0)
            continue
        f = element_face(cfg, e)
        vals.append(1 if color[f] == color[ref] else -1)
    return SignVector(cfg.chirotope.elements, tuple(vals))


def extract_cocircuits(cfg) -> frozenset:
    out = set()
    for cid in cfg.triples_by_id:
        X = extract_sign_vector(cfg, cid)
        out.add(X)
        out.add(-X)
    return frozenset(out)


@dataclass
class Lens:
    faces: frozenset
    points: frozenset
    sides: tuple  # side of the region relative to (curve 1, curve 2), reference side = +1

    @property
    def empty(self) -> bool:
        return not self.points


def lenses(cfg, c1, c2) -> list[Lens]:
    """Connected components of the complement of two curves, with point content."""
    c1 = cfg.curve_id(c1)
    c2 = cfg.curve_id(c2)
    m = cfg.map
    if meeting_count(m, c1, c2) < 2:
        raise OMError("the two curves do not cross at least twice")
    face_of, cycles = m.faces()
    comp = [-1] * len(cycles)
    groups = []
    for f0 in range(len(cycles)):
        if comp[f0] != -1:
            continue
        k = len(groups)
        comp[f0] = k
        group = [f0]
        queue = deque([f0])
        while queue:
            f = queue.popleft()
            for d in cycles[f]:
                if m.curve[d] in (c1, c2):
                    continue
                g = face_of[m.twin[d]]
                if comp[g] == -1:
                    comp[g] = k
                    group.append(g)
                    queue.append(g)
        groups.append(group)
    on = curve_vertices(m, c1) | curve_vertices(m, c2)
    contents = [set() for _ in groups]
    for e in cfg.chirotope.elements:
        if e in cfg.point_vertex and cfg.point_vertex[e] in on:
            continue
        f = element_face(cfg, e)
        if f is not None:
            contents[comp[f]].add(e)
    ref = cfg.reference_face()
    p1 = face_parity(m, c1, ref)
    p2 = face_parity(m, c2, ref)
    out = []
    for k, group in enumerate(groups):
        f = group[0]
        out.append(Lens(frozenset(group), frozenset(contents[k]),
                        (1 if p1[f] == 0 else -1, 1 if p2[f] == 0 else -1)))
    return out
