"""Removal of empty digons between two curves, and the inverse finger move."""
from __future__ import annotations

from ..errors import OMError
from .analysis import curve_points, meeting_count


def _empty_digon(cfg):
    """(x, y, c1, c2, face darts) for some removable empty digon, or None."""
    m = cfg.map
    face_of, cycles = m.faces()
    float_faces = {face_of[d] for d in cfg.floats.values() if d is not None}
    for f, cyc in enumerate(cycles):
        if len(cyc) != 2 or f in float_faces:
            continue
        d1, d2 = cyc
        c1, c2 = m.curve[d1], m.curve[d2]
        if c1 == c2:
            continue
        x, y = m.org[d1], m.org[d2]
        pair = {c1, c2}
        if any(m.vertices[v].kind != "cross" or set(m.vertices[v].payload) != pair for v in (x, y)):
            continue
        if len(curve_points(cfg, c1) & curve_points(cfg, c2)) > 1:
            continue
        if meeting_count(m, c1, c2) < 4:
            continue
        return x, y, d1, d2
    return None


def _smooth(cfg, x, y, d1, d2):
    """Push one curve off the other across the digon bounded by d1 (x->y) and d2 (y->x)."""
    m = cfg.map
    dead = set(m.rotation(x)) | set(m.rotation(y))
    far = []
    for v, inner in ((x, {d1, m.twin[d2]}), (y, {d2, m.twin[d1]})):
        for d in m.rotation(v):
            if d not in inner:
                far.append(d)
    # far = [x-dart c?, x-dart c?, y-dart, y-dart]; pair by curve
    xa = {m.curve[d]: d for d in far[:2]}
    yb = {m.curve[d]: d for d in far[2:]}
    if set(xa) != set(yb) or len(xa) != 2:
        raise OMError("digon vertices are not transversal crossings")
    ends = []
    for c in xa:
        a, b = m.twin[xa[c]], m.twin[yb[c]]
        if a in dead or b in dead:
            return False
        ends.append((a, b))
    q_dead = cfg.q in dead
    for a, b in ends:
        m.twin[a] = b
        m.twin[b] = a
    for d in dead:
        m.dart_alive[d] = False
    for v in (x, y):
        m.vertex_alive[v] = False
        m.out[v] = -1
    m.touch()
    if q_dead:
        cfg.q = ends[0][0]
    return True


def reduce_crossings(cfg, *, max_moves: int | None = None):
    """Repeatedly remove empty digons of curve pairs sharing at most one point
    that meet at least four times.  Returns a new configuration."""
    cfg = cfg.copy()
    moves = 0
    while max_moves is None or moves < max_moves:
        found = _empty_digon(cfg)
        if found is None or not _smooth(cfg, *found):
            break
        moves += 1
    return cfg


def add_finger(cfg, d1: int, d2: int):
    """Push the edge of d1 across the edge of d2, creating an empty digon.

    Both darts must border the same face and lie on different curves.  The
    inverse of a digon removal; returns a new configuration.
    """
    cfg = cfg.copy()
    m = cfg.map
    if m.face_of(d1) != m.face_of(d2) or m.curve[d1] == m.curve[d2]:
        raise OMError("darts must border one face and belong to different curves")
    c1, c2 = m.curve[d1], m.curve[d2]
    pair = tuple(sorted((c1, c2)))
    p = m.add_vertex("cross", pair)
    pc, pn = m.split_edge(d2, p)
    q = m.add_vertex("cross", pair)
    qp, qn = m.split_edge(pn, q)
    A, B = m.org[d1], m.head(d1)
    slot_a, slot_b = m.nxt[d1], m.nxt[m.twin[d1]]
    if slot_a == d1 or slot_b == m.twin[d1]:
        raise OMError("edge endpoints need degree at least two")
    m.remove_edge(d1)
    m.add_edge(A, slot_a, q, qn, c1)
    m.add_edge(q, qp, p, pc, c1)
    m.add_edge(p, pn, B, slot_b, c1)
    if cfg.q is not None and not m.dart_alive[cfg.q]:
        cfg.q = pn
    for e, d in list(cfg.floats.items()):
        if d is not None and not m.dart_alive[d]:
            cfg.floats[e] = pn
    return cfg
