"""SVG drawings of circle pictures and of PPC maps.

Combinatorial maps are laid out by a barycentric (Tutte) embedding of their
face subdivision: every edge gets a midpoint and every inner face a centre
joined to its corners and midpoints.  The reference face is the outer face.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from xml.sax.saxutils import escape

import numpy as np

from .realization import CirclePicture

PALETTE = ("#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b",
           "#e377c2", "#7f7f7f", "#bcbd22", "#17becf")
SIZE = 600


def _f(x: float) -> str:
    return f"{x:.3f}"


def _svg(body: list[str], size: int = SIZE) -> bytes:
    head = (f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
            f'viewBox="0 0 {size} {size}">')
    return ("\n".join([head, '<rect width="100%" height="100%" fill="white"/>', *body, "</svg>"]) + "\n").encode()


class _Frame:
    """Affine map from data coordinates into the square canvas."""

    def __init__(self, xs, ys, size=SIZE, margin=30):
        x0, x1 = min(xs), max(xs)
        y0, y1 = min(ys), max(ys)
        span = max(x1 - x0, y1 - y0) or 1.0
        self.s = (size - 2 * margin) / span
        self.x0, self.y0, self.m = x0, y0, margin
        self.size = size

    def __call__(self, x, y):
        return self.m + (x - self.x0) * self.s, self.size - (self.m + (y - self.y0) * self.s)


def _point_mark(e, x, y) -> str:
    return (f'<g class="point" data-element="{e}"><circle cx="{_f(x)}" cy="{_f(y)}" r="4" fill="black"/>'
            f'<text x="{_f(x + 6)}" y="{_f(y - 6)}" font-size="12">{e}</text></g>')


def render_picture(pic: CirclePicture, *, size: int = SIZE) -> bytes:
    xs, ys = [], []
    for e, (x, y) in pic.positions.items():
        xs.append(x)
        ys.append(y)
    for cx, cy, r, _ in pic.circles.values():
        xs += [cx - r, cx + r]
        ys += [cy - r, cy + r]
    fr = _Frame(xs, ys, size)
    body = []
    for k, (tri, (cx, cy, r, _)) in enumerate(sorted(pic.circles.items())):
        x, y = fr(cx, cy)
        col = PALETTE[k % len(PALETTE)]
        body.append(f'<g class="curve" data-triple="{",".join(map(str, tri))}">'
                    f'<circle cx="{_f(x)}" cy="{_f(y)}" r="{_f(r * fr.s)}" fill="none" stroke="{col}"/></g>')
    for e in sorted(pic.positions):
        body.append(_point_mark(e, *fr(*pic.positions[e])))
    return _svg(body, size)


@dataclass
class MapLayout:
    vertex_xy: dict  # map vertex id -> (x, y)
    edge_mid: dict  # dart (the smaller of each twin pair) -> (x, y)
    face_centre: dict  # face id -> (x, y)
    float_xy: dict  # element -> (x, y)
    outer: int


def combinatorial_layout(cfg) -> MapLayout:
    m = cfg.map
    face_of, cycles = m.faces()
    if not cycles:
        xy = {e: (math.cos(2 * math.pi * k / max(1, len(cfg.floats))),
                  math.sin(2 * math.pi * k / max(1, len(cfg.floats)))) for k, e in enumerate(sorted(cfg.floats))}
        return MapLayout({}, {}, {}, xy, 0)
    outer = cfg.reference_face()
    # nodes: ("v", id), ("e", dart), ("f", face)
    idx = {}

    def node(key):
        if key not in idx:
            idx[key] = len(idx)
        return idx[key]

    def ekey(d):
        return ("e", min(d, m.twin[d]))

    adj = {}

    def link(a, b):
        adj.setdefault(a, set()).add(b)
        adj.setdefault(b, set()).add(a)

    for v in m.vertex_ids():
        if m.out[v] != -1:
            node(("v", v))
    for d in m.darts():
        if d < m.twin[d]:
            mid = node(ekey(d))
            link(mid, node(("v", m.org[d])))
            link(mid, node(("v", m.head(d))))
    for f, cyc in enumerate(cycles):
        if f == outer:
            continue
        c = node(("f", f))
        for d in cyc:
            link(c, node(("v", m.org[d])))
            link(c, node(ekey(d)))
    # outer boundary on a circle, in face-walk order
    ring = []
    for d in cycles[outer]:
        for key in (("v", m.org[d]), ekey(d)):
            k = idx[key]
            if k not in ring:
                ring.append(k)
    N = len(idx)
    pos = np.zeros((N, 2))
    fixed = np.zeros(N, dtype=bool)
    for j, k in enumerate(ring):
        a = 2 * math.pi * j / len(ring)
        pos[k] = (math.cos(a), math.sin(a))
        fixed[k] = True
    free = np.nonzero(~fixed)[0]
    if len(free):
        where = {k: i for i, k in enumerate(free)}
        A = np.zeros((len(free), len(free)))
        b = np.zeros((len(free), 2))
        for k in free:
            i = where[k]
            nb = sorted(adj.get(k, ()))
            A[i, i] = len(nb)
            for j in nb:
                if fixed[j]:
                    b[i] += pos[j]
                else:
                    A[i, where[j]] -= 1
        pos[free] = np.linalg.solve(A, b)
    lay = MapLayout({}, {}, {}, {}, outer)
    for (kind, key), k in idx.items():
        xy = (float(pos[k, 0]), float(pos[k, 1]))
        if kind == "v":
            lay.vertex_xy[key] = xy
        elif kind == "e":
            lay.edge_mid[key] = xy
        else:
            lay.face_centre[key] = xy
    # floats: near their face centre, spread on a small circle when several share a face
    by_face = {}
    for e in sorted(cfg.floats):
        by_face.setdefault(face_of[cfg.floats[e]] if cfg.floats[e] is not None else outer, []).append(e)
    for f, es in by_face.items():
        if f == outer:
            cx, cy = 1.25, 0.0
            for j, e in enumerate(es):
                lay.float_xy[e] = (cx, cy + 0.12 * j)
            continue
        cx, cy = lay.face_centre[f]
        corners = [lay.vertex_xy[m.org[d]] for d in cycles[f]]
        rad = 0.3 * min(math.hypot(x - cx, y - cy) for x, y in corners)
        for j, e in enumerate(es):
            if len(es) == 1:
                lay.float_xy[e] = (cx, cy)
            else:
                a = 2 * math.pi * j / len(es)
                lay.float_xy[e] = (cx + rad * math.cos(a), cy + rad * math.sin(a))
    return lay


def face_polygon(cfg, lay: MapLayout, f: int) -> list[tuple[float, float]]:
    m = cfg.map
    out = []
    for d in m.faces()[1][f]:
        out.append(lay.vertex_xy[m.org[d]])
        out.append(lay.edge_mid[min(d, m.twin[d])])
    return out


def render_map(cfg, *, size: int = SIZE) -> bytes:
    m = cfg.map
    lay = combinatorial_layout(cfg)
    pts = list(lay.vertex_xy.values()) + list(lay.float_xy.values()) + list(lay.edge_mid.values())
    fr = _Frame([p[0] for p in pts] or [0, 1], [p[1] for p in pts] or [0, 1], size)
    body = []
    by_curve = {}
    for d in m.darts():
        if d < m.twin[d]:
            by_curve.setdefault(m.curve[d], []).append(d)
    for k, cid in enumerate(sorted(by_curve)):
        tri = cfg.triples_by_id.get(cid, ())
        col = PALETTE[k % len(PALETTE)]
        segs = []
        for d in sorted(by_curve[cid]):
            a = fr(*lay.vertex_xy[m.org[d]])
            mid = fr(*lay.edge_mid[d])
            b = fr(*lay.vertex_xy[m.head(d)])
            segs.append(f'<polyline points="{_f(a[0])},{_f(a[1])} {_f(mid[0])},{_f(mid[1])} '
                        f'{_f(b[0])},{_f(b[1])}" fill="none" stroke="{col}"/>')
        body.append(f'<g class="curve" data-triple="{",".join(map(str, tri))}">' + "".join(segs) + "</g>")
    for e, v in sorted(cfg.point_vertex.items()):
        body.append(_point_mark(e, *fr(*lay.vertex_xy[v])))
    for e in sorted(lay.float_xy):
        body.append(_point_mark(e, *fr(*lay.float_xy[e])))
    if cfg.q is not None or m.faces()[1]:
        body.append(f'<text x="8" y="16" font-size="11">{escape("outer face: reference")}</text>')
    return _svg(body, size)


def render_svg(obj, **options) -> bytes:
    """SVG for a CirclePicture (geometric mode) or a PPC configuration (combinatorial mode)."""
    if isinstance(obj, CirclePicture):
        return render_picture(obj, **options)
    return render_map(obj, **options)
