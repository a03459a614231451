"""PPC configurations and the incremental curve-insertion builder.

Curves are inserted in lexicographic order of their triples.  Each curve is
drawn as three arcs p_s -> p_t, each routed face by face through the current
map.  An arc may not cross a drawn curve sharing two points with the new
triple, may not pass through a vertex, and starts in the region of the
sphere that lies opposite p_u with respect to every drawn curve through p_s
and p_t.  Point vertices next to a traversed face receive a side label on
the fly; a label contradicting the chirotope prunes the search.
"""
from __future__ import annotations

import itertools
import sys
from collections import deque
from dataclasses import dataclass, field

from ..errors import ClaimViolation, InfeasibleCorridor, NotAPolytopeError, OMError
from ..polytope import caratheodory_witness, is_matroid_polytope
from ..signs import Chirotope, OrientedMatroid, perm_sign
from .analysis import element_face, extract_sign_vector, face_parity, meeting_count, curve_points
from .cmap import CombinatorialMap

DEFAULT_BUDGET = 200_000


@dataclass
class PPCConfiguration:
    chirotope: Chirotope
    map: CombinatorialMap
    curves: dict = field(default_factory=dict)  # sorted triple -> curve id
    triples_by_id: dict = field(default_factory=dict)  # curve id -> sorted triple
    point_vertex: dict = field(default_factory=dict)  # element -> vertex id
    floats: dict = field(default_factory=dict)  # element -> dart whose right face holds it
    q: int | None = None  # dart whose right face is the reference face

    def copy(self) -> "PPCConfiguration":
        return PPCConfiguration(self.chirotope, self.map.copy(), dict(self.curves),
                                dict(self.triples_by_id), dict(self.point_vertex),
                                dict(self.floats), self.q)

    def reference_face(self) -> int:
        return 0 if self.q is None else self.map.face_of(self.q)

    def curve_id(self, c) -> int:
        if isinstance(c, int):
            if c not in self.triples_by_id:
                raise OMError(f"unknown curve id {c}")
            return c
        key = tuple(sorted(c))
        if key not in self.curves:
            raise OMError(f"no curve for triple {key}")
        return self.curves[key]

    @property
    def n_curves(self) -> int:
        return len(self.curves)

    # ------------------------------------------------------------ serialize
    def to_dict(self) -> dict:
        data, dmap, vmap = self.map.export()
        data["format"] = "rank4om-map/1"
        data["chirotope"] = {"n": self.chirotope.n, "rank": self.chirotope.rank,
                             "signs": self.chirotope.sign_string()}
        data["curves"] = [{"id": cid, "triple": list(t)} for cid, t in sorted(self.triples_by_id.items())]
        data["points"] = {str(e): vmap[v] for e, v in sorted(self.point_vertex.items())}
        data["floats"] = {str(e): (None if d is None else dmap[d]) for e, d in sorted(self.floats.items())}
        data["reference"] = None if self.q is None else dmap[self.q]
        return data

    @classmethod
    def from_dict(cls, data: dict) -> "PPCConfiguration":
        ch = data["chirotope"]
        chi = Chirotope.from_string(ch["n"], ch["rank"], ch["signs"])
        m = CombinatorialMap.from_dict(data)
        cfg = cls(chi, m)
        for rec in data["curves"]:
            t = tuple(rec["triple"])
            cfg.curves[t] = rec["id"]
            cfg.triples_by_id[rec["id"]] = t
        cfg.point_vertex = {int(e): v for e, v in data["points"].items()}
        cfg.floats = {int(e): d for e, d in data["floats"].items()}
        cfg.q = data["reference"]
        return cfg


def init_configuration(chi: Chirotope, *, check_polytope: bool = True) -> PPCConfiguration:
    """Empty map: every point floats in the single face, no curves."""
    if chi.rank != 4 or not chi.is_uniform():
        raise OMError("a uniform rank-4 chirotope is required")
    if check_polytope:
        M = OrientedMatroid.from_chirotope(chi)
        if not is_matroid_polytope(M):
            w = caratheodory_witness(M)
            raise NotAPolytopeError("input is not a matroid polytope", witness=w)
    return PPCConfiguration(chi, CombinatorialMap(), floats={e: None for e in chi.elements})


# ---------------------------------------------------------------- corridors


@dataclass
class CorridorSpec:
    role: tuple
    u_plus: int | None = None
    u_minus: int | None = None
    case: str | None = None  # "I", "II" or None without bounding curves
    forbidden: frozenset = frozenset()
    scope_plus: frozenset = frozenset()
    scope_minus: frozenset = frozenset()
    allowed_faces: frozenset = frozenset()
    pencil: tuple = ()

    def as_dict(self):
        return {
            "role": list(self.role), "u_plus": self.u_plus, "u_minus": self.u_minus,
            "case": self.case, "forbidden": sorted(self.forbidden),
            "scope_plus": sorted(self.scope_plus), "scope_minus": sorted(self.scope_minus),
            "pencil": list(self.pencil),
        }


def _signed(chi, tri, e):
    return chi(*tri, e)


def _role_sign(chi, role, e) -> int:
    """chi(s, t, u, e) in role order."""
    return chi(*role, e)


def select_corridor(cfg: PPCConfiguration, triple, role) -> CorridorSpec:
    chi = cfg.chirotope
    lam = tuple(sorted(triple))
    s, t, u = role
    if sorted(role) != list(lam):
        raise OMError("role must be a rotation of the triple")
    E = chi.elements
    upto = [e for e in E if e <= u]
    X = {e: chi(*lam, e) for e in E}
    # drawn curves through p_s and p_t
    pencil = []
    for w in E:
        if w in (s, t, u):
            continue
        key = tuple(sorted((s, t, w)))
        if key in cfg.curves:
            pencil.append(w)
    cands = []
    for w in pencil:
        if w > u:
            continue
        key = tuple(sorted((s, t, w)))
        Y = {e: chi(*key, e) for e in E}
        for o in (1, -1):
            if all(X[e] * Y[e] * o != -1 for e in upto):
                cands.append((w, {e: o * Y[e] for e in E}))
                break
    if len(cands) > 2:
        raise InfeasibleCorridor(f"more than two closest curves for role {role}")
    forbidden = set()
    for a in E:
        for pair, bound in (((s, t), u), ((s, u), t), ((t, u), s)):
            if a < bound and a not in (s, t, u):
                key = tuple(sorted(pair + (a,)))
                if key in cfg.curves:
                    forbidden.add(cfg.curves[key])
    rest = [e for e in E if e not in lam]
    spec = CorridorSpec(role=tuple(role), forbidden=frozenset(forbidden),
                        pencil=tuple(cfg.curves[tuple(sorted((s, t, w)))] for w in pencil))
    if len(cands) == 2:
        (wp, Yp), (wm, Ym) = cands
        sep = {e for e in upto if Yp[e] * Ym[e] == -1}
        if sep != {u}:
            raise InfeasibleCorridor(f"closest curves for role {role} do not isolate {u}", spec)
        # local sides: I of u+ holds p_{u-}, I of u- holds p_{u+}
        in_p = Yp[wm]
        in_m = Ym[wp]
        spec.u_plus = cfg.curves[tuple(sorted((s, t, wp)))]
        spec.u_minus = cfg.curves[tuple(sorted((s, t, wm)))]
        inside_u = (Yp[u] == in_p, Ym[u] == in_m)
        spec.case = "II" if all(inside_u) else "I"
        want = (in_p, in_m) if spec.case == "I" else (-in_p, -in_m)
        scope = [e for e in rest if Yp[e] in (0, want[0]) or Ym[e] in (0, want[1])]
    elif len(cands) == 1:
        (wp, Yp), = cands
        spec.u_plus = cfg.curves[tuple(sorted((s, t, wp)))]
        anchor = min(e for e in E if e not in (s, t, wp))
        spec.case = "II" if Yp[u] == Yp[anchor] else "I"
        scope = rest
    else:
        scope = rest
    spec.scope_plus = frozenset(e for e in scope if _role_sign(chi, role, e) == 1)
    spec.scope_minus = frozenset(e for e in scope if _role_sign(chi, role, e) == -1)
    if spec.pencil:
        m = cfg.map
        ok = None
        for cid in spec.pencil:
            par = face_parity(m, cid)
            fu = element_face(cfg, u)
            good = {f for f in range(len(par)) if par[f] != par[fu]}
            ok = good if ok is None else ok & good
        spec.allowed_faces = frozenset(ok)
    else:
        spec.allowed_faces = frozenset(range(cfg.map.n_faces()))
    return spec


# ------------------------------------------------------------------ routing


class _Budget(Exception):
    pass


class _Router:
    """Search state for inserting one curve."""

    def __init__(self, cfg: PPCConfiguration, lam: tuple, budget: int, strict: bool = True):
        self.cfg = cfg
        self.strict = strict
        self.crossings: dict[int, int] = {}
        # circle-like cap: total meetings with any drawn curve at most two
        self.cap = {cid: 2 - len(set(tri) & set(lam)) for cid, tri in cfg.triples_by_id.items()}
        self.lam = lam
        self.chi = cfg.chirotope
        self.budget = budget
        self.nodes = 0
        self.labels: dict[int, int] = {}  # point vertex -> +1 left / -1 right
        self.sigma: list[int | None] = [None]
        self.need = {}
        self.cid = max(cfg.triples_by_id, default=-1) + 1

    # labels ---------------------------------------------------------------
    def _label(self, changes, v, side) -> bool:
        old = self.labels.get(v)
        if old is not None:
            return old == side
        e = self.need.get(v)
        if e is None:
            return True
        want = self.chi(*self.lam, e)
        if self.sigma[0] is None:
            self.sigma[0] = side * want
            changes.append(("sigma", None))
        elif side * want != self.sigma[0]:
            return False
        self.labels[v] = side
        changes.append(("label", v))
        return True

    def _undo(self, changes):
        for kind, v in reversed(changes):
            if kind == "label":
                del self.labels[v]
            else:
                self.sigma[0] = None

    def _apply_chord(self, m, cyc, posA, posB):
        """Label vertices on the two boundary chains of a chord; None on conflict."""
        L = 2 * len(cyc)
        changes = []
        p = (posA + 1) % L
        while p != posB:
            if p % 2 == 0 and not self._label(changes, m.org[cyc[p // 2]], 1):
                self._undo(changes)
                return None
            p = (p + 1) % L
        p = (posB + 1) % L
        while p != posA:
            if p % 2 == 0 and not self._label(changes, m.org[cyc[p // 2]], -1):
                self._undo(changes)
                return None
            p = (p + 1) % L
        return changes

    # one arc ----------------------------------------------------------------
    def arc_paths(self, cfg, spec: CorridorSpec, barrier=frozenset()):
        """Yield (start corner, crossed darts, end corner or None) with labels applied.

        Darts in ``barrier`` are treated like edges of forbidden curves.
        """
        m = cfg.map
        s, t, u = spec.role
        face_of, cycles = m.faces()
        idx = {}
        for cyc in cycles:
            for i, d in enumerate(cyc):
                idx[d] = i
        blocked = set(spec.forbidden) | {self.cid}
        vs = cfg.point_vertex[s]
        target_vertex = cfg.point_vertex.get(t)
        ends = {}
        if target_vertex is not None:
            for g in m.rotation(target_vertex):
                ends.setdefault(face_of[g], []).append(g)
            target_faces = set(ends)
            float_face = None
        else:
            float_face = face_of[cfg.floats[t]]
            target_faces = {float_face}
        # dual distances to the target, through crossable edges only
        dist = {f: 0 for f in target_faces}
        queue = deque(target_faces)
        while queue:
            f = queue.popleft()
            for d in cycles[f]:
                if m.curve[d] in blocked or d in barrier:
                    continue
                g = face_of[m.twin[d]]
                if g not in dist:
                    dist[g] = dist[f] + 1
                    queue.append(g)
        allowed = spec.allowed_faces
        starts = [g for g in m.rotation(vs) if face_of[g] in allowed and face_of[g] in dist]
        starts.sort(key=lambda g: dist[face_of[g]])
        twin = m.twin
        curve = m.curve

        def dfs(f, posA, visited, crossed, g0):
            self.nodes += 1
            if self.nodes > self.budget:
                raise _Budget()
            cyc = cycles[f]
            if f == float_face:
                yield g0, list(crossed), None
                return
            for gt in ends.get(f, ()):
                ch = self._apply_chord(m, cyc, posA, 2 * idx[gt])
                if ch is None:
                    continue
                yield g0, list(crossed), gt
                self._undo(ch)
            exits = []
            for d in cyc:
                if curve[d] in blocked or d in barrier:
                    continue
                g = face_of[twin[d]]
                if g in visited or g not in dist:
                    continue
                if self.strict and self.crossings.get(curve[d], 0) >= self.cap[curve[d]]:
                    continue
                exits.append((dist[g], idx[d], d, g))
            exits.sort()
            for _, i, d, g in exits:
                ch = self._apply_chord(m, cyc, posA, 2 * i + 1)
                if ch is None:
                    continue
                c = curve[d]
                self.crossings[c] = self.crossings.get(c, 0) + 1
                visited.add(g)
                crossed.append(d)
                yield from dfs(g, 2 * idx[twin[d]] + 1, visited, crossed, g0)
                crossed.pop()
                visited.discard(g)
                self.crossings[c] -= 1
                self._undo(ch)

        for g0 in starts:
            f0 = face_of[g0]
            yield from dfs(f0, 2 * idx[g0], {f0}, [], g0)

    # commit -----------------------------------------------------------------
    def commit(self, cfg, spec, path, tags) -> int:
        """Draw the arc into cfg.map; returns the first dart of the arc."""
        m = cfg.map
        s, t, _ = spec.role
        g0, crossed, gt = path
        face_of, cycles = m.faces()
        face_tag = {}
        for f, cyc in enumerate(cycles):
            face_tag[f] = tags[cyc[0]]
        walk_faces = [face_of[g0]] + [face_of[m.twin[d]] for d in crossed]
        walk_tags = [face_tag[f] for f in walk_faces]
        corners = [(cfg.point_vertex[s], g0)]
        incoming = []
        for d in crossed:
            c_old = m.curve[d]
            x = m.add_vertex("cross", tuple(sorted((c_old, self.cid))))
            t_old = m.twin[d]
            xu, xv = m.split_edge(d, x)
            tags[xv] = tags[d]
            tags[xu] = tags[t_old]
            incoming.append((x, xv))
            corners.append((x, xu))
        if gt is None:
            vt = m.add_vertex("point", t)
            cfg.point_vertex[t] = vt
            del cfg.floats[t]
            incoming.append((vt, None))
        else:
            incoming.append((cfg.point_vertex[t], gt))
        first = None
        for k, ((u0, gu), (v1, gv)) in enumerate(zip(corners, incoming)):
            a = m.add_edge(u0, gu, v1, gv, self.cid)
            tags[a] = tags[m.twin[a]] = walk_tags[k]
            if first is None:
                first = a
        return first


def _first_curve(cfg: PPCConfiguration, lam: tuple) -> int:
    m = cfg.map
    chi = cfg.chirotope
    cid = 0
    vs = []
    for e in lam:
        vs.append(m.add_vertex("point", e))
        cfg.point_vertex[e] = vs[-1]
        del cfg.floats[e]
    a = m.add_edge(vs[0], None, vs[1], None, cid)
    b = m.add_edge(vs[1], m.twin[a], vs[2], None, cid)
    m.add_edge(vs[2], m.twin[b], vs[0], a, cid)
    left, right = m.twin[a], a
    for e in list(cfg.floats):
        cfg.floats[e] = left if chi(*lam, e) == 1 else right
    cfg.q = right
    cfg.curves[lam] = cid
    cfg.triples_by_id[cid] = lam
    return cid


def _close(cfg, router: _Router, first_dart: int, tags: dict, pre_floats: dict) -> bool:
    """Check point sides of the closed curve and place the floats."""
    m = cfg.map
    chi = cfg.chirotope
    lam = router.lam
    par = face_parity(m, router.cid)
    face_of, cycles = m.faces()
    left_color = par[face_of[m.twin[first_dart]]]
    sigma = router.sigma[0]
    on_curve = set(cfg.point_vertex[e] for e in lam)
    for e, v in cfg.point_vertex.items():
        if v in on_curve:
            continue
        side = 1 if par[face_of[m.out[v]]] == left_color else -1
        want = chi(*lam, e)
        if sigma is None:
            sigma = side * want
        elif side * want != sigma:
            return False
    if sigma is None:
        sigma = 1
    # floats: pick a descendant face of the original face on the required side
    by_tag = {}
    for f, cyc in enumerate(cycles):
        col = 1 if par[f] == left_color else -1
        by_tag.setdefault((tags[cyc[0]], col), cyc[0])
    for e, old_tag in pre_floats.items():
        if e in cfg.point_vertex:
            continue
        want = chi(*lam, e) * sigma
        d = by_tag.get((old_tag, want))
        if d is None:
            return False
        cfg.floats[e] = d
    return True


def _check_claim(cfg, cid: int, lam: tuple):
    m = cfg.map
    pts = curve_points(cfg, cid)
    if pts != set(lam):
        raise ClaimViolation(f"curve {lam} passes through {sorted(pts)}")
    for other, tri in cfg.triples_by_id.items():
        if other == cid or len(set(tri) & set(lam)) < 2:
            continue
        k = meeting_count(m, cid, other)
        if k != 2:
            raise ClaimViolation(f"curves {lam} and {tri} meet {k} times")
    X = extract_sign_vector(cfg, cid)
    ref = {e: cfg.chirotope(*lam, e) for e in cfg.chirotope.elements}
    signs = {X[e] * ref[e] for e in cfg.chirotope.elements if ref[e] != 0}
    if len(signs) != 1:
        raise ClaimViolation(f"curve {lam} does not separate the points as required")


def insert_curve(cfg: PPCConfiguration, triple, *, budget: int = DEFAULT_BUDGET,
                 check: bool = True) -> PPCConfiguration:
    """Return a new configuration with the curve of ``triple`` drawn."""
    lam = tuple(sorted(triple))
    if lam in cfg.curves:
        raise OMError(f"curve {lam} already drawn")
    cfg = cfg.copy()
    if not cfg.curves:
        cid = _first_curve(cfg, lam)
        if check:
            _check_claim(cfg, cid, lam)
        return cfg
    i1, i2, i3 = lam
    roles = [(i1, i2, i3), (i2, i3, i1), (i3, i1, i2)]
    face_of, _ = cfg.map.faces()
    pre_floats = {e: face_of[d] for e, d in cfg.floats.items()}
    limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(limit, 20000))
    result = None
    exhausted = False
    try:
        for strict in (True, False):
            router = _Router(cfg, lam, budget, strict=strict)
            router.need = {v: e for e, v in cfg.point_vertex.items() if e not in lam}
            try:
                result = _solve(cfg, router, roles, 0, dict(face_of), None, pre_floats)
            except _Budget:
                exhausted = True
                continue
            if result is not None:
                break
    finally:
        sys.setrecursionlimit(limit)
    if result is None:
        why = "search budget exhausted" if exhausted else "no routing found"
        raise InfeasibleCorridor(f"{why} for curve {lam}")
    cfg = result
    if check:
        _check_claim(cfg, router.cid, lam)
    return cfg


def _arc_sides(cfg, router: _Router, spec: CorridorSpec, arc_dart: int):
    """Sigma implied by the points the committed arc already decides, or False.

    Outside the region R around p_u (p_u's side of every curve through p_s
    and p_t) the rest of the new curve never appears, so the arc alone fixes
    the side of every point touching a face outside R.  Returns None when
    nothing is decided.
    """
    if not spec.pencil:
        return None
    m = cfg.map
    s, t, u = spec.role
    face_of, cycles = m.faces()
    nf = len(cycles)
    in_r = [True] * nf
    fu = element_face(cfg, u)
    for cid in spec.pencil:
        par = face_parity(m, cid)
        for f in range(nf):
            if par[f] != par[fu]:
                in_r[f] = False
    part = [0] * nf
    seeds = ((face_of[m.twin[arc_dart]], 1), (face_of[arc_dart], -1))
    for f0, side in seeds:
        if in_r[f0] or part[f0]:
            continue
        part[f0] = side
        queue = deque([f0])
        while queue:
            f = queue.popleft()
            for d in cycles[f]:
                if m.curve[d] == router.cid:
                    continue
                g = face_of[m.twin[d]]
                if not in_r[g] and not part[g]:
                    part[g] = side
                    queue.append(g)
    sigma = router.sigma[0]
    on = {cfg.point_vertex[e] for e in router.lam if e in cfg.point_vertex}
    for e, v in cfg.point_vertex.items():
        if v in on:
            continue
        for d in m.rotation(v):
            side = part[face_of[d]]
            if side:
                val = side * router.chi(*router.lam, e)
                if sigma is None:
                    sigma = val
                elif val != sigma:
                    return False
                break
    return sigma


def _corridor_chains(m, corridor: frozenset, vs: int, vt: int):
    """Boundary vertices of the corridor disk split into (left, right) chains.

    The boundary is walked with the corridor on the right; the stretch from
    p_s to p_t is on the left of any arc p_s -> p_t inside the corridor.
    """
    face_of, _ = m.faces()
    bd = [d for d in m.darts() if face_of[d] in corridor and face_of[m.twin[d]] not in corridor]
    if not bd:
        return None
    start = next((d for d in bd if m.org[d] == vs), None)
    if start is None:
        return None
    walk = []
    d = start
    for _ in range(len(bd) + 1):
        walk.append(m.org[d])
        e = m.nxt[m.twin[d]]
        while face_of[m.twin[e]] in corridor:
            e = m.nxt[e]
        d = e
        if d == start:
            break
    else:
        return None
    if len(walk) != len(bd) or vt not in walk:
        return None
    k = walk.index(vt)
    return walk[1:k], walk[k + 1:]


def _forest_barrier(cfg, router: _Router, spec: CorridorSpec, sigma: int):
    """Edges tying every corridor point to the boundary chain on its side.

    A route avoiding these edges (and the forbidden curves) leaves every
    point of the corridor on the side prescribed by chi and ``sigma``.
    Returns None when the greedy forest cannot be grown.
    """
    if not spec.pencil or spec.role[1] not in cfg.point_vertex:
        return None
    m = cfg.map
    s, t, _ = spec.role
    vs, vt = cfg.point_vertex[s], cfg.point_vertex[t]
    C = spec.allowed_faces
    chains = _corridor_chains(m, C, vs, vt)
    if chains is None:
        return None
    left_chain, right_chain = chains
    if set(left_chain) & set(right_chain):
        return None
    face_of, _ = m.faces()
    elem = {v: e for e, v in cfg.point_vertex.items() if e not in router.lam}
    want = {v: router.chi(*router.lam, e) * sigma for v, e in elem.items()}
    for v in left_chain:
        if want.get(v, 1) != 1:
            return None
    for v in right_chain:
        if want.get(v, -1) != -1:
            return None
    interior = set()
    for d in m.darts():
        if face_of[d] in C and face_of[m.twin[d]] in C:
            interior.add(d)
    inner_vertices = {m.org[d] for d in interior} - set(left_chain) - set(right_chain) - {vs, vt}
    blocked = set(spec.forbidden) | {router.cid}
    need_left = [v for v in inner_vertices if want.get(v) == 1]
    need_right = [v for v in inner_vertices if want.get(v) == -1]

    def grow(sources, targets, banned):
        dist = {v: 0 for v in sources}
        parent = {}
        dq = deque(sources)
        while dq:
            v = dq.popleft()
            for d in m.rotation(v):
                if d not in interior:
                    continue
                w = m.head(d)
                if w in banned or w in (vs, vt):
                    continue
                c = 0 if m.curve[d] in blocked else 1
                nd = dist[v] + c
                if nd < dist.get(w, 1 << 30):
                    dist[w] = nd
                    parent[w] = d
                    if c:
                        dq.append(w)
                    else:
                        dq.appendleft(w)
        used_v, used_d = set(), set()
        for v in targets:
            if v not in dist:
                return None
            while v in parent and v not in used_v:
                used_v.add(v)
                d = parent[v]
                used_d.add(d)
                used_d.add(m.twin[d])
                v = m.org[d]
        return used_v, used_d

    left = grow(left_chain, need_left, set(need_right) | set(right_chain))
    if left is None:
        return None
    right = grow(right_chain, need_right, set(need_left) | set(left_chain) | left[0])
    if right is None:
        return None
    return frozenset(left[1] | right[1])


def _candidates(cfg, router: _Router, spec: CorridorSpec):
    sigmas = [router.sigma[0]] if router.sigma[0] is not None else [1, -1]
    for sg in sigmas:
        bar = _forest_barrier(cfg, router, spec, sg)
        if bar is not None:
            yield from router.arc_paths(cfg, spec, bar)
    yield from router.arc_paths(cfg, spec)


def _solve(cfg, router, roles, k, tags, first, pre_floats):
    if k == 3:
        cfg.curves[router.lam] = router.cid
        cfg.triples_by_id[router.cid] = router.lam
        if _close(cfg, router, first, tags, pre_floats):
            return cfg
        del cfg.curves[router.lam]
        del cfg.triples_by_id[router.cid]
        return None
    spec = select_corridor(cfg, router.lam, roles[k])
    for path in _candidates(cfg, router, spec):
        nxt = cfg.copy()
        ntags = dict(tags)
        a = router.commit(nxt, spec, path, ntags)
        sigma = _arc_sides(nxt, router, spec, a)
        if sigma is False:
            continue
        saved = router.sigma[0]
        if sigma is not None:
            router.sigma[0] = sigma
        try:
            res = _solve(nxt, router, roles, k + 1, ntags, a if first is None else first, pre_floats)
        finally:
            router.sigma[0] = saved
        if res is not None:
            return res
    return None


def build_ppc(chi: Chirotope, *, budget: int = DEFAULT_BUDGET, check: bool = True,
              check_polytope: bool = True) -> PPCConfiguration:
    cfg = init_configuration(chi, check_polytope=check_polytope)
    for lam in itertools.combinations(chi.elements, 3):
        cfg = insert_curve(cfg, lam, budget=budget, check=check)
    return cfg
