"""Combinatorial maps on the sphere (rotation systems with curve-labelled edges).

A dart is a directed half-edge.  ``nxt[d]`` is the next dart counter-clockwise
around ``org[d]``.  The face of a dart is the face on its right; tracing a
face goes ``d -> nxt[twin[d]]``.  The corner *before* a dart ``g`` (between
``prv[g]`` and ``g``) lies in ``face(g)``.
"""
from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Vertex:
    kind: str  # "point" or "cross"
    payload: object  # element for points, sorted curve-id pair for crossings

    def as_list(self):
        p = self.payload
        return [self.kind, list(p) if isinstance(p, tuple) else p]


class CombinatorialMap:
    def __init__(self):
        self.twin: list[int] = []
        self.org: list[int] = []
        self.nxt: list[int] = []
        self.prv: list[int] = []
        self.curve: list[int] = []
        self.dart_alive: list[bool] = []
        self.vertices: list[Vertex] = []
        self.vertex_alive: list[bool] = []
        self.out: list[int] = []  # some dart leaving each vertex, -1 if isolated
        self._faces = None

    # ----------------------------------------------------------------- basics
    def copy(self) -> "CombinatorialMap":
        m = CombinatorialMap.__new__(CombinatorialMap)
        for name in ("twin", "org", "nxt", "prv", "curve", "dart_alive", "vertices",
                     "vertex_alive", "out"):
            setattr(m, name, list(getattr(self, name)))
        m._faces = self._faces
        return m

    def touch(self):
        self._faces = None

    def darts(self):
        return [d for d, a in enumerate(self.dart_alive) if a]

    def vertex_ids(self):
        return [v for v, a in enumerate(self.vertex_alive) if a]

    def add_vertex(self, kind: str, payload) -> int:
        self.vertices.append(Vertex(kind, payload))
        self.vertex_alive.append(True)
        self.out.append(-1)
        return len(self.vertices) - 1

    def _new_dart(self, v: int, c: int) -> int:
        d = len(self.twin)
        self.twin.append(-1)
        self.org.append(v)
        self.nxt.append(d)
        self.prv.append(d)
        self.curve.append(c)
        self.dart_alive.append(True)
        return d

    def _insert_before(self, d: int, g: int | None):
        """Put dart d into the rotation of its origin, just clockwise of g."""
        v = self.org[d]
        if g is None:
            if self.out[v] != -1:
                raise ValueError("vertex already has darts; a corner is required")
            self.nxt[d] = self.prv[d] = d
            self.out[v] = d
            return
        p = self.prv[g]
        self.nxt[p] = d
        self.prv[d] = p
        self.nxt[d] = g
        self.prv[g] = d

    def add_edge(self, u: int, gu: int | None, v: int, gv: int | None, c: int) -> int:
        """New edge u -> v on curve c, placed in the corners before gu and gv.

        Returns the dart leaving u.
        """
        a = self._new_dart(u, c)
        b = self._new_dart(v, c)
        self.twin[a] = b
        self.twin[b] = a
        self._insert_before(a, gu)
        self._insert_before(b, gv)
        self.touch()
        return a

    def split_edge(self, d: int, x: int) -> tuple[int, int]:
        """Subdivide the edge of d (u -> v) by the new vertex x.

        d keeps running u -> x; the old twin t now runs v -> x.  Returns the
        two new darts (x -> u, x -> v).  Right faces are preserved.
        """
        t = self.twin[d]
        c = self.curve[d]
        xu = self._new_dart(x, c)
        xv = self._new_dart(x, c)
        self.twin[d] = xu
        self.twin[xu] = d
        self.twin[t] = xv
        self.twin[xv] = t
        self.out[x] = xu
        self.nxt[xu] = xv
        self.prv[xu] = xv
        self.nxt[xv] = xu
        self.prv[xv] = xu
        self.touch()
        return xu, xv

    def remove_vertex_darts(self, v: int):
        for d in self.rotation(v):
            self.dart_alive[d] = False
        self.vertex_alive[v] = False
        self.out[v] = -1
        self.touch()

    def rotation(self, v: int) -> list[int]:
        d0 = self.out[v]
        if d0 == -1:
            return []
        out = [d0]
        d = self.nxt[d0]
        while d != d0:
            out.append(d)
            d = self.nxt[d]
        return out

    def degree(self, v: int) -> int:
        return len(self.rotation(v))

    def head(self, d: int) -> int:
        return self.org[self.twin[d]]

    # ------------------------------------------------------------------ faces
    def face_step(self, d: int) -> int:
        return self.nxt[self.twin[d]]

    def faces(self):
        """(face_of dict, list of boundary dart cycles).  Cached until modified."""
        if self._faces is None:
            face_of = {}
            cycles = []
            for d in self.darts():
                if d in face_of:
                    continue
                fid = len(cycles)
                cyc = []
                e = d
                while e not in face_of:
                    face_of[e] = fid
                    cyc.append(e)
                    e = self.face_step(e)
                cycles.append(cyc)
            self._faces = (face_of, cycles)
        return self._faces

    def face_of(self, d: int) -> int:
        return self.faces()[0][d]

    def n_faces(self) -> int:
        cyc = self.faces()[1]
        return len(cyc) if cyc else 1

    def counts(self):
        """(V, E, F, components) ignoring isolated vertices."""
        vs = [v for v in self.vertex_ids() if self.out[v] != -1]
        E = len(self.darts()) // 2
        F = self.n_faces()
        # components by union-find over edges
        parent = {v: v for v in vs}

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for d in self.darts():
            a, b = find(self.org[d]), find(self.head(d))
            if a != b:
                parent[a] = b
        comps = len({find(v) for v in vs})
        return len(vs), E, F, comps

    def euler_ok(self) -> bool:
        V, E, F, C = self.counts()
        if V == 0:
            return F == 1
        return V - E + F == 1 + C

    # -------------------------------------------------------------- serialize
    def export(self):
        """(plain dict, dart renumbering, vertex renumbering)."""
        live = self.darts()
        vids = self.vertex_ids()
        dmap = {d: i for i, d in enumerate(live)}
        vmap = {v: i for i, v in enumerate(vids)}
        return {
            "vertices": [self.vertices[v].as_list() for v in vids],
            "darts": [
                {"id": dmap[d], "twin": dmap[self.twin[d]], "next": dmap[self.nxt[d]],
                 "origin": vmap[self.org[d]], "curve": self.curve[d]}
                for d in live
            ],
        }, dmap, vmap

    @classmethod
    def from_dict(cls, data: dict) -> "CombinatorialMap":
        m = cls()
        for kind, payload in data["vertices"]:
            m.add_vertex(kind, tuple(payload) if isinstance(payload, list) else payload)
        darts = sorted(data["darts"], key=lambda r: r["id"])
        if [r["id"] for r in darts] != list(range(len(darts))):
            raise ValueError("dart ids must be 0..k-1")
        for r in darts:
            m.twin.append(r["twin"])
            m.org.append(r["origin"])
            m.nxt.append(r["next"])
            m.prv.append(-1)
            m.curve.append(r["curve"])
            m.dart_alive.append(True)
        for d, r in enumerate(darts):
            m.prv[r["next"]] = d
            if m.out[r["origin"]] == -1:
                m.out[r["origin"]] = d
        for d in range(len(darts)):
            if m.twin[m.twin[d]] != d or m.prv[d] == -1:
                raise ValueError("inconsistent dart structure")
        return m

    def remove_edge(self, d: int):
        """Unlink the edge of d from both rotations and drop its darts."""
        for a in (d, self.twin[d]):
            v = self.org[a]
            if self.nxt[a] == a:
                self.out[v] = -1
            else:
                p, n = self.prv[a], self.nxt[a]
                self.nxt[p] = n
                self.prv[n] = p
                if self.out[v] == a:
                    self.out[v] = n
            self.dart_alive[a] = False
        self.touch()
