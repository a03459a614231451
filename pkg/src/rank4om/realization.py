"""Point configurations in R^3: exact chirotopes, generators and the circle picture.

Everything that decides a sign uses exact rational arithmetic.  The circle
picture stores floating-point centres and radii for drawing only.
"""
from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Sequence

from .errors import DegeneracyError, OMError, RetryLimitExceeded
from .signs import Chirotope


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class PointConfig:
    points: tuple

    def __init__(self, points):
        pts = tuple(tuple(_frac(c) for c in p) for p in points)
        if any(len(p) != 3 for p in pts):
            raise OMError("points must have three coordinates")
        object.__setattr__(self, "points", pts)

    @property
    def n(self) -> int:
        return len(self.points)

    def point(self, e: int):
        return self.points[e - 1]


def int_det(m: list[list[int]]) -> int:
    """Fraction-free (Bareiss) determinant of a square integer matrix."""
    a = [row[:] for row in m]
    n = len(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def orientation(*pts) -> int:
    """Sign of det[(p, 1) for p in pts] for four points in R^3."""
    rows = []
    for p in pts:
        row = [_frac(c) for c in p] + [Fraction(1)]
        scale = lcm(*(c.denominator for c in row))
        rows.append([int(c * scale) for c in row])
    d = int_det(rows)
    return (d > 0) - (d < 0)


def chirotope_from_points(P: PointConfig, *, normalize: bool = True) -> Chirotope:
    """Orientation signs of all sorted 4-tuples.

    With ``normalize`` the global sign is fixed so that chi(1,2,3,4) = +1.
    """
    P = P if isinstance(P, PointConfig) else PointConfig(P)
    if P.n < 4:
        raise OMError("need at least four points")
    elements = tuple(range(1, P.n + 1))
    vals = []
    for b in itertools.combinations(elements, 4):
        s = orientation(*(P.point(e) for e in b))
        if s == 0:
            raise DegeneracyError(f"points {b} are coplanar", witness=b)
        vals.append(s)
    chi = Chirotope(elements, 4, vals)
    return chi.normalized() if normalize else chi


def cyclic_points(n: int) -> PointConfig:
    """Points (t, t^2, t^3) on the moment curve for t = 1..n."""
    return PointConfig([(t, t * t, t ** 3) for t in range(1, n + 1)])


def bipyramid_points() -> PointConfig:
    third = Fraction(1, 3)
    return PointConfig([(third, third, 1), (0, 0, 0), (1, 0, 0), (0, 1, 0), (third, third, -1)])


def simplex_points() -> PointConfig:
    return PointConfig([(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)])


def interior_point_example() -> PointConfig:
    """Simplex plus a point strictly inside it."""
    q = Fraction(1, 4)
    return PointConfig([(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1), (q, q, q)])


def sphere_point(a: Fraction, b: Fraction):
    """Rational point on the unit sphere: inverse stereographic image of (a, b)."""
    d = a * a + b * b + 1
    return (2 * a / d, 2 * b / d, (a * a + b * b - 1) / d)


def _general_position_with(points, p) -> bool:
    for tri in itertools.combinations(points, 3):
        if orientation(*tri, p) == 0:
            return False
    return True


def random_realizable(n: int, seed: int, *, mode: str = "convex", max_tries: int = 1000,
                      denominator: int = 16) -> PointConfig:
    """Seeded rational configuration.

    ``convex`` puts every point exactly on the unit sphere, so all points are
    extreme.  ``interior`` replaces the last point by a strict convex
    combination of four sphere points.  Points breaking general position are
    resampled.
    """
    if n < 4:
        raise OMError("need at least four points")
    if mode not in ("convex", "interior"):
        raise OMError(f"unknown mode {mode!r}")
    rng = random.Random(seed)
    pts: list = []
    tries = 0
    n_sphere = n if mode == "convex" else n - 1
    while len(pts) < n_sphere:
        tries += 1
        if tries > max_tries:
            raise RetryLimitExceeded("could not sample a configuration in general position")
        a = Fraction(rng.randint(-4 * denominator, 4 * denominator), denominator)
        b = Fraction(rng.randint(-4 * denominator, 4 * denominator), denominator)
        p = sphere_point(a, b)
        if p in pts or not _general_position_with(pts, p):
            continue
        pts.append(p)
    if mode == "interior":
        while True:
            tries += 1
            if tries > max_tries:
                raise RetryLimitExceeded("could not place an interior point")
            base = rng.sample(pts, 4)
            w = [Fraction(rng.randint(1, 8)) for _ in range(4)]
            tot = sum(w)
            p = tuple(sum(wi * q[k] for wi, q in zip(w, base)) / tot for k in range(3))
            if _general_position_with(pts, p):
                pts.append(p)
                break
    return PointConfig(pts)


# --------------------------------------------------------------------------
# circle picture


@dataclass
class CirclePicture:
    """Planar drawing: projected points and one circle per triple.

    ``circles[triple] = (cx, cy, r, flag)`` where ``flag`` is the chirotope
    sign carried by points outside the circle.  Coordinates are floats.
    """

    positions: dict
    circles: dict
    inscribed: bool
    pole: tuple
    mismatches: list = field(default_factory=list)

    def drawn_side(self, triple, e) -> int:
        cx, cy, r, flag = self.circles[tuple(sorted(triple))]
        x, y = self.positions[e]
        d = math.hypot(x - cx, y - cy)
        return flag if d > r else -flag


def _circumsphere(p0, p1, p2, p3):
    """Exact centre and squared radius of the sphere through four points."""
    rows = []
    rhs = []
    for q in (p1, p2, p3):
        rows.append([2 * (q[k] - p0[k]) for k in range(3)])
        rhs.append(sum(q[k] ** 2 - p0[k] ** 2 for k in range(3)))
    # Cramer's rule over Fractions
    def det3(m):
        return (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
                - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
                + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))
    D = det3(rows)
    if D == 0:
        return None
    centre = []
    for k in range(3):
        m = [row[:] for row in rows]
        for i in range(3):
            m[i][k] = rhs[i]
        centre.append(det3(m) / D)
    r2 = sum((p0[k] - centre[k]) ** 2 for k in range(3))
    return tuple(centre), r2


_POLE_CANDIDATES = [(Fraction(a), Fraction(b)) for a, b in itertools.product(
    [Fraction(k, 7) for k in range(-21, 22, 3)], repeat=2)]


def circle_picture(P: PointConfig, *, budget: int = 400) -> tuple[CirclePicture, Chirotope]:
    """Stereographic circle picture of a realizable configuration.

    Points inscribed in a sphere are used directly; otherwise each point is
    pushed radially from the centroid onto the unit sphere around it, which
    is only a display device.  The pole is the first rational candidate lying
    on none of the planes through three (sphere) points, tested exactly in
    the inscribed case.
    """
    P = P if isinstance(P, PointConfig) else PointConfig(P)
    chi = chirotope_from_points(P)
    pts = P.points
    sphere = _circumsphere(*pts[:4])
    inscribed = sphere is not None and all(
        sum((p[k] - sphere[0][k]) ** 2 for k in range(3)) == sphere[1] for p in pts)
    if inscribed:
        centre, r2 = sphere
        fpts = [tuple(float(c) for c in p) for p in pts]
    else:
        centre = tuple(sum(p[k] for p in pts) / len(pts) for k in range(3))
        r2 = Fraction(1)
        fpts = []
        for p in pts:
            v = [float(p[k] - centre[k]) for k in range(3)]
            norm = math.sqrt(sum(c * c for c in v))
            fpts.append(tuple(float(centre[k]) + v[k] / norm for k in range(3)))

    planes = []
    for i, j, k in itertools.combinations(range(len(pts)), 3):
        if inscribed:
            a, b, c = pts[i], pts[j], pts[k]
        else:
            a, b, c = (tuple(Fraction(x) for x in fpts[t]) for t in (i, j, k))
        u = [b[t] - a[t] for t in range(3)]
        v = [c[t] - a[t] for t in range(3)]
        nrm = (u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0])
        planes.append((nrm, sum(nrm[t] * a[t] for t in range(3))))

    pole = None
    for cand in _POLE_CANDIDATES[:budget]:
        u = sphere_point(*cand)  # rational unit vector
        ok = True
        for nrm, off in planes:
            # pole = centre + R u lies on the plane iff R (n.u) = off - n.centre
            nu = sum(nrm[t] * u[t] for t in range(3))
            rhs = off - sum(nrm[t] * centre[t] for t in range(3))
            if nu == 0:
                if rhs == 0:
                    ok = False
                    break
                continue
            if (nu > 0) == (rhs > 0) and r2 * nu * nu == rhs * rhs:
                ok = False
                break
        if ok:
            pole = u
            break
    if pole is None:
        raise RetryLimitExceeded("no projection pole off all circumscribing planes")

    R = math.sqrt(float(r2))
    c = [float(x) for x in centre]
    nvec = [float(x) for x in pole]
    # orthonormal frame (e1, e2) perpendicular to the pole direction
    helper = [1.0, 0.0, 0.0] if abs(nvec[0]) < 0.9 else [0.0, 1.0, 0.0]
    dot = sum(h * x for h, x in zip(helper, nvec))
    e1 = [h - dot * x for h, x in zip(helper, nvec)]
    l1 = math.sqrt(sum(x * x for x in e1))
    e1 = [x / l1 for x in e1]
    e2 = [nvec[1] * e1[2] - nvec[2] * e1[1], nvec[2] * e1[0] - nvec[0] * e1[2], nvec[0] * e1[1] - nvec[1] * e1[0]]

    def project(p):
        w = [(p[k] - c[k]) / R for k in range(3)]
        t = sum(w[k] * nvec[k] for k in range(3))
        x = sum(w[k] * e1[k] for k in range(3)) / (1 - t)
        y = sum(w[k] * e2[k] for k in range(3)) / (1 - t)
        return (x, y)

    positions = {e: project(fpts[e - 1]) for e in range(1, P.n + 1)}
    circles = {}
    mismatches = []
    for tri in itertools.combinations(range(1, P.n + 1), 3):
        (x1, y1), (x2, y2), (x3, y3) = (positions[e] for e in tri)
        d = 2 * (x1 * (y2 - y3) + x2 * (y3 - y1) + x3 * (y1 - y2))
        ux = ((x1 ** 2 + y1 ** 2) * (y2 - y3) + (x2 ** 2 + y2 ** 2) * (y3 - y1) + (x3 ** 2 + y3 ** 2) * (y1 - y2)) / d
        uy = ((x1 ** 2 + y1 ** 2) * (x3 - x2) + (x2 ** 2 + y2 ** 2) * (x1 - x3) + (x3 ** 2 + y3 ** 2) * (x2 - x1)) / d
        r = math.hypot(x1 - ux, y1 - uy)
        others = [e for e in range(1, P.n + 1) if e not in tri]
        flag = 1
        if others:
            e0 = others[0]
            outside = math.hypot(positions[e0][0] - ux, positions[e0][1] - uy) > r
            flag = chi(*tri, e0) if outside else -chi(*tri, e0)
        circles[tri] = (ux, uy, r, flag)
        for e in others:
            outside = math.hypot(positions[e][0] - ux, positions[e][1] - uy) > r
            if (flag if outside else -flag) != chi(*tri, e):
                mismatches.append((tri, e))
    return CirclePicture(positions, circles, inscribed, tuple(float(x) for x in pole), mismatches), chi


def side_predicates(P: PointConfig) -> dict:
    """Exact side of every point with respect to every triple's plane."""
    P = P if isinstance(P, PointConfig) else PointConfig(P)
    out = {}
    for tri in itertools.combinations(range(1, P.n + 1), 3):
        for e in range(1, P.n + 1):
            if e not in tri:
                out[(tri, e)] = orientation(*(P.point(x) for x in tri), P.point(e))
    return out
