"""Exact geometric predicates on points with Q(sqrt 3) coordinates.

Every test here decides with q3_sign on exact quantities; there is no
epsilon anywhere.  Polygons are simple and counterclockwise unless noted.
"""

from __future__ import annotations

from functools import lru_cache
from math import isqrt

from ..numerics import Point2, Q3Scalar, Q3_ZERO


def vsub(p: Point2, q: Point2) -> tuple[Q3Scalar, Q3Scalar]:
    return (p.x - q.x, p.y - q.y)


def cross(ux: Q3Scalar, uy: Q3Scalar, vx: Q3Scalar, vy: Q3Scalar) -> Q3Scalar:
    return ux * vy - uy * vx

def dot(ux: Q3Scalar, uy: Q3Scalar, vx: Q3Scalar, vy: Q3Scalar) -> Q3Scalar:
    return ux * vx + uy * vy


def orient(o: Point2, a: Point2, b: Point2) -> int:
    """+1 when o->a->b turns left, -1 right, 0 collinear."""
    ux, uy = a.x - o.x, a.y - o.y
    vx, vy = b.x - o.x, b.y - o.y
    return cross(ux, uy, vx, vy).sign()


def on_segment(p: Point2, a: Point2, b: Point2) -> bool:
    """p lies on the closed segment ab."""
    if orient(a, b, p) != 0:
        return False
    ux, uy = vsub(b, a)
    wx, wy = vsub(p, a)
    t = dot(ux, uy, wx, wy)
    if t.sign() < 0:
        return False
    return (dot(ux, uy, ux, uy) - t).sign() >= 0


def strictly_inside_segment(p: Point2, a: Point2, b: Point2) -> bool:
    return on_segment(p, a, b) and p != a and p != b


def segments_properly_cross(a: Point2, b: Point2, c: Point2, d: Point2) -> bool:
    """The open segments ab and cd intersect in exactly one interior point."""
    o1 = orient(a, b, c)
    o2 = orient(a, b, d)
    o3 = orient(c, d, a)
    o4 = orient(c, d, b)
    return o1 * o2 < 0 and o3 * o4 < 0


def midpoint(a: Point2, b: Point2) -> Point2:
    half = Q3Scalar(1) / 2
    return Point2((a.x + b.x) * half, (a.y + b.y) * half)


def polygon_area2(pts) -> Q3Scalar:
    """Twice the signed area (positive for counterclockwise order)."""
    acc = Q3_ZERO
    n = len(pts)
    for i in range(n):
        p = pts[i]
        q = pts[(i + 1) % n]
        acc = acc + (p.x * q.y - q.x * p.y)
    return acc


def point_in_polygon(p: Point2, pts) -> int:
    """+1 strictly inside, 0 on the boundary, -1 strictly outside."""
    n = len(pts)
    for i in range(n):
        if on_segment(p, pts[i], pts[(i + 1) % n]):
            return 0
    # exact crossing parity for a ray to +x; the half-open rule on y makes
    # vertex incidences unambiguous
    inside = False
    for i in range(n):
        a = pts[i]
        b = pts[(i + 1) % n]
        a_above = (a.y - p.y).sign() > 0
        b_above = (b.y - p.y).sign() > 0
        if a_above == b_above:
            continue
        # x coordinate where edge crosses the horizontal through p
        tnum = p.y - a.y
        tden = b.y - a.y
        xc = a.x + (b.x - a.x) * (tnum / tden)
        if (xc - p.x).sign() > 0:
            inside = not inside
    return 1 if inside else -1


def triangle_strictly_contains(p: Point2, t0: Point2, t1: Point2, t2: Point2) -> bool:
    """p lies in the open triangle t0 t1 t2 (counterclockwise)."""
    return (orient(t0, t1, p) > 0 and orient(t1, t2, p) > 0
            and orient(t2, t0, p) > 0)


def centroid(t0: Point2, t1: Point2, t2: Point2) -> Point2:
    third = Q3Scalar(1) / 3
    return Point2((t0.x + t1.x + t2.x) * third, (t0.y + t1.y + t2.y) * third)


def segment_length_int(a: Point2, b: Point2) -> int:
    """Exact integer length of ab; raises if the squared length is not a
    perfect integer square (frontier edges always are)."""
    ux, uy = vsub(b, a)
    d2 = dot(ux, uy, ux, uy)
    if d2.coef3 != 0 or d2.rat.denominator != 1:
        raise ValueError(f"edge length squared is not an integer: {d2!r}")
    n2 = d2.rat.numerator
    n = isqrt(n2)
    if n * n != n2:
        raise ValueError(f"edge length is not an integer: sqrt({n2})")
    return n


# --- integer-scaled predicate layer ---
#
# Orientation, incidence, and containment signs are invariant under scaling
# every coordinate by one positive integer.  Clearing denominators once per
# query lets the hot predicates run on plain int tuples
# (px, qx, py, qy) meaning (px + qx*sqrt3, py + qy*sqrt3), with no
# normalization or object churn.  Exactness is unchanged.

IPoint = tuple[int, int, int, int]


def _lcm(a: int, b: int) -> int:
    from math import gcd

    return a // gcd(a, b) * b


@lru_cache(maxsize=1 << 18)
def line_key(a: Point2, b: Point2):
    """Canonical key of the line through a and b (leading coefficient 1).

    Two segments are collinear exactly when their keys match, which lets
    edge overlap detection probe only same-line pairs.  Cached: frontier
    edges persist across search nodes.
    """
    c0 = b.y - a.y
    c1 = a.x - b.x
    c2 = c0 * a.x + c1 * a.y
    div = c1 if c0.is_zero() else c0
    return ((c0 / div).key(), (c1 / div).key(), (c2 / div).key())


def iscale(points) -> list[IPoint]:
    """Clear denominators across all points with one common positive factor."""
    return iscale_tagged(points)[1]


def iscale_tagged(points) -> tuple[int, list[IPoint]]:
    """Like iscale, also returning the factor so callers can combine sets."""
    scale = 1
    for p in points:
        scale = _lcm(scale, p.x.r)
        scale = _lcm(scale, p.y.r)
    out = []
    for p in points:
        mx = scale // p.x.r
        my = scale // p.y.r
        out.append((p.x.p * mx, p.x.q * mx, p.y.p * my, p.y.q * my))
    return scale, out


def _isign(p: int, q: int) -> int:
    """Sign of p + q*sqrt3 on bare integers."""
    if q == 0:
        return 0 if p == 0 else (1 if p > 0 else -1)
    if p == 0:
        return 1 if q > 0 else -1
    if p > 0:
        if q > 0:
            return 1
        return 1 if p * p > 3 * q * q else -1
    if q < 0:
        return -1
    return -1 if p * p > 3 * q * q else 1


def iorient(o: IPoint, a: IPoint, b: IPoint) -> int:
    ux, uqx, uy, uqy = a[0] - o[0], a[1] - o[1], a[2] - o[2], a[3] - o[3]
    vx, vqx, vy, vqy = b[0] - o[0], b[1] - o[1], b[2] - o[2], b[3] - o[3]
    cp = ux * vy + 3 * uqx * vqy - uy * vx - 3 * uqy * vqx
    cq = ux * vqy + uqx * vy - uy * vqx - uqy * vx
    return _isign(cp, cq)


def _idot_sign(ax, aqx, ay, aqy, bx, bqx, by, bqy) -> int:
    dp = ax * bx + 3 * aqx * bqx + ay * by + 3 * aqy * bqy
    dq = ax * bqx + aqx * bx + ay * bqy + aqy * by
    return _isign(dp, dq)


def ion_segment(p: IPoint, a: IPoint, b: IPoint) -> bool:
    if iorient(a, b, p) != 0:
        return False
    abx, abqx, aby, abqy = b[0] - a[0], b[1] - a[1], b[2] - a[2], b[3] - a[3]
    apx, apqx, apy, apqy = p[0] - a[0], p[1] - a[1], p[2] - a[2], p[3] - a[3]
    if _idot_sign(abx, abqx, aby, abqy, apx, apqx, apy, apqy) < 0:
        return False
    bpx, bpqx, bpy, bpqy = p[0] - b[0], p[1] - b[1], p[2] - b[2], p[3] - b[3]
    return _idot_sign(-abx, -abqx, -aby, -abqy, bpx, bpqx, bpy, bpqy) >= 0


def iproper_cross(a: IPoint, b: IPoint, c: IPoint, d: IPoint) -> bool:
    o1 = iorient(a, b, c)
    o2 = iorient(a, b, d)
    if o1 * o2 >= 0:
        return False
    o3 = iorient(c, d, a)
    o4 = iorient(c, d, b)
    return o3 * o4 < 0


def itriangle_strictly_contains(p: IPoint, t0: IPoint, t1: IPoint,
                                t2: IPoint) -> bool:
    return (iorient(t0, t1, p) > 0 and iorient(t1, t2, p) > 0
            and iorient(t2, t0, p) > 0)


def ipoint_in_polygon(p: IPoint, poly: list[IPoint]) -> int:
    """+1 strictly inside, 0 on boundary, -1 outside, on scaled integers."""
    n = len(poly)
    for i in range(n):
        if ion_segment(p, poly[i], poly[(i + 1) % n]):
            return 0
    inside = False
    py, pqy = p[2], p[3]
    for i in range(n):
        a = poly[i]
        b = poly[(i + 1) % n]
        a_above = _isign(a[2] - py, a[3] - pqy) > 0
        b_above = _isign(b[2] - py, b[3] - pqy) > 0
        if a_above == b_above:
            continue
        o = iorient(a, b, p)
        # upward edge crosses right of p iff p is strictly left, and the
        # mirror statement for downward edges
        if (b_above and o > 0) or (a_above and o < 0):
            inside = not inside
    return 1 if inside else -1


def imul2(x: IPoint, k: int) -> IPoint:
    return (x[0] * k, x[1] * k, x[2] * k, x[3] * k)


def iadd(x: IPoint, y: IPoint) -> IPoint:
    return (x[0] + y[0], x[1] + y[1], x[2] + y[2], x[3] + y[3])


def direction_cmp_key(ref: tuple[Q3Scalar, Q3Scalar]):
    """Key ordering directions by counterclockwise angle from ``ref``.

    Returns a function mapping a direction to a sortable token: primary is
    the sector (0 for parallel-to-ref, then increasing CCW), ties inside an
    open halfplane broken by exact cross products via cmp_to_key downstream.
    """
    rx, ry = ref

    def sector(d: tuple[Q3Scalar, Q3Scalar]) -> int:
        dx, dy = d
        cr = cross(rx, ry, dx, dy).sign()
        dt = dot(rx, ry, dx, dy).sign()
        if cr == 0:
            return 0 if dt > 0 else 2
        return 1 if cr > 0 else 3

    return sector


def ccw_angle_less(ref, d1, d2) -> bool:
    """Whether the CCW angle from ref to d1 is less than from ref to d2.

    Directions parallel to ref count as angle 0 (smallest).
    """
    sec = direction_cmp_key(ref)
    s1, s2 = sec(d1), sec(d2)
    if s1 != s2:
        return s1 < s2
    if s1 in (0, 2):
        return False  # equal angles
    return cross(d1[0], d1[1], d2[0], d2[1]).sign() > 0
