"""Regions, tile placements, and exact frontier surgery.

The frontier is the counterclockwise boundary of the yet-uncovered region;
each corner carries its exact AngleMeasure.  A placement puts one tile
vertex at a corner with one tile edge flush along the outgoing frontier
edge.  Applying a placement subtracts the tile by cancelling antiparallel
overlapping boundary segments and re-walking the leftover edges into one
or more closed faces, so corner consumption, pass-throughs at reflex
corners, collinear merges, and pocket splits all fall out of one routine.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..numerics import (
    ALPHA,
    BETA,
    GAMMA,
    AngleMeasure,
    Point2,
    Q3Scalar,
    Rotation,
    TrigContext,
    point,
)
from ..numtheory import Triple
from . import geometry as g


@dataclass(frozen=True)
class Region:
    """A simple counterclockwise polygon with exact corner measures.

    ``triple`` names the tile whose alpha/beta span the measures.
    """

    vertices: tuple[Point2, ...]
    corner_angles: tuple[AngleMeasure, ...]
    triple: Triple

    def area2(self) -> Q3Scalar:
        return g.polygon_area2(self.vertices)


@dataclass(frozen=True)
class PlacedTile:
    """One congruent copy of the tile; anchor is the 120-degree vertex.

    The other two vertices are anchor + R(a, 0) and
    anchor + R(-b/2, (b/2) sqrt3), R being the (possibly mirrored) rotation.
    """

    anchor: Point2
    rot: Rotation
    tile: Triple

    @property
    def mirrored(self) -> bool:
        return self.rot.mirrored

    def vertices(self) -> tuple[Point2, Point2, Point2]:
        """(gamma, beta, alpha) vertex positions."""
        t = self.tile
        bx, by = self.rot.apply(Q3Scalar(t.a), Q3Scalar(0))
        ax, ay = self.rot.apply(
            Q3Scalar(Fraction(-t.b, 2)), Q3Scalar(0, Fraction(t.b, 2))
        )
        return (
            self.anchor,
            Point2(self.anchor.x + bx, self.anchor.y + by),
            Point2(self.anchor.x + ax, self.anchor.y + ay),
        )

    def ccw_vertices(self) -> tuple[Point2, Point2, Point2]:
        gamma, beta, alpha = self.vertices()
        return (gamma, alpha, beta) if self.mirrored else (gamma, beta, alpha)

    def squared_sides(self) -> tuple:
        vs = self.vertices()
        out = []
        for i in range(3):
            ux, uy = g.vsub(vs[(i + 1) % 3], vs[i])
            out.append(g.dot(ux, uy, ux, uy))
        return tuple(out)


@dataclass(frozen=True)
class Frontier:
    """Boundary of the uncovered region plus the number of tiles still owed."""

    points: tuple[Point2, ...]
    measures: tuple[AngleMeasure, ...]
    remaining: int

    def select_corner(self, ctx: TrigContext) -> int:
        """Corner with the smallest angle value, ties broken by (x, y)."""
        best = 0
        for i in range(1, len(self.points)):
            c = ctx.compare_measures(self.measures[i], self.measures[best])
            if c > 0:
                continue
            if c < 0 or _point_less(self.points[i], self.points[best]):
                best = i
        return best

    def area2(self) -> Q3Scalar:
        return g.polygon_area2(self.points)


def _point_less(p: Point2, q: Point2) -> bool:
    s = (p.x - q.x).sign()
    if s != 0:
        return s < 0
    return (p.y - q.y).sign() < 0


def region_to_frontier(region: Region, n: int, ctx: TrigContext) -> Frontier:
    """Validates the region's measures against its exact geometry."""
    pts = region.vertices
    ms = region.corner_angles
    k = len(pts)
    for i in range(k):
        prev = pts[(i - 1) % k]
        nxt = pts[(i + 1) % k]
        rot = _corner_rotation(prev, pts[i], nxt)
        found = ctx.measure_from_rotation(rot.c, rot.s)
        if found != ms[i]:
            raise ValueError(
                f"corner {i} measure {ms[i]} does not match geometry ({found})"
            )
    return Frontier(points=tuple(pts), measures=tuple(ms), remaining=n)


def _corner_rotation(prev: Point2, v: Point2, nxt: Point2) -> Rotation:
    """Exact (cos, sin) of the interior angle at v (from out-ray to in-ray)."""
    ix, iy = g.vsub(v, prev)
    ox, oy = g.vsub(nxt, v)
    lin = g.segment_length_int(prev, v)
    lout = g.segment_length_int(v, nxt)
    inv_in = Q3Scalar(Fraction(1, lin))
    inv_out = Q3Scalar(Fraction(1, lout))
    # unit(out) rotated by the interior angle lands on -unit(in)
    ux, uy = ox * inv_out, oy * inv_out
    wx, wy = -(ix * inv_in), -(iy * inv_in)
    return Rotation(g.dot(ux, uy, wx, wy), g.cross(ux, uy, wx, wy))


def tile_area2(t: Triple) -> Q3Scalar:
    """Twice the tile area: a*b*sqrt(3)/2, exactly."""
    return Q3Scalar(0, Fraction(t.a * t.b, 2))


# (tile angle, mirrored) -> (vertex at the corner, vertex the flush edge
# points to).  The flush edge is the first one met sweeping counterclockwise
# from the frontier ray, so the mirrored variant uses the other edge.
_PLACEMENT_EDGES = {
    ("alpha", False): ("alpha", "gamma"),
    ("beta", False): ("beta", "alpha"),
    ("gamma", False): ("gamma", "beta"),
    ("alpha", True): ("alpha", "beta"),
    ("beta", True): ("beta", "gamma"),
    ("gamma", True): ("gamma", "alpha"),
}

_EDGE_LENGTH = {
    frozenset(("gamma", "beta")): "a",
    frozenset(("gamma", "alpha")): "b",
    frozenset(("alpha", "beta")): "c",
}

_ANGLE_MEASURES = {"alpha": ALPHA, "beta": BETA, "gamma": GAMMA}


def _canonical_vertices(t: Triple) -> dict[str, Point2]:
    return {
        "gamma": point(0, 0),
        "beta": point(t.a, 0),
        "alpha": Point2(Q3Scalar(Fraction(-t.b, 2)), Q3Scalar(0, Fraction(t.b, 2))),
    }


def make_placement(
    t: Triple,
    corner: Point2,
    ray: tuple[Q3Scalar, Q3Scalar],
    angle_name: str,
    mirrored: bool,
) -> PlacedTile:
    """Tile with its ``angle_name`` vertex at ``corner`` and the flush edge
    along the unit direction ``ray``; the tile opens counterclockwise."""
    verts = _canonical_vertices(t)
    v0n, v1n = _PLACEMENT_EDGES[(angle_name, mirrored)]
    v0, v1 = verts[v0n], verts[v1n]
    side = getattr(t, _EDGE_LENGTH[frozenset((v0n, v1n))])
    inv = Q3Scalar(Fraction(1, side))
    ex = (v1.x - v0.x) * inv
    ey = (v1.y - v0.y) * inv
    if mirrored:
        ey = -ey
    # rho = ray * conj(e): the rotation carrying the (reflected) canonical
    # edge direction onto the frontier ray
    rc = ray[0] * ex + ray[1] * ey
    rs = ray[1] * ex - ray[0] * ey
    sx = v0.x
    sy = -v0.y if mirrored else v0.y
    ax = rc * sx - rs * sy
    ay = rs * sx + rc * sy
    anchor = Point2(corner.x - ax, corner.y - ay)
    return PlacedTile(anchor=anchor, rot=Rotation(rc, rs, mirrored), tile=t)


def _fits(tri: tuple[Point2, Point2, Point2], pts,
          scaled_poly: tuple[int, list] | None = None) -> bool:
    """Exact test that the closed triangle lies inside the closed polygon.

    Runs on the integer-scaled predicate layer: one denominator clearing,
    then pure integer sign tests.  ``scaled_poly`` lets callers reuse the
    polygon scaling across several triangles.
    """
    n = len(pts)
    poly_scale, poly = scaled_poly if scaled_poly else g.iscale_tagged(pts)
    tri_scale, tri_i = g.iscale_tagged(tri)
    common = g._lcm(poly_scale, tri_scale)
    if common != poly_scale:
        mult = common // poly_scale
        poly = [g.imul2(p, mult) for p in poly]
    if common != tri_scale:
        mult = common // tri_scale
        tri_i = [g.imul2(p, mult) for p in tri_i]
    t0, t1, t2 = tri_i
    tri_edges = ((t0, t1), (t1, t2), (t2, t0))
    for i in range(n):
        a, b = poly[i], poly[(i + 1) % n]
        for u, v in tri_edges:
            if g.iproper_cross(u, v, a, b):
                return False
    # doubled coordinates keep midpoint tests integral
    tri2 = (g.imul2(t0, 2), g.imul2(t1, 2), g.imul2(t2, 2))
    for i in range(n):
        if g.itriangle_strictly_contains(poly[i], t0, t1, t2):
            return False
        # a boundary chord entering and leaving through triangle vertices
        # leaves its midpoint strictly inside
        mid2 = g.iadd(poly[i], poly[(i + 1) % n])
        if g.itriangle_strictly_contains(mid2, *tri2):
            return False
    for v in (t0, t1, t2):
        if g.ipoint_in_polygon(v, poly) < 0:
            return False
    centroid3 = g.iadd(g.iadd(t0, t1), t2)
    poly3 = [g.imul2(p, 3) for p in poly]
    return g.ipoint_in_polygon(centroid3, poly3) > 0


def placements_at_corner(
    front: Frontier,
    idx: int,
    t: Triple,
    ctx: TrigContext,
    allow_mirror: bool = True,
) -> list[PlacedTile]:
    """All tile placements at the corner, flush with its outgoing edge.

    Deterministic order: tile angle alpha, beta, gamma; unmirrored before
    mirrored.  Placements whose angle does not fit componentwise, or whose
    triangle leaves the frontier polygon, are dropped; duplicates (possible
    only for degenerate tiles) are removed.
    """
    corner = front.points[idx]
    measure = front.measures[idx]
    nxt = front.points[(idx + 1) % len(front.points)]
    length = g.segment_length_int(corner, nxt)
    inv = Q3Scalar(Fraction(1, length))
    ray = ((nxt.x - corner.x) * inv, (nxt.y - corner.y) * inv)
    scaled_poly = g.iscale_tagged(front.points)
    out: list[PlacedTile] = []
    seen = set()
    for angle_name in ("alpha", "beta", "gamma"):
        if not measure.covers(_ANGLE_MEASURES[angle_name]):
            continue
        for mirrored in (False, True):
            if mirrored and not allow_mirror:
                continue
            pl = make_placement(t, corner, ray, angle_name, mirrored)
            tri = pl.ccw_vertices()
            key = frozenset(p.key() for p in tri)
            if key in seen:
                continue
            if _fits(tri, front.points, scaled_poly):
                seen.add(key)
                out.append(pl)
    return out


def _cancel_pair(e1, e2):
    """Cancel the overlap of two antiparallel collinear directed segments.

    Returns the list of leftover directed segments, or None when the edges
    do not overlap in more than a point.  Overlap detection runs on scaled
    integers; exact cut points are built only when a cancellation happens.
    """
    a, b = e1
    c, d = e2
    ia, ib, ic, id_ = g.iscale((a, b, c, d))
    d1 = (ib[0] - ia[0], ib[1] - ia[1], ib[2] - ia[2], ib[3] - ia[3])
    d2 = (id_[0] - ic[0], id_[1] - ic[1], id_[2] - ic[2], id_[3] - ic[3])
    cp = d1[0] * d2[2] + 3 * d1[1] * d2[3] - d1[2] * d2[0] - 3 * d1[3] * d2[1]
    cq = d1[0] * d2[3] + d1[1] * d2[2] - d1[2] * d2[1] - d1[3] * d2[0]
    if g._isign(cp, cq) != 0:
        return None
    if g._idot_sign(*d1, *d2) >= 0:
        return None
    if g.iorient(ia, ib, ic) != 0:
        return None

    # parametrize the common line by dot(. - a, d1), as exact pairs
    def param(pt):
        wx, wqx, wy, wqy = (pt[0] - ia[0], pt[1] - ia[1],
                            pt[2] - ia[2], pt[3] - ia[3])
        return (d1[0] * wx + 3 * d1[1] * wqx + d1[2] * wy + 3 * d1[3] * wqy,
                d1[0] * wqx + d1[1] * wx + d1[2] * wqy + d1[3] * wy)

    t_b = param(ib)
    t_c = param(ic)
    t_d = param(id_)
    zero = (0, 0)

    def less(u, v):
        return g._isign(u[0] - v[0], u[1] - v[1]) < 0

    # the overlap bounds are always existing endpoints: max(0, t_d) is a or
    # d, min(t_b, t_c) is b or c, so no new coordinates are created
    if less(zero, t_d):
        lo, lo_pt = t_d, d
    else:
        lo, lo_pt = zero, a
    if less(t_c, t_b):
        hi, hi_pt = t_c, c
    else:
        hi, hi_pt = t_b, b
    if not less(lo, hi):
        return None
    leftovers = []
    if less(zero, lo):
        leftovers.append((a, lo_pt))
    if less(hi, t_b):
        leftovers.append((hi_pt, b))
    if less(hi, t_c):
        leftovers.append((c, hi_pt))
    if less(t_d, lo):
        leftovers.append((lo_pt, d))
    return leftovers


def _faces_from_edges(edges):
    """Link directed edges into closed faces, interior kept on the left.

    At a multi-way vertex the next edge is the unused outgoing edge with the
    largest counterclockwise angle from the reversed incoming direction;
    that choice splits touch points into separate simple faces.
    """
    outgoing: dict[tuple, list[int]] = {}
    for i, (a, b) in enumerate(edges):
        outgoing.setdefault(a.key(), []).append(i)
    used = [False] * len(edges)
    order = sorted(range(len(edges)),
                   key=lambda i: (edges[i][0].key(), edges[i][1].key()))
    faces = []
    for start in order:
        if used[start]:
            continue
        face_edges = []
        cur = start
        while True:
            used[cur] = True
            face_edges.append(cur)
            a, b = edges[cur]
            candidates = [j for j in outgoing.get(b.key(), ()) if not used[j]]
            if not candidates:
                break
            dinx, diny = g.vsub(b, a)
            ref = (-dinx, -diny)
            best = candidates[0]
            bx, by = g.vsub(edges[best][1], edges[best][0])
            for j in candidates[1:]:
                jx, jy = g.vsub(edges[j][1], edges[j][0])
                if g.ccw_angle_less(ref, (bx, by), (jx, jy)):
                    best = j
                    bx, by = jx, jy
            cur = best
        first = edges[face_edges[0]][0]
        last = edges[face_edges[-1]][1]
        if first != last:
            raise RuntimeError("frontier surgery produced an open chain")
        faces.append([edges[i][0] for i in face_edges])
    return faces


def apply_placement(
    front: Frontier,
    placed: PlacedTile,
    ctx: TrigContext,
    area2_tile: Q3Scalar,
):
    """Frontier(s) left after subtracting the placed tile.

    Returns the list of child frontiers (possibly empty when the tile
    finishes the region), or None when the result is pruned: a corner whose
    angle is not a nonnegative combination of tile angles, a pocket whose
    area is not an integer multiple of the tile area, or a convex-convex
    edge shorter than min(a, b).
    """
    tri = placed.ccw_vertices()
    pts = front.points
    n = len(pts)
    edges = [(pts[i], pts[(i + 1) % n]) for i in range(n)]
    t0, t1, t2 = tri
    edges += [(t0, t2), (t2, t1), (t1, t0)]  # tile boundary, clockwise

    # overlaps only happen between collinear edges, so probe same-line pairs
    changed = True
    while changed:
        changed = False
        groups: dict[tuple, list[int]] = {}
        for i, (a, b) in enumerate(edges):
            groups.setdefault(g.line_key(a, b), []).append(i)
        for members in groups.values():
            if len(members) < 2:
                continue
            for x in range(len(members)):
                for y in range(x + 1, len(members)):
                    i, j = members[x], members[y]
                    res = _cancel_pair(edges[i], edges[j])
                    if res is not None:
                        rest = [e for k, e in enumerate(edges)
                                if k not in (i, j)]
                        edges = rest + res
                        changed = True
                        break
                if changed:
                    break
            if changed:
                break

    if not edges:
        return [] if front.remaining == 1 else None

    faces = _faces_from_edges(edges)
    t = placed.tile
    min_edge = min(t.a, t.b)
    # corners whose neighborhood did not change keep their parent measure
    parent_measures = {}
    for i in range(n):
        parent_measures[
            (pts[(i - 1) % n].key(), pts[i].key(), pts[(i + 1) % n].key())
        ] = front.measures[i]
    children = []
    total = 0
    for face in faces:
        face = _merge_collinear(face)
        if len(face) < 3:
            raise RuntimeError("degenerate face after surgery")
        area2 = g.polygon_area2(face)
        if area2.sign() <= 0:
            raise RuntimeError("non-ccw face after surgery")
        ratio = area2 / area2_tile
        if ratio.coef3 != 0 or ratio.rat.denominator != 1:
            return None
        count = ratio.rat.numerator
        if count < 1:
            return None
        total += count
        measures = []
        k = len(face)
        for i in range(k):
            prev = face[(i - 1) % k]
            cur = face[i]
            nxt = face[(i + 1) % k]
            am = parent_measures.get((prev.key(), cur.key(), nxt.key()))
            if am is None:
                rot = _corner_rotation(prev, cur, nxt)
                am = ctx.measure_from_rotation(rot.c, rot.s)
            if am is None:
                return None  # negative-angle corner, unfillable
            measures.append(am)
        for i in range(k):
            j = (i + 1) % k
            if ctx.less_than_straight(measures[i]) and ctx.less_than_straight(
                measures[j]
            ):
                if g.segment_length_int(face[i], face[j]) < min_edge:
                    return None
        children.append(_canonical_frontier(face, measures, count))
    if total != front.remaining - 1:
        return None
    children.sort(key=lambda f: tuple(p.key() for p in f.points))
    return children


def _merge_collinear(face):
    out = list(face)
    changed = True
    while changed and len(out) > 2:
        changed = False
        scaled = g.iscale(out)
        k = len(out)
        for i in range(k):
            prev = scaled[(i - 1) % k]
            cur = scaled[i]
            nxt = scaled[(i + 1) % k]
            if g.iorient(prev, cur, nxt) == 0:
                din = (cur[0] - prev[0], cur[1] - prev[1],
                       cur[2] - prev[2], cur[3] - prev[3])
                dout = (nxt[0] - cur[0], nxt[1] - cur[1],
                        nxt[2] - cur[2], nxt[3] - cur[3])
                if g._idot_sign(*din, *dout) <= 0:
                    raise RuntimeError("spike survived cancellation")
                del out[i]
                changed = True
                break
    return out


def _canonical_frontier(face, measures, count) -> Frontier:
    k = len(face)
    start = 0
    for i in range(1, k):
        if face[i].key() < face[start].key():
            start = i
    pts = tuple(face[(start + i) % k] for i in range(k))
    ms = tuple(measures[(start + i) % k] for i in range(k))
    return Frontier(points=pts, measures=ms, remaining=count)


def build_region(cand, allow_hook_rejects: bool = True) -> Region:
    """Triangle ABC for an analyzed candidate, on exact coordinates.

    A sits at the origin with the side of length Y along the positive
    x-axis; B is placed with angle_trig of the corner measure at A.  The
    candidate must be accepted, except for the named computational
    exclusions ("no60", "65-lemma") that the searcher re-verifies.
    """
    if not cand.accepted:
        if not (allow_hook_rejects and cand.reason in ("no60", "65-lemma")):
            raise ValueError(f"candidate was rejected ({cand.reason})")
    am_x, am_y, am_z = cand.angles
    total = am_x + am_y + am_z
    if total != AngleMeasure(3, 3):
        raise ValueError(f"corner measures sum to {total}, not (3,3)")
    t = cand.tile
    ctx = TrigContext(t)
    rot = ctx.rotation(am_x)
    a_pt = point(0, 0)
    c_pt = point(cand.Y, 0)
    bx, by = rot.apply(Q3Scalar(cand.Z), Q3Scalar(0))
    b_pt = Point2(bx, by)
    dx, dy = g.vsub(b_pt, c_pt)
    if g.dot(dx, dy, dx, dy) != Q3Scalar(cand.X * cand.X):
        raise ValueError("side lengths are inconsistent with the angles")
    return Region(
        vertices=(a_pt, c_pt, b_pt),
        corner_angles=(am_x, am_z, am_y),
        triple=t,
    )


def similar_region(t: Triple, k: int) -> Region:
    """Triangle similar to the tile, scaled by k (the quadratic-tiling case)."""
    if k < 1:
        raise ValueError("scale must be positive")
    ctx = TrigContext(t)
    rot = ctx.rotation(ALPHA)
    a_pt = point(0, 0)
    c_pt = point(k * t.b, 0)
    bx, by = rot.apply(Q3Scalar(k * t.c), Q3Scalar(0))
    b_pt = Point2(bx, by)
    return Region(
        vertices=(a_pt, c_pt, b_pt),
        corner_angles=(ALPHA, GAMMA, BETA),
        triple=t,
    )
