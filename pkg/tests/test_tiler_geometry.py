import math
from fractions import Fraction

import pytest

from tilinggate.numerics import (
    ALPHA,
    BETA,
    GAMMA,
    STRAIGHT,
    AngleMeasure,
    Point2,
    Q3Scalar,
    TrigContext,
    point,
)
from tilinggate.numtheory import Triple
from tilinggate.shapes import ShapeKind, candidate_for
from tilinggate.tiler import (
    Frontier,
    apply_placement,
    build_region,
    placements_at_corner,
    region_to_frontier,
    similar_region,
    tile_area2,
)
from tilinggate.tiler import geometry as g
from tilinggate.tiler.frontier import make_placement

T357 = Triple(3, 5, 7)


def fpt(p):
    return (float(p.x), float(p.y))


def ccw_from(pl, corner):
    """Placed triangle rotated so the given corner point comes first."""
    tri = list(pl.ccw_vertices())
    i = next(k for k, v in enumerate(tri) if v == corner)
    return tuple(tri[i:] + tri[:i])


class TestPredicates:
    def test_orient(self):
        assert g.orient(point(0, 0), point(1, 0), point(0, 1)) == 1
        assert g.orient(point(0, 0), point(0, 1), point(1, 0)) == -1
        assert g.orient(point(0, 0), point(1, 0), point(2, 0)) == 0

    def test_on_segment(self):
        assert g.on_segment(point(1, 0), point(0, 0), point(2, 0))
        assert g.on_segment(point(0, 0), point(0, 0), point(2, 0))
        assert not g.on_segment(point(3, 0), point(0, 0), point(2, 0))
        assert not g.on_segment(point(1, 1), point(0, 0), point(2, 0))

    def test_proper_cross(self):
        assert g.segments_properly_cross(point(0, 0), point(2, 2),
                                         point(0, 2), point(2, 0))
        # touching at an endpoint is not proper
        assert not g.segments_properly_cross(point(0, 0), point(2, 2),
                                             point(2, 2), point(3, 0))
        # collinear overlap is not proper
        assert not g.segments_properly_cross(point(0, 0), point(2, 0),
                                             point(1, 0), point(3, 0))

    def test_point_in_polygon(self):
        square = (point(0, 0), point(4, 0), point(4, 4), point(0, 4))
        assert g.point_in_polygon(point(2, 2), square) == 1
        assert g.point_in_polygon(point(0, 2), square) == 0
        assert g.point_in_polygon(point(4, 4), square) == 0
        assert g.point_in_polygon(point(5, 2), square) == -1
        assert g.point_in_polygon(point(-1, 4), square) == -1

    def test_point_in_polygon_irrational_coords(self):
        tri = (point(0, 0), point(4, 0),
               Point2(Q3Scalar(2), Q3Scalar(0, 2)))  # apex (2, 2*sqrt3)
        assert g.point_in_polygon(Point2(Q3Scalar(2), Q3Scalar(0, 1)), tri) == 1
        assert g.point_in_polygon(point(2, 0), tri) == 0

    def test_segment_length_int(self):
        assert g.segment_length_int(point(0, 0), point(5, 0)) == 5
        apex = Point2(Q3Scalar(Fraction(5, 2)), Q3Scalar(0, Fraction(5, 2)))
        assert g.segment_length_int(point(0, 0), apex) == 5
        with pytest.raises(ValueError):
            g.segment_length_int(point(0, 0), point(1, 1))

    def test_polygon_area2(self):
        square = (point(0, 0), point(4, 0), point(4, 4), point(0, 4))
        assert g.polygon_area2(square) == Q3Scalar(32)

    def test_ccw_angle_less(self):
        ref = (Q3Scalar(1), Q3Scalar(0))
        up = (Q3Scalar(0), Q3Scalar(1))
        left = (Q3Scalar(-1), Q3Scalar(0))
        down = (Q3Scalar(0), Q3Scalar(-1))
        assert g.ccw_angle_less(ref, up, left)
        assert g.ccw_angle_less(ref, left, down)
        assert not g.ccw_angle_less(ref, down, up)


class TestPlacements:
    def make_front(self, n=60):
        cand = candidate_for(T357, ShapeKind.EQUILATERAL, 2)
        region = build_region(cand)
        ctx = TrigContext(T357)
        return region_to_frontier(region, n, ctx), ctx

    def test_equilateral_corner_admits_alpha_and_beta_only(self):
        front, ctx = self.make_front()
        pls = placements_at_corner(front, 0, T357, ctx)
        # alpha and beta each unmirrored+mirrored; gamma does not fit (1,1)
        kinds = [pl.mirrored for pl in pls]
        assert len(pls) == 4 and kinds == [False, True, False, True]

    def test_gamma_admitted_at_gamma_corner(self):
        region = similar_region(T357, 2)
        ctx = TrigContext(T357)
        front = region_to_frontier(region, 4, ctx)
        idx = list(front.measures).index(GAMMA)
        pls = placements_at_corner(front, idx, T357, ctx)
        assert pls, "gamma corner admits placements"

    def test_straight_corner_admits_all_angles(self):
        # synthetic frontier with an interior straight vertex on one side
        cand = candidate_for(T357, ShapeKind.EQUILATERAL, 2)
        region = build_region(cand)
        a, c, b = region.vertices
        mid = g.midpoint(a, c)
        front = Frontier(
            points=(a, mid, c, b),
            measures=(AngleMeasure(1, 1), STRAIGHT, AngleMeasure(1, 1),
                      AngleMeasure(1, 1)),
            remaining=60,
        )
        ctx = TrigContext(T357)
        pls = placements_at_corner(front, 1, T357, ctx)
        angles_placed = {pl_angle(pl, ctx, mid) for pl in pls}
        assert angles_placed == {ALPHA, BETA, GAMMA}

    def test_placement_geometry(self):
        front, ctx = self.make_front()
        corner = front.points[0]
        nxt = front.points[1]
        for pl in placements_at_corner(front, 0, T357, ctx):
            tri = ccw_from(pl, corner)
            assert tri[0] == corner
            # flush edge along the outgoing frontier edge
            assert g.orient(corner, nxt, tri[1]) == 0
            ux, uy = g.vsub(nxt, corner)
            vx, vy = g.vsub(tri[1], corner)
            assert g.dot(ux, uy, vx, vy).sign() > 0
            # counterclockwise and congruent
            assert g.polygon_area2(tri).sign() > 0
            sides = sorted(g.segment_length_int(tri[i], tri[(i + 1) % 3])
                           for i in range(3))
            assert sides == [3, 5, 7]

    def test_mirror_flag_respected(self):
        front, ctx = self.make_front()
        pls = placements_at_corner(front, 0, T357, ctx, allow_mirror=False)
        assert pls and all(not pl.mirrored for pl in pls)

    def test_componentwise_gate(self):
        front, ctx = self.make_front()
        # shrink the corner to (1,0): only alpha fits
        small = Frontier(points=front.points,
                         measures=(ALPHA,) + front.measures[1:],
                         remaining=front.remaining)
        pls = placements_at_corner(small, 0, T357, ctx)
        assert pls and all(pl_angle(pl, ctx, small.points[0]) == ALPHA
                           for pl in pls)


def pl_angle(pl, ctx, corner):
    """Measure of the placed tile's angle at the frontier corner."""
    tri = ccw_from(pl, corner)
    d_in = g.vsub(tri[0], tri[2])
    d_out = g.vsub(tri[1], tri[0])
    lin = g.segment_length_int(tri[2], tri[0])
    lout = g.segment_length_int(tri[0], tri[1])
    inv_in = Q3Scalar(Fraction(1, lin))
    inv_out = Q3Scalar(Fraction(1, lout))
    ux, uy = d_out[0] * inv_out, d_out[1] * inv_out
    wx, wy = -(d_in[0] * inv_in), -(d_in[1] * inv_in)
    return ctx.measure_from_rotation(g.dot(ux, uy, wx, wy),
                                     g.cross(ux, uy, wx, wy))


class TestApplyPlacement:
    def test_area_conservation_and_measure_geometry(self):
        region = similar_region(T357, 3)
        ctx = TrigContext(T357)
        a2 = tile_area2(T357)
        front = region_to_frontier(region, 9, ctx)
        stack = [front]
        seen = 0
        while stack and seen < 40:
            f = stack.pop()
            idx = f.select_corner(ctx)
            for pl in placements_at_corner(f, idx, T357, ctx):
                children = apply_placement(f, pl, ctx, a2)
                if children is None:
                    continue
                seen += 1
                total = sum(ch.remaining for ch in children)
                assert total == f.remaining - 1
                for ch in children:
                    assert ch.area2() == a2 * ch.remaining
                    _assert_measures_match_geometry(ch, ctx)
                stack.extend(children)
        assert seen > 10

    def test_full_consumption_returns_empty(self):
        region = similar_region(T357, 1)
        ctx = TrigContext(T357)
        front = region_to_frontier(region, 1, ctx)
        idx = front.select_corner(ctx)
        pls = placements_at_corner(front, idx, T357, ctx)
        done = [apply_placement(front, pl, ctx, tile_area2(T357)) for pl in pls]
        assert [] in done  # the exact-fit copy finishes the region

    def test_reflex_corner_measures(self):
        # the first placement inside the side-30 equilateral region leaves
        # the tile's far vertex in the interior: a reflex corner appears
        cand = candidate_for(T357, ShapeKind.EQUILATERAL, 2)
        region = build_region(cand)
        ctx = TrigContext(T357)
        front = region_to_frontier(region, 60, ctx)
        idx = front.select_corner(ctx)
        pls = placements_at_corner(front, idx, T357, ctx, allow_mirror=False)
        children = apply_placement(front, pls[0], ctx, tile_area2(T357))
        assert children is not None and len(children) == 1
        child = children[0]
        reflex = [m for m in child.measures if not ctx.less_than_straight(m)]
        assert reflex and all(m.is_nonnegative() for m in reflex)


def _assert_measures_match_geometry(front, ctx):
    pts = front.points
    k = len(pts)
    for i in range(k):
        prev, cur, nxt = pts[(i - 1) % k], pts[i], pts[(i + 1) % k]
        v1 = (float(prev.x) - float(cur.x), float(prev.y) - float(cur.y))
        v2 = (float(nxt.x) - float(cur.x), float(nxt.y) - float(cur.y))
        ang = math.atan2(v1[1], v1[0]) - math.atan2(v2[1], v2[0])
        ang %= 2 * math.pi
        m = front.measures[i]
        alpha = math.acos(13 / 14)
        beta = math.acos(11 / 14)
        assert abs(ang - (m.m * alpha + m.n * beta)) < 1e-9


class TestBuildRegion:
    def test_equilateral_vertices(self):
        cand = candidate_for(T357, ShapeKind.EQUILATERAL, 3)
        region = build_region(cand)
        assert region.corner_angles == (AngleMeasure(1, 1),) * 3
        a, c, b = region.vertices
        assert fpt(a) == (0.0, 0.0)
        assert fpt(c) == (45.0, 0.0)
        assert b.x == Q3Scalar(Fraction(45, 2))
        assert b.y == Q3Scalar(0, Fraction(45, 2))

    def test_isosceles_base_beta(self):
        cand = candidate_for(T357, ShapeKind.ISOSCELES_BASE_BETA, 2)
        region = build_region(cand)
        ams = set(region.corner_angles)
        assert ams == {AngleMeasure(0, 1), AngleMeasure(3, 1)}
        sides = sorted(
            g.segment_length_int(region.vertices[i],
                                 region.vertices[(i + 1) % 3])
            for i in range(3)
        )
        assert sides == [42, 42, 66]

    def test_alpha_pi3_corners(self):
        cand = candidate_for(Triple(5, 3, 7), ShapeKind.ALPHA_AND_PI_OVER_3, 4)
        assert cand.N == 96
        region = build_region(cand)
        # measures are in the basis of the unswapped tile (3,5,7); in the
        # working tile's own basis these read (1,0), (1,1), (1,2)
        assert set(region.corner_angles) == {AngleMeasure(0, 1),
                                             AngleMeasure(1, 1),
                                             AngleMeasure(2, 1)}
        sides = sorted(
            g.segment_length_int(region.vertices[i],
                                 region.vertices[(i + 1) % 3])
            for i in range(3)
        )
        assert sides == [30, 42, 48]

    def test_rejected_candidate_refused_unless_hook(self):
        cand = candidate_for(Triple(5, 16, 19), ShapeKind.EQUILATERAL, 2)
        assert cand.verdict == "reject"
        with pytest.raises(ValueError):
            build_region(cand)
        hook = candidate_for(T357, ShapeKind.EQUILATERAL, 2)
        assert hook.reason == "no60"
        region = build_region(hook)  # verification hook stays buildable
        assert g.segment_length_int(region.vertices[0], region.vertices[1]) == 30

    def test_region_validation_against_frontier(self):
        cand = candidate_for(T357, ShapeKind.EQUILATERAL, 3)
        region = build_region(cand)
        ctx = TrigContext(T357)
        bad = Region = type(region)(
            vertices=region.vertices,
            corner_angles=(AngleMeasure(1, 0),) + region.corner_angles[1:],
            triple=region.triple,
        )
        with pytest.raises(ValueError):
            region_to_frontier(bad, 135, ctx)


class TestMakePlacement:
    def test_mirror_swaps_the_flush_edge(self):
        # both chiralities open counterclockwise from the ray; the mirrored
        # copy is the reflection across the angle bisector, so the other
        # adjacent edge lies on the ray
        ray = (Q3Scalar(1), Q3Scalar(0))
        origin = point(0, 0)
        plain = make_placement(T357, origin, ray, "gamma", False)
        mirrored = make_placement(T357, origin, ray, "gamma", True)
        tri_p = plain.ccw_vertices()
        tri_m = mirrored.ccw_vertices()
        assert g.segment_length_int(origin, tri_p[1]) == 3  # a edge flush
        assert g.segment_length_int(origin, tri_m[1]) == 5  # b edge flush
        for tri in (tri_p, tri_m):
            assert g.polygon_area2(tri).sign() > 0
            assert sorted(g.segment_length_int(tri[i], tri[(i + 1) % 3])
                          for i in range(3)) == [3, 5, 7]

    def test_anchor_is_gamma_vertex(self):
        ray = (Q3Scalar(1), Q3Scalar(0))
        pl = make_placement(T357, point(0, 0), ray, "beta", False)
        gamma, beta, alpha = pl.vertices()
        assert gamma == pl.anchor
        assert g.segment_length_int(gamma, beta) == 3
        assert g.segment_length_int(gamma, alpha) == 5
        assert g.segment_length_int(alpha, beta) == 7
        assert beta == point(0, 0)  # the chosen corner carries the beta angle
