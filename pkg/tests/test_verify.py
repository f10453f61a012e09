from fractions import Fraction

from tilinggate.numerics import Point2, Q3Scalar, Rotation, point
from tilinggate.numtheory import Triple
from tilinggate.tiler import (
    PlacedTile,
    SearchConfig,
    intersection_area2,
    search,
    similar_region,
    verify_tiling,
)

T357 = Triple(3, 5, 7)


def q3(rat, coef3=0):
    return Q3Scalar(Fraction(rat), Fraction(coef3))


ROT60 = Rotation(q3(Fraction(1, 2)), q3(0, Fraction(1, 2)))
ROT240 = Rotation(q3(Fraction(-1, 2)), q3(0, Fraction(-1, 2)))


def hand_built_4_tiling():
    """The quadratic 4-tiling of the (6, 10, 14) triangle, by construction:
    three aligned copies at the corners plus the point-reflected middle."""
    return [
        PlacedTile(point(5, 0), ROT60, T357),
        PlacedTile(point(10, 0), ROT60, T357),
        PlacedTile(Point2(q3(Fraction(23, 2)), q3(0, Fraction(3, 2))),
                   ROT60, T357),
        PlacedTile(Point2(q3(Fraction(13, 2)), q3(0, Fraction(3, 2))),
                   ROT240, T357),
    ]


class TestIntersectionArea:
    def test_disjoint(self):
        t1 = [point(0, 0), point(1, 0), point(0, 1)]
        t2 = [point(5, 5), point(6, 5), point(5, 6)]
        assert intersection_area2(t1, t2).is_zero()

    def test_shared_edge_only(self):
        t1 = [point(0, 0), point(2, 0), point(0, 2)]
        t2 = [point(2, 0), point(2, 2), point(0, 2)]
        assert intersection_area2(t1, t2).is_zero()

    def test_identical(self):
        t1 = [point(0, 0), point(2, 0), point(0, 2)]
        assert intersection_area2(t1, t1) == q3(4)

    def test_partial_overlap(self):
        t1 = [point(0, 0), point(4, 0), point(4, 4), point(0, 4)]
        t2 = [point(2, 2), point(6, 2), point(6, 6), point(2, 6)]
        assert intersection_area2(t1, t2) == q3(8)

    def test_contained(self):
        outer = [point(0, 0), point(10, 0), point(10, 10), point(0, 10)]
        inner = [point(1, 1), point(2, 1), point(1, 2)]
        assert intersection_area2(inner, outer) == q3(1)


class TestVerifyTiling:
    def test_hand_built_tiling_verifies(self):
        region = similar_region(T357, 2)
        result = verify_tiling(hand_built_4_tiling(), region, 4)
        assert result and result.failure is None

    def test_search_output_round_trips(self):
        region = similar_region(T357, 3)
        res = search(region, T357, 9, SearchConfig())
        assert verify_tiling(res.tilings[0], region, 9)

    def test_wrong_count(self):
        region = similar_region(T357, 2)
        result = verify_tiling(hand_built_4_tiling()[:3], region, 4)
        assert not result and "expected" in result.failure

    def test_translated_tile_rejected(self):
        region = similar_region(T357, 2)
        tiles = hand_built_4_tiling()
        moved = PlacedTile(
            Point2(tiles[3].anchor.x + q3(1), tiles[3].anchor.y),
            tiles[3].rot, T357,
        )
        result = verify_tiling(tiles[:3] + [moved], region, 4)
        assert not result
        assert "overlap" in result.failure or "leaves" in result.failure

    def test_duplicate_tile_rejected(self):
        region = similar_region(T357, 2)
        tiles = hand_built_4_tiling()
        result = verify_tiling(tiles[:3] + [tiles[0]], region, 4)
        assert not result and "overlap" in result.failure

    def test_non_congruent_tile_rejected(self):
        region = similar_region(T357, 2)
        tiles = hand_built_4_tiling()
        squashed = PlacedTile(tiles[3].anchor,
                              Rotation(q3(1), q3(1)), T357)  # not unit
        result = verify_tiling(tiles[:3] + [squashed], region, 4)
        assert not result and "congruent" in result.failure

    def test_protruding_tile_rejected(self):
        region = similar_region(T357, 1)
        outside = PlacedTile(point(100, 0), ROT60, T357)
        result = verify_tiling([outside], region, 1)
        assert not result and "leaves" in result.failure
