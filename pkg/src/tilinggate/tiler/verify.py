"""Independent tiling checker.

Shares the exact-number substrate with the rest of the package but none of
the search's geometric decision code: overlap and containment are decided
by exact convex clipping, which is complete for triangles, rather than by
the search's incremental frontier tests.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..numerics import Point2, Q3Scalar, Q3_ZERO
from .frontier import PlacedTile, Region


@dataclass(frozen=True)
class VerificationResult:
    ok: bool
    failure: str | None = None

    def __bool__(self) -> bool:
        return self.ok


def _area2(pts) -> Q3Scalar:
    acc = Q3_ZERO
    n = len(pts)
    for i in range(n):
        p, q = pts[i], pts[(i + 1) % n]
        acc = acc + (p.x * q.y - q.x * p.y)
    return acc


def _side(a: Point2, b: Point2, p: Point2) -> int:
    return ((b.x - a.x) * (p.y - a.y) - (b.y - a.y) * (p.x - a.x)).sign()


def _line_intersection(a, b, p, q) -> Point2:
    # segment pq crosses line ab; exact crossing point
    num = (b.x - a.x) * (p.y - a.y) - (b.y - a.y) * (p.x - a.x)
    den = (b.x - a.x) * (p.y - q.y) - (b.y - a.y) * (p.x - q.x)
    s = num / den
    return Point2(p.x + (q.x - p.x) * s, p.y + (q.y - p.y) * s)


def _clip(poly, a: Point2, b: Point2):
    """Keep the part of the convex polygon left of the directed line ab."""
    out = []
    n = len(poly)
    for i in range(n):
        p, q = poly[i], poly[(i + 1) % n]
        sp, sq = _side(a, b, p), _side(a, b, q)
        if sp >= 0:
            out.append(p)
        if (sp > 0 > sq) or (sp < 0 < sq):
            out.append(_line_intersection(a, b, p, q))
    return out


def intersection_area2(poly1, poly2) -> Q3Scalar:
    """Twice the area of the intersection of two convex ccw polygons."""
    clipped = list(poly1)
    n = len(poly2)
    for i in range(n):
        if not clipped:
            break
        clipped = _clip(clipped, poly2[i], poly2[(i + 1) % n])
    if len(clipped) < 3:
        return Q3_ZERO
    return _area2(clipped)


def verify_tiling(tiles, region: Region, n: int) -> VerificationResult:
    """Check that the placements form an exact N-tiling of the region.

    Criteria: tile count; every copy congruent to the tile (exact squared
    side lengths); every copy inside the region; pairwise interiors
    disjoint; total area equal to the region area.  Together these imply
    the copies cover the region, overlapping only at boundaries.
    """
    if len(tiles) != n:
        return VerificationResult(False, f"expected {n} tiles, got {len(tiles)}")
    region_pts = list(region.vertices)
    if _area2(region_pts).sign() <= 0:
        return VerificationResult(False, "region is not counterclockwise")

    tris = []
    for i, pl in enumerate(tiles):
        if not isinstance(pl, PlacedTile):
            return VerificationResult(False, f"tile {i} is not a PlacedTile")
        t = pl.tile
        want = sorted([t.a * t.a, t.b * t.b, t.c * t.c])
        got = []
        for d2 in pl.squared_sides():
            if d2.coef3 != 0 or d2.rat.denominator != 1:
                return VerificationResult(False, f"tile {i} side not integer")
            got.append(d2.rat.numerator)
        if sorted(got) != want:
            return VerificationResult(
                False, f"tile {i} not congruent: sides^2 {sorted(got)} != {want}"
            )
        tri = list(pl.ccw_vertices())
        if _area2(tri).sign() <= 0:
            return VerificationResult(False, f"tile {i} not counterclockwise")
        tris.append(tri)

    tile_a2 = None
    total = Q3_ZERO
    for i, tri in enumerate(tris):
        a2 = _area2(tri)
        if tile_a2 is None:
            tile_a2 = a2
        elif a2 != tile_a2:
            return VerificationResult(False, f"tile {i} area differs")
        total = total + a2
        if intersection_area2(tri, region_pts) != a2:
            return VerificationResult(False, f"tile {i} leaves the region")
    if total != _area2(region_pts):
        return VerificationResult(False, "total tile area != region area")
    for i in range(len(tris)):
        for j in range(i + 1, len(tris)):
            if intersection_area2(tris[i], tris[j]).sign() != 0:
                return VerificationResult(False, f"tiles {i} and {j} overlap")
    return VerificationResult(True)
