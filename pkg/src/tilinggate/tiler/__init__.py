"""Depth-first tiling search over exact coordinates, with a verifier."""

from .frontier import (
    Frontier,
    PlacedTile,
    Region,
    apply_placement,
    build_region,
    placements_at_corner,
    region_to_frontier,
    similar_region,
    tile_area2,
)
from .search import (
    STATUS_EXHAUSTED,
    STATUS_FOUND,
    STATUS_LIMIT,
    SearchConfig,
    SearchResult,
    search,
)
from .verify import VerificationResult, intersection_area2, verify_tiling

__all__ = [
    "Frontier",
    "PlacedTile",
    "Region",
    "SearchConfig",
    "SearchResult",
    "STATUS_EXHAUSTED",
    "STATUS_FOUND",
    "STATUS_LIMIT",
    "VerificationResult",
    "apply_placement",
    "build_region",
    "intersection_area2",
    "placements_at_corner",
    "region_to_frontier",
    "search",
    "similar_region",
    "tile_area2",
    "verify_tiling",
]
