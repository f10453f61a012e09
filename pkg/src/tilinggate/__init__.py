"""tilinggate: exact machinery for 120-degree integer-tile triangle tilings."""

from .numerics import (
    ALPHA,
    BETA,
    GAMMA,
    AngleMeasure,
    Point2,
    Q3Scalar,
    Rational,
    Rotation,
    TrigContext,
    angle_add,
    angle_sub,
    angle_trig,
    q3_sign,
)
from .numtheory import (
    ParamPair,
    Triple,
    enumerate_triples_direct,
    enumerate_triples_param,
    mod8_check,
    sqdiv,
    sqfree,
)
from .boundary import DRow, SideComposition, aux23_filter, compositions, d_rows, side_feasible
from .shapes import ShapeCandidate, ShapeKind, aggregate_report, analyze, equilateral_table
from .tiler import (
    PlacedTile,
    Region,
    SearchConfig,
    SearchResult,
    build_region,
    search,
    similar_region,
    verify_tiling,
)

__version__ = "0.1.0"
