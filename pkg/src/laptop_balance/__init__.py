"""Minimal-footprint placement of a rectangular laptop on a rectangular table."""
from .analysis import (
    Regime,
    RegimeError,
    Scenario2Report,
    SweepRow,
    VerificationReport,
    classify_regime,
    scenario2_analyze,
    sweep_tables,
    verify_bounds,
    verify_corner_constancy,
    verify_corner_sweep,
    verify_scenario2,
)
from .geometry import (
    ConvexPolygon,
    HalfPlane,
    OrientedRect,
    Point2,
    clip_convex,
    clip_halfplane,
    monte_carlo_overlap,
    polygon_area,
    rect_polygon,
)
from .optimizer import OptResult, SearchConfig, grid_search, refine, solve
from .placement import (
    FootprintReport,
    LaptopSpec,
    Pose,
    ShapeClass,
    StabilityError,
    TableSpec,
    classify_footprint,
    footprint,
    footprint_areas,
    is_stable,
    protruding_pieces,
    symmetric_corner_pose,
)
from .report import Scene, emit_csv, emit_json, render_svg

__version__ = "0.1.0"
