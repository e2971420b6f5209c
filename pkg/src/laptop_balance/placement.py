"""Laptop/table model, stability, and the footprint objective.

The table is fixed at ``[0, W] x [0, H]`` and the laptop moves. A pose is the
laptop midpoint plus the angle of its long axis, canonical in ``[0, pi)``.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np

from .geometry import (
    ConvexPolygon,
    HalfPlane,
    OrientedRect,
    Point2,
    box_polygon,
    canonical_angle,
    clip_convex,
    clip_halfplane,
    convex_hull,
    polygon_area,
    rect_polygon,
)

ISOSCELES_TOL = 1e-6
SLIVER_TOL = 1e-9


class StabilityError(ValueError):
    """The laptop midpoint is not on the table."""


@dataclass(frozen=True)
class LaptopSpec:
    length: float = 1.0

    def __post_init__(self):
        if not (math.isfinite(self.length) and self.length >= 1.0):
            raise ValueError(f"laptop length must be >= 1 (width is the unit), got {self.length}")

    @property
    def half_long(self) -> float:
        return 0.5 * self.length

    @property
    def is_square(self) -> bool:
        return self.length == 1.0


@dataclass(frozen=True)
class TableSpec:
    width: float
    height: float

    def __post_init__(self):
        for v in (self.width, self.height):
            if not (math.isfinite(v) and v > 0):
                raise ValueError(f"table sides must be positive, got {self.width} x {self.height}")

    @property
    def min_side(self) -> float:
        return min(self.width, self.height)

    @property
    def diagonal(self) -> float:
        return math.hypot(self.width, self.height)

    @property
    def area(self) -> float:
        return self.width * self.height

    @property
    def corners(self) -> tuple[Point2, ...]:
        w, h = self.width, self.height
        return (Point2(0.0, 0.0), Point2(w, 0.0), Point2(w, h), Point2(0.0, h))

    def polygon(self) -> ConvexPolygon:
        return box_polygon(0.0, 0.0, self.width, self.height)


@dataclass(frozen=True)
class Pose:
    cx: float
    cy: float
    theta: float = 0.0

    def __post_init__(self):
        if not (math.isfinite(self.cx) and math.isfinite(self.cy)):
            raise ValueError("pose coordinates must be finite")
        object.__setattr__(self, "cx", float(self.cx))
        object.__setattr__(self, "cy", float(self.cy))
        object.__setattr__(self, "theta", canonical_angle(self.theta))

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.cx, self.cy, self.theta)


class ShapeClass(enum.Enum):
    Empty = 0
    Triangle = 3
    Quadrilateral = 4
    Pentagon = 5
    Hexagon = 6
    Heptagon = 7
    Octagon = 8


@dataclass(frozen=True)
class FootprintReport:
    polygon: ConvexPolygon
    area: float
    vertex_count: int
    shape_class: ShapeClass
    is_isosceles_right_triangle: bool
    protruding_pieces: tuple[ConvexPolygon, ...] = field(default_factory=tuple)


def laptop_rect(laptop: LaptopSpec, pose: Pose) -> OrientedRect:
    return OrientedRect(Point2(pose.cx, pose.cy), laptop.half_long, 0.5, pose.theta)


def laptop_polygon(laptop: LaptopSpec, pose: Pose) -> ConvexPolygon:
    return rect_polygon(laptop_rect(laptop, pose))


def is_stable(pose: Pose, table: TableSpec) -> bool:
    return 0.0 <= pose.cx <= table.width and 0.0 <= pose.cy <= table.height


def _require_stable(pose: Pose, table: TableSpec) -> None:
    if not is_stable(pose, table):
        raise StabilityError(
            f"midpoint ({pose.cx}, {pose.cy}) is off the {table.width} x {table.height} table"
        )


def symmetric_corner_pose(table: TableSpec, corner: int = 0) -> Pose:
    """Midpoint on a table corner, a long side facing the table at 45 degrees.

    Corners are numbered counterclockwise from the origin. At (0, 0) the long
    axis runs along (-1, 1), i.e. theta = 3*pi/4.
    """
    cx, cy = table.corners[corner % 4]
    theta = 0.75 * math.pi if corner % 2 == 0 else 0.25 * math.pi
    return Pose(cx, cy, theta)


def symmetric_theta_at(table: TableSpec, cx: float, cy: float) -> float:
    """The symmetric orientation for the table corner nearest to (cx, cy)."""
    at_right = cx > 0.5 * table.width
    at_top = cy > 0.5 * table.height
    return 0.25 * math.pi if at_right != at_top else 0.75 * math.pi


def remove_slivers(poly: ConvexPolygon, tol: float = SLIVER_TOL) -> list[Point2]:
    """Vertices left after merging near-duplicate and near-collinear ones."""
    pts = list(poly.vertices)
    changed = True
    while changed and len(pts) >= 3:
        changed = False
        n = len(pts)
        for i in range(n):
            p, q, r = pts[i - 1], pts[i], pts[(i + 1) % n]
            e1 = math.hypot(q.x - p.x, q.y - p.y)
            e2 = math.hypot(r.x - q.x, r.y - q.y)
            if e1 <= tol:
                del pts[i]
                changed = True
                break
            cr = (q.x - p.x) * (r.y - q.y) - (q.y - p.y) * (r.x - q.x)
            if e2 > tol and abs(cr) <= tol * e1 * e2:
                del pts[i]
                changed = True
                break
    return pts if len(pts) >= 3 else []


def _is_isosceles_right(pts: list[Point2], tol: float = ISOSCELES_TOL) -> bool:
    if len(pts) != 3:
        return False
    for i in range(3):
        a, b, c = pts[i], pts[(i + 1) % 3], pts[(i + 2) % 3]
        l1 = math.hypot(b.x - a.x, b.y - a.y)
        l2 = math.hypot(c.x - a.x, c.y - a.y)
        cosang = ((b.x - a.x) * (c.x - a.x) + (b.y - a.y) * (c.y - a.y)) / (l1 * l2)
        angle = math.acos(max(-1.0, min(1.0, cosang)))
        if abs(angle - 0.5 * math.pi) <= tol and abs(l1 - l2) <= tol:
            return True
    return False


def classify_footprint(report: FootprintReport) -> tuple[ShapeClass, bool]:
    pts = remove_slivers(report.polygon) if not report.polygon.is_empty else []
    shape = ShapeClass(len(pts)) if pts else ShapeClass.Empty
    return shape, _is_isosceles_right(pts)


def protruding_pieces(laptop: LaptopSpec, table: TableSpec, pose: Pose) -> list[ConvexPolygon]:
    """Convex decomposition of the uncovered part of the table."""
    _require_stable(pose, table)
    return _protruding(laptop_polygon(laptop, pose), table.polygon())


def _protruding(lap: ConvexPolygon, remaining: ConvexPolygon) -> list[ConvexPolygon]:
    pieces = []
    for a, b in lap.edges():
        h = HalfPlane.left_of(a, b)
        out = clip_halfplane(remaining, h, keep_inside=False)
        if not out.is_empty:
            pieces.append(out)
        remaining = clip_halfplane(remaining, h, keep_inside=True)
        if remaining.is_empty:
            break
    return _merge_convex(pieces)


def _shares_segment(p: ConvexPolygon, q: ConvexPolygon, tol: float = 1e-9) -> bool:
    for a, b in p.edges():
        dx, dy = b.x - a.x, b.y - a.y
        length = math.hypot(dx, dy)
        ux, uy = dx / length, dy / length
        for c, d in q.edges():
            # both endpoints of the other edge must sit on this edge's line
            if abs(ux * (c.y - a.y) - uy * (c.x - a.x)) > tol:
                continue
            if abs(ux * (d.y - a.y) - uy * (d.x - a.x)) > tol:
                continue
            s0 = ux * (c.x - a.x) + uy * (c.y - a.y)
            s1 = ux * (d.x - a.x) + uy * (d.y - a.y)
            lo, hi = min(s0, s1), max(s0, s1)
            if min(hi, length) - max(lo, 0.0) > tol:
                return True
    return False


def _merge_convex(pieces: list[ConvexPolygon]) -> list[ConvexPolygon]:
    pieces = list(pieces)
    merged = True
    while merged:
        merged = False
        for i in range(len(pieces)):
            for j in range(i + 1, len(pieces)):
                p, q = pieces[i], pieces[j]
                if not _shares_segment(p, q):
                    continue
                hull = convex_hull(list(p.vertices) + list(q.vertices))
                if abs(polygon_area(hull) - polygon_area(p) - polygon_area(q)) <= 1e-12:
                    pieces[i] = hull
                    del pieces[j]
                    merged = True
                    break
            if merged:
                break
    return pieces


def footprint(laptop: LaptopSpec, table: TableSpec, pose: Pose) -> FootprintReport:
    _require_stable(pose, table)
    lap = laptop_polygon(laptop, pose)
    tab = table.polygon()
    poly = clip_convex(lap, tab)
    draft = FootprintReport(poly, polygon_area(poly), len(poly), ShapeClass.Empty, False)
    shape, iso = classify_footprint(draft)
    return FootprintReport(
        polygon=poly,
        area=draft.area,
        vertex_count=len(poly),
        shape_class=shape,
        is_isosceles_right_triangle=iso,
        protruding_pieces=tuple(_protruding(lap, tab)),
    )


def footprint_area(laptop: LaptopSpec, table: TableSpec, pose: Pose) -> float:
    _require_stable(pose, table)
    return polygon_area(clip_convex(laptop_polygon(laptop, pose), table.polygon()))


def triangle_corners(piece: ConvexPolygon, table: TableSpec, tol: float = 1e-9) -> list[Point2]:
    """Table corners that are vertices of ``piece``."""
    return [
        c
        for c in table.corners
        if any(math.hypot(v.x - c.x, v.y - c.y) <= tol for v in piece.vertices)
    ]


# --- vectorised objective -------------------------------------------------

def footprint_areas(
    laptop: LaptopSpec,
    table: TableSpec,
    cx: np.ndarray,
    cy: np.ndarray,
    theta: np.ndarray,
    chunk: int = 1 << 16,
) -> np.ndarray:
    """Footprint areas for many stable poses at once.

    Uses the boundary form of the area integral: the boundary of the overlap is
    made of laptop edges clipped to the closed table plus table edges clipped to
    the open laptop, so edges lying on a shared line are counted once. Only
    valid for stable poses, where the two rectangles cannot touch back to back.
    """
    cx, cy, theta = np.broadcast_arrays(
        np.asarray(cx, dtype=float), np.asarray(cy, dtype=float), np.asarray(theta, dtype=float)
    )
    shape = cx.shape
    cx, cy, theta = cx.ravel(), cy.ravel(), theta.ravel()
    out = np.empty(cx.size)
    for s in range(0, cx.size, chunk):
        sl = slice(s, s + chunk)
        with np.errstate(over="ignore", divide="ignore", invalid="ignore"):
            out[sl] = _areas_chunk(
                laptop.half_long, 0.5, table.width, table.height, cx[sl], cy[sl], theta[sl]
            )
    return out.reshape(shape)


def _areas_chunk(a, b, w, h, cx, cy, theta):
    c, s = np.cos(theta), np.sin(theta)
    # laptop-centred frame: table box is [x0, x1] x [y0, y1]
    x0, x1 = -cx, w - cx
    y0, y1 = -cy, h - cy
    ux, uy = c, s
    vx, vy = -s, c
    total = np.zeros_like(cx)

    # laptop edges, counterclockwise, clipped to the closed table box
    signs = ((1, -1), (1, 1), (-1, 1), (-1, -1))
    for k in range(4):
        su, sv = signs[k]
        tu, tv = signs[(k + 1) % 4]
        px = su * a * ux + sv * b * vx
        py = su * a * uy + sv * b * vy
        dx = (tu - su) * a * ux + (tv - sv) * b * vx
        dy = (tu - su) * a * uy + (tv - sv) * b * vy
        t0 = np.zeros_like(cx)
        t1 = np.ones_like(cx)
        ok = np.ones(cx.shape, dtype=bool)
        for p, d, lo, hi in ((px, dx, x0, x1), (py, dy, y0, y1)):
            par = d == 0
            ok &= ~par | ((p >= lo) & (p <= hi))
            dsafe = np.where(par, 1.0, d)
            ta = (lo - p) / dsafe
            tb = (hi - p) / dsafe
            t0 = np.where(par, t0, np.maximum(t0, np.minimum(ta, tb)))
            t1 = np.where(par, t1, np.minimum(t1, np.maximum(ta, tb)))
        span = np.where(ok, np.maximum(t1 - t0, 0.0), 0.0)
        total += span * (px * dy - py * dx)

    # table edges, counterclockwise, clipped to the open laptop
    tx = (x0, x1, x1, x0)
    ty = (y0, y0, y1, y1)
    for k in range(4):
        qx, qy = tx[k], ty[k]
        ex, ey = tx[(k + 1) % 4] - qx, ty[(k + 1) % 4] - qy
        t0 = np.zeros_like(cx)
        t1 = np.ones_like(cx)
        ok = np.ones(cx.shape, dtype=bool)
        for nx, ny, lim in ((ux, uy, a), (vx, vy, b)):
            p = qx * nx + qy * ny
            d = ex * nx + ey * ny
            par = d == 0
            ok &= ~par | (np.abs(p) < lim)
            dsafe = np.where(par, 1.0, d)
            ta = (-lim - p) / dsafe
            tb = (lim - p) / dsafe
            t0 = np.where(par, t0, np.maximum(t0, np.minimum(ta, tb)))
            t1 = np.where(par, t1, np.minimum(t1, np.maximum(ta, tb)))
        span = np.where(ok, np.maximum(t1 - t0, 0.0), 0.0)
        total += span * (qx * ey - qy * ex)

    return 0.5 * total
