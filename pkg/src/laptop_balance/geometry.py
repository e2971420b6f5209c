"""Convex polygon primitives: oriented rectangles, half-plane clipping, areas.

All coordinates are in laptop-width units, so magnitudes stay O(1) and plain
double precision with a fixed epsilon is adequate.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

import numpy as np

EPS = 1e-12
# results thinner than this are treated as empty
AREA_EPS = 1e-15


class Point2(NamedTuple):
    x: float
    y: float


def _cross(o: Sequence[float], a: Sequence[float], b: Sequence[float]) -> float:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


@dataclass(frozen=True)
class ConvexPolygon:
    """Counterclockwise convex polygon; an empty vertex tuple is the empty set."""

    vertices: tuple[Point2, ...] = ()

    def __post_init__(self):
        verts = tuple(Point2(float(x), float(y)) for x, y in self.vertices)
        object.__setattr__(self, "vertices", verts)
        if not verts:
            return
        if len(verts) < 3:
            raise ValueError(f"polygon needs at least 3 vertices, got {len(verts)}")
        n = len(verts)
        for i in range(n):
            p, q, r = verts[i], verts[(i + 1) % n], verts[(i + 2) % n]
            if not (math.isfinite(p.x) and math.isfinite(p.y)):
                raise ValueError(f"non-finite vertex {p}")
            if math.hypot(q.x - p.x, q.y - p.y) <= EPS:
                raise ValueError("consecutive vertices coincide")
            if _cross(p, q, r) < -EPS:
                raise ValueError("polygon is not convex and counterclockwise")

    @property
    def is_empty(self) -> bool:
        return not self.vertices

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def as_array(self) -> np.ndarray:
        return np.array(self.vertices, dtype=float).reshape(-1, 2)

    def edges(self):
        n = len(self.vertices)
        for i in range(n):
            yield self.vertices[i], self.vertices[(i + 1) % n]

    def bbox(self) -> tuple[float, float, float, float]:
        xs = [p.x for p in self.vertices]
        ys = [p.y for p in self.vertices]
        return min(xs), min(ys), max(xs), max(ys)


EMPTY = ConvexPolygon()


@dataclass(frozen=True)
class HalfPlane:
    """Points p with dot(normal, p) <= offset."""

    normal: tuple[float, float]
    offset: float

    def __post_init__(self):
        nx, ny = self.normal
        if abs(math.hypot(nx, ny) - 1.0) > EPS:
            raise ValueError("half-plane normal must be a unit vector")
        object.__setattr__(self, "normal", (float(nx), float(ny)))
        object.__setattr__(self, "offset", float(self.offset))

    @classmethod
    def left_of(cls, a: Sequence[float], b: Sequence[float]) -> "HalfPlane":
        """Closed half-plane to the left of the directed line a -> b."""
        dx, dy = b[0] - a[0], b[1] - a[1]
        length = math.hypot(dx, dy)
        nx, ny = dy / length, -dx / length
        return cls((nx, ny), nx * a[0] + ny * a[1])

    def flipped(self) -> "HalfPlane":
        return HalfPlane((-self.normal[0], -self.normal[1]), -self.offset)

    def signed_distance(self, p: Sequence[float]) -> float:
        return self.normal[0] * p[0] + self.normal[1] * p[1] - self.offset


@dataclass(frozen=True)
class OrientedRect:
    center: Point2
    half_long: float
    half_short: float
    angle: float

    def __post_init__(self):
        cx, cy = self.center
        object.__setattr__(self, "center", Point2(float(cx), float(cy)))
        if not (self.half_long >= self.half_short > 0):
            raise ValueError("need half_long >= half_short > 0")
        object.__setattr__(self, "angle", canonical_angle(self.angle))


def canonical_angle(theta: float) -> float:
    """Map an orientation to [0, pi); rectangles are symmetric under a half turn."""
    t = math.fmod(float(theta), math.pi)
    if t < 0:
        t += math.pi
    if t >= math.pi:
        t = 0.0
    return t


def angular_distance(a: float, b: float) -> float:
    d = abs(canonical_angle(a) - canonical_angle(b))
    return min(d, math.pi - d)


def rect_polygon(r: OrientedRect) -> ConvexPolygon:
    c, s = math.cos(r.angle), math.sin(r.angle)
    ux, uy = r.half_long * c, r.half_long * s
    vx, vy = -r.half_short * s, r.half_short * c
    cx, cy = r.center
    # (u, v) is right-handed, so this order is counterclockwise
    corners = [
        (cx + ux - vx, cy + uy - vy),
        (cx + ux + vx, cy + uy + vy),
        (cx - ux + vx, cy - uy + vy),
        (cx - ux - vx, cy - uy - vy),
    ]
    return _canonicalize(corners)


def box_polygon(xmin: float, ymin: float, xmax: float, ymax: float) -> ConvexPolygon:
    return ConvexPolygon(((xmin, ymin), (xmax, ymin), (xmax, ymax), (xmin, ymax)))


def _shoelace(pts: Sequence[Sequence[float]]) -> float:
    n = len(pts)
    if n < 3:
        return 0.0
    ox, oy = pts[0]
    acc = 0.0
    for i in range(1, n - 1):
        acc += _cross((ox, oy), pts[i], pts[i + 1])
    return 0.5 * acc


def polygon_area(p: ConvexPolygon) -> float:
    return abs(_shoelace(p.vertices))


def _canonicalize(pts: Iterable[Sequence[float]]) -> ConvexPolygon:
    pts = [(float(x), float(y)) for x, y in pts]
    # drop coincident neighbours
    out: list[tuple[float, float]] = []
    for p in pts:
        if out and math.hypot(p[0] - out[-1][0], p[1] - out[-1][1]) <= EPS:
            continue
        out.append(p)
    while len(out) > 1 and math.hypot(out[0][0] - out[-1][0], out[0][1] - out[-1][1]) <= EPS:
        out.pop()
    # drop collinear middle vertices
    changed = True
    while changed and len(out) >= 3:
        changed = False
        n = len(out)
        for i in range(n):
            if abs(_cross(out[i - 1], out[i], out[(i + 1) % n])) <= EPS:
                del out[i]
                changed = True
                break
    if len(out) < 3 or abs(_shoelace(out)) < AREA_EPS:
        return EMPTY
    start = min(range(len(out)), key=lambda i: out[i])
    return ConvexPolygon(tuple(out[start:] + out[:start]))


def _clip_points(pts: list, h: HalfPlane) -> list:
    if not pts:
        return []
    out = []
    n = len(pts)
    dists = [h.signed_distance(p) for p in pts]
    for i in range(n):
        p, q = pts[i], pts[(i + 1) % n]
        dp, dq = dists[i], dists[(i + 1) % n]
        if dp <= 0:
            out.append(p)
        if (dp < 0 < dq) or (dq < 0 < dp):
            t = dp / (dp - dq)
            out.append((p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1])))
    return out


def clip_halfplane(subject: ConvexPolygon, h: HalfPlane, keep_inside: bool = True) -> ConvexPolygon:
    if subject.is_empty:
        return EMPTY
    plane = h if keep_inside else h.flipped()
    return _canonicalize(_clip_points(list(subject.vertices), plane))


def clip_convex(subject: ConvexPolygon, clipper: ConvexPolygon) -> ConvexPolygon:
    """Intersection of two convex polygons by successive half-plane clipping."""
    if subject.is_empty or clipper.is_empty:
        return EMPTY
    pts = list(subject.vertices)
    for a, b in clipper.edges():
        pts = _clip_points(pts, HalfPlane.left_of(a, b))
        if not pts:
            return EMPTY
    return _canonicalize(pts)


def contains_point(p: ConvexPolygon, q: Sequence[float], tol: float = 1e-9) -> bool:
    if p.is_empty:
        return False
    return all(_cross(a, b, q) >= -tol for a, b in p.edges())


def convex_hull(points: Iterable[Sequence[float]]) -> ConvexPolygon:
    """Andrew's monotone chain; collinear points are dropped."""
    pts = sorted(set((float(x), float(y)) for x, y in points))
    if len(pts) < 3:
        return EMPTY

    def half(seq):
        chain: list = []
        for p in seq:
            while len(chain) >= 2 and _cross(chain[-2], chain[-1], p) <= EPS:
                chain.pop()
            chain.append(p)
        return chain

    lower = half(pts)
    upper = half(reversed(pts))
    return _canonicalize(lower[:-1] + upper[:-1])


def transform(p: ConvexPolygon, angle: float, shift: Sequence[float]) -> ConvexPolygon:
    """Rotate about the origin, then translate. Rigid motions keep orientation."""
    c, s = math.cos(angle), math.sin(angle)
    return _canonicalize(
        (c * x - s * y + shift[0], s * x + c * y + shift[1]) for x, y in p.vertices
    )


def monte_carlo_overlap(
    a: ConvexPolygon, b: ConvexPolygon, samples: int, seed: int = 0
) -> tuple[float, float]:
    """Estimate area(a & b) by uniform rejection sampling over the bounding box of a.

    Returns ``(estimate, std_error)``. Deterministic for a fixed (seed, samples).
    """
    if samples <= 0:
        raise ValueError("samples must be positive")
    if a.is_empty:
        raise ValueError("sampling polygon must be nonempty")
    rng = np.random.default_rng(seed)
    xmin, ymin, xmax, ymax = a.bbox()
    box_area = (xmax - xmin) * (ymax - ymin)
    hits = 0
    chunk = 1 << 18
    remaining = samples
    while remaining:
        n = min(chunk, remaining)
        remaining -= n
        pts = np.column_stack((rng.uniform(xmin, xmax, n), rng.uniform(ymin, ymax, n)))
        inside = _inside_mask(a, pts)
        if b.is_empty:
            inside[:] = False
        else:
            inside &= _inside_mask(b, pts)
        hits += int(inside.sum())
    frac = hits / samples
    return box_area * frac, box_area * math.sqrt(frac * (1.0 - frac) / samples)


def _inside_mask(p: ConvexPolygon, pts: np.ndarray) -> np.ndarray:
    v = p.as_array()
    mask = np.ones(len(pts), dtype=bool)
    for i in range(len(v)):
        a, b = v[i], v[(i + 1) % len(v)]
        cr = (b[0] - a[0]) * (pts[:, 1] - a[1]) - (b[1] - a[1]) * (pts[:, 0] - a[0])
        mask &= cr >= 0
    return mask
