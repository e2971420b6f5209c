"""Coarse grid search plus compass pattern search over stable poses."""
from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Optional

import numpy as np

from .geometry import angular_distance, canonical_angle
from .placement import LaptopSpec, Pose, StabilityError, TableSpec, footprint_areas, is_stable

CLUSTER_RADIUS = 1e-3


@dataclass(frozen=True)
class SearchConfig:
    grid_xy: int = 64
    grid_theta: int = 96
    refine_initial_step_xy: Optional[float] = None  # None: min(W, H) / grid_xy
    refine_initial_step_theta: Optional[float] = None  # None: pi / grid_theta
    refine_min_step: float = 1e-10
    refine_max_iters: int = 200
    tie_tolerance: float = 1e-6
    top_k_seeds: int = 16
    use_symmetry_reduction: bool = True
    seed: int = 0

    def __post_init__(self):
        for name in ("grid_xy", "grid_theta", "refine_max_iters", "top_k_seeds"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")
        if self.grid_xy < 2:
            raise ValueError("grid_xy must be at least 2")
        if not self.refine_min_step > 0 or not self.tie_tolerance >= 0:
            raise ValueError("refine_min_step must be positive and tie_tolerance nonnegative")
        for name in ("refine_initial_step_xy", "refine_initial_step_theta"):
            v = getattr(self, name)
            if v is not None and not v > self.refine_min_step:
                raise ValueError(f"{name} must exceed refine_min_step")

    def steps_for(self, table: TableSpec) -> tuple[float, float]:
        sxy = self.refine_initial_step_xy
        if sxy is None:
            sxy = table.min_side / self.grid_xy
        sth = self.refine_initial_step_theta
        if sth is None:
            sth = math.pi / self.grid_theta
        return sxy, sth


@dataclass
class OptResult:
    min_area: float
    argmin_poses: list[Pose]
    argmin_areas: list[float]
    is_tie_family: bool
    evaluations: int
    refined: bool = True
    candidates: list[tuple[Pose, float]] = field(default_factory=list, repr=False)

    @property
    def best_pose(self) -> Pose:
        return self.argmin_poses[0]


def _sorted_rows(rows: np.ndarray) -> np.ndarray:
    """Sort (area, cx, cy, theta) rows lexicographically."""
    order = np.lexsort((rows[:, 3], rows[:, 2], rows[:, 1], rows[:, 0]))
    return rows[order]


def _grid(laptop, table, config):
    w, h = table.width, table.height
    if config.use_symmetry_reduction:
        xs = np.linspace(0.0, 0.5 * w, config.grid_xy)
        ys = np.linspace(0.0, 0.5 * h, config.grid_xy)
    else:
        xs = np.linspace(0.0, w, config.grid_xy)
        ys = np.linspace(0.0, h, config.grid_xy)
    ts = np.arange(config.grid_theta) * (math.pi / config.grid_theta)
    X, Y, T = np.meshgrid(xs, ys, ts, indexing="ij")
    A = footprint_areas(laptop, table, X, Y, T)
    return np.column_stack((A.ravel(), X.ravel(), Y.ravel(), T.ravel()))


def _reflect(rows: np.ndarray, table: TableSpec) -> np.ndarray:
    """All four images of quadrant rows under the table's mirror symmetries."""
    a, x, y, t = rows.T
    flip_t = np.where(t == 0.0, 0.0, math.pi - t)
    images = [
        rows,
        np.column_stack((a, table.width - x, y, flip_t)),
        np.column_stack((a, x, table.height - y, flip_t)),
        np.column_stack((a, table.width - x, table.height - y, t)),
    ]
    return np.unique(np.vstack(images), axis=0)


def _grid_search(laptop, table, config):
    rows = _grid(laptop, table, config)
    evals = len(rows)
    k = min(config.top_k_seeds, len(rows))
    if config.use_symmetry_reduction:
        # every image shares its source's area, so candidates come from the k best sources
        cutoff = np.partition(rows[:, 0], k - 1)[k - 1]
        rows = _reflect(rows[rows[:, 0] <= cutoff], table)
    else:
        cutoff = np.partition(rows[:, 0], k - 1)[k - 1]
        rows = rows[rows[:, 0] <= cutoff]
    best = _sorted_rows(rows)[:k]
    return [(Pose(x, y, t), float(a)) for a, x, y, t in best], evals


def grid_search(laptop: LaptopSpec, table: TableSpec, config: SearchConfig = SearchConfig()):
    """Top ``config.top_k_seeds`` grid poses, ordered by (area, cx, cy, theta)."""
    return _grid_search(laptop, table, config)[0]


def _refine(laptop, table, seed_pose, config, trace=None):
    if not is_stable(seed_pose, table):
        raise StabilityError(f"seed pose {seed_pose} is not stable")
    w, h = table.width, table.height
    sxy, sth = config.steps_for(table)
    x, y, t = seed_pose.as_tuple()
    cur = float(footprint_areas(laptop, table, x, y, t))
    evals = 1
    if trace is not None:
        trace.append(cur)
    for _ in range(config.refine_max_iters):
        if max(sxy, sth) < config.refine_min_step:
            break
        cand_x = np.clip([x + sxy, x - sxy, x, x, x, x], 0.0, w)
        cand_y = np.clip([y, y, y + sxy, y - sxy, y, y], 0.0, h)
        cand_t = np.mod([t, t, t, t, t + sth, t - sth], math.pi)
        areas = footprint_areas(laptop, table, cand_x, cand_y, cand_t)
        evals += 6
        i = int(np.argmin(areas))
        if areas[i] < cur:
            x, y, t = float(cand_x[i]), float(cand_y[i]), canonical_angle(cand_t[i])
            cur = float(areas[i])
        else:
            sxy *= 0.5
            sth *= 0.5
        if trace is not None:
            trace.append(cur)
    return Pose(x, y, t), cur, evals


def refine(
    laptop: LaptopSpec,
    table: TableSpec,
    seed_pose: Pose,
    config: SearchConfig = SearchConfig(),
    trace: Optional[list] = None,
) -> tuple[Pose, float]:
    """Compass search from ``seed_pose``; never returns a worse pose than the seed.

    If ``trace`` is a list, the running best area is appended after every poll.
    """
    pose, area, _ = _refine(laptop, table, seed_pose, config, trace)
    return pose, area


def pose_distance(p: Pose, q: Pose) -> float:
    return max(abs(p.cx - q.cx), abs(p.cy - q.cy), angular_distance(p.theta, q.theta))


def _cluster(results, tie_tolerance):
    best = min(a for _, a in results)
    near = sorted(
        ((p, a) for p, a in results if a - best <= tie_tolerance),
        key=lambda pa: pa[0].as_tuple(),
    )
    reps: list[tuple[Pose, float]] = []
    for p, a in near:
        if all(pose_distance(p, r) > CLUSTER_RADIUS for r, _ in reps):
            reps.append((p, a))
    return best, reps


def theta_profile(laptop, table, cx, cy, samples):
    ts = np.arange(samples) * (math.pi / samples)
    return ts, footprint_areas(laptop, table, np.full(samples, cx), np.full(samples, cy), ts)


def solve(laptop: LaptopSpec, table: TableSpec, config: SearchConfig = SearchConfig()) -> OptResult:
    seeds, evals = _grid_search(laptop, table, config)
    refined = []
    for pose, _ in seeds:
        p, a, n = _refine(laptop, table, pose, config)
        evals += n
        refined.append((p, a))
    best, reps = _cluster(refined, config.tie_tolerance)
    # a continuum of optima shows up as a flat profile in theta at the optimum
    top = reps[0][0] if reps else min(refined, key=lambda pa: pa[1])[0]
    _, prof = theta_profile(laptop, table, top.cx, top.cy, config.grid_theta)
    evals += config.grid_theta
    tie = bool(prof.max() - prof.min() <= config.tie_tolerance)
    return OptResult(
        min_area=best,
        argmin_poses=[p for p, _ in reps],
        argmin_areas=[a for _, a in reps],
        is_tie_family=tie,
        evaluations=evals,
        refined=True,
        candidates=refined,
    )


def with_overrides(config: SearchConfig, **kwargs) -> SearchConfig:
    return replace(config, **{k: v for k, v in kwargs.items() if v is not None})
