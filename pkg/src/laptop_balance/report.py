"""SVG, JSON and CSV output."""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from typing import Sequence, Union
from xml.sax.saxutils import escape

from .analysis import SweepRow, VerificationReport
from .optimizer import OptResult
from .placement import FootprintReport, LaptopSpec, Pose, TableSpec, footprint, laptop_polygon

DEFAULT_SCALE = 200.0
TABLE_FILL = "#DDDDDD"
LAPTOP_STROKE = "#333333"
FOOTPRINT_FILL = "#4477AA"
FOOTPRINT_OPACITY = 0.7
SIG_DIGITS = 12


@dataclass
class Scene:
    table: TableSpec
    laptop: LaptopSpec
    pose: Pose
    footprint: FootprintReport
    annotations: list[tuple[str, tuple[float, float]]] = field(default_factory=list)

    @classmethod
    def build(cls, laptop: LaptopSpec, table: TableSpec, pose: Pose, annotations=()) -> "Scene":
        return cls(table, laptop, pose, footprint(laptop, table, pose), list(annotations))


def _num(v: float) -> str:
    return format(float(v), f".{SIG_DIGITS}g")


def _round(v: float) -> float:
    return float(_num(v))


def _px(v: float) -> str:
    s = f"{v:.3f}".rstrip("0").rstrip(".")
    return "0" if s in ("-0", "") else s


def render_svg(scene: Scene, scale_px_per_unit: float = DEFAULT_SCALE) -> str:
    """Table, laptop outline, shaded footprint, midpoint and an area label.

    The y axis points up, as in the table frame; SVG coordinates are flipped.
    """
    if not scale_px_per_unit > 0:
        raise ValueError("scale must be positive")
    s = scale_px_per_unit
    lap = laptop_polygon(scene.laptop, scene.pose)
    w, h = scene.table.width, scene.table.height
    xs = [0.0, w] + [p.x for p in lap.vertices]
    ys = [0.0, h] + [p.y for p in lap.vertices]
    xmin, xmax, ymin, ymax = min(xs), max(xs), min(ys), max(ys)
    mx, my = 0.1 * (xmax - xmin), 0.1 * (ymax - ymin)
    vb = (
        (xmin - mx) * s,
        -(ymax + my) * s,
        (xmax - xmin + 2 * mx) * s,
        (ymax - ymin + 2 * my) * s,
    )

    def pts(poly):
        return " ".join(f"{_px(p.x * s)},{_px(-p.y * s)}" for p in poly.vertices)

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'viewBox="{" ".join(_px(v) for v in vb)}" width="{_px(vb[2])}" height="{_px(vb[3])}">',
        f'<rect x="0" y="{_px(-h * s)}" width="{_px(w * s)}" height="{_px(h * s)}" fill="{TABLE_FILL}"/>',
    ]
    fp = scene.footprint.polygon
    if not fp.is_empty:
        out.append(
            f'<polygon points="{pts(fp)}" fill="{FOOTPRINT_FILL}" fill-opacity="{FOOTPRINT_OPACITY}"/>'
        )
    out.append(
        f'<polygon points="{pts(lap)}" fill="none" stroke="{LAPTOP_STROKE}" stroke-width="{_px(0.01 * s)}"/>'
    )
    out.append(
        f'<circle cx="{_px(scene.pose.cx * s)}" cy="{_px(-scene.pose.cy * s)}" r="{_px(0.015 * s)}" fill="{LAPTOP_STROKE}"/>'
    )
    font = _px(0.06 * s)
    out.append(
        f'<text x="{_px((xmin - 0.5 * mx) * s)}" y="{_px(-(ymax + 0.4 * my) * s)}" font-size="{font}" '
        f'font-family="sans-serif">area = {scene.footprint.area:.4f}</text>'
    )
    for text, (ax, ay) in scene.annotations:
        out.append(
            f'<text x="{_px(ax * s)}" y="{_px(-ay * s)}" font-size="{font}" font-family="sans-serif">{escape(text)}</text>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"


def _pose_dict(pose: Pose, area: float) -> dict:
    return {"cx": _round(pose.cx), "cy": _round(pose.cy), "theta": _round(pose.theta), "area": _round(area)}


def _jsonable(v):
    if v is None or isinstance(v, (bool, int, str)):
        return v
    if isinstance(v, float):
        return _round(v)
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if hasattr(v, "item"):
        return _jsonable(v.item())
    return str(v)


def _sweep_dict(row: SweepRow) -> dict:
    return {
        "table_w": _round(row.table_w),
        "table_h": _round(row.table_h),
        "min_area": _round(row.min_area),
        "cx": _round(row.argmin_pose.cx),
        "cy": _round(row.argmin_pose.cy),
        "theta": _round(row.argmin_pose.theta),
        "regime": row.regime.value,
        "shape": row.footprint_shape.name,
    }


def to_document(result: Union[OptResult, VerificationReport, Sequence[SweepRow]]):
    if isinstance(result, OptResult):
        return {
            "min_area": _round(result.min_area),
            "argmin": [_pose_dict(p, a) for p, a in zip(result.argmin_poses, result.argmin_areas)],
            "tie_family": bool(result.is_tie_family),
            "evaluations": int(result.evaluations),
        }
    if isinstance(result, VerificationReport):
        return {
            "name": result.name,
            "passed": bool(result.passed),
            "max_deviation": _round(result.max_deviation),
            "samples": int(result.samples),
            "details": [
                {"input": _jsonable(inp), "measured": _round(m), "expected": _round(e)}
                for inp, m, e in result.details
            ],
        }
    return [_sweep_dict(r) for r in result]


def emit_json(result: Union[OptResult, VerificationReport, Sequence[SweepRow]]) -> str:
    """Keys keep the documented order; numbers carry 12 significant digits."""
    return json.dumps(to_document(result), indent=2, allow_nan=False)


CSV_HEADER = ["table_w", "table_h", "min_area", "cx", "cy", "theta", "regime", "shape"]


def emit_csv(rows: Sequence[SweepRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\r\n")
    writer.writerow(CSV_HEADER)
    for r in rows:
        writer.writerow(
            [
                _num(r.table_w),
                _num(r.table_h),
                _num(r.min_area),
                _num(r.argmin_pose.cx),
                _num(r.argmin_pose.cy),
                _num(r.argmin_pose.theta),
                r.regime.value,
                r.footprint_shape.name,
            ]
        )
    return buf.getvalue()


def deviation_table(rows: Sequence[SweepRow], target: float = 0.25) -> list[tuple[float, float, float, float]]:
    """(table_w, table_h, min_area, min_area - target) per row; purely descriptive."""
    return [(r.table_w, r.table_h, r.min_area, r.min_area - target) for r in rows]
