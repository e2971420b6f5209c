import csv
import io
import json
import xml.etree.ElementTree as ET

import pytest

from laptop_balance.analysis import Regime, SweepRow, verify_corner_constancy
from laptop_balance.optimizer import SearchConfig, solve
from laptop_balance.placement import LaptopSpec, Pose, ShapeClass, TableSpec, symmetric_corner_pose
from laptop_balance.report import CSV_HEADER, Scene, emit_csv, emit_json, render_svg

SVG_NS = "{http://www.w3.org/2000/svg}"
FAST = SearchConfig(grid_xy=24, grid_theta=48)


def polygons(doc):
    root = ET.fromstring(doc.split("\n", 1)[1])
    return root, root.findall(f"{SVG_NS}polygon")


def coords(poly):
    return [tuple(map(float, p.split(","))) for p in poly.get("points").split()]


class TestSvg:
    def test_symmetric_corner_scene(self):
        table = TableSpec(2, 2)
        doc = render_svg(Scene.build(LaptopSpec(1.5), table, symmetric_corner_pose(table)))
        root, polys = polygons(doc)
        filled = [p for p in polys if p.get("fill") != "none"]
        assert len(filled) == 1 and len(coords(filled[0])) == 3
        assert "area = 0.2500" in doc
        for p in polys:
            assert len(coords(p)) >= 3

    def test_full_table_scene(self):
        table = TableSpec(0.3, 0.4)
        doc = render_svg(Scene.build(LaptopSpec(1.2), table, Pose(0.1, 0.2, 0.5)), scale_px_per_unit=100)
        _, polys = polygons(doc)
        fp = [p for p in polys if p.get("fill") == "#4477AA"][0]
        pts = sorted(coords(fp))
        assert pts == pytest.approx(sorted([(0, 0), (30, 0), (30, -40), (0, -40)]))

    def test_annotations(self):
        table = TableSpec(2, 2)
        plain = render_svg(Scene.build(LaptopSpec(1.5), table, Pose(1, 1, 0)))
        root, _ = polygons(plain)
        assert len(root.findall(f"{SVG_NS}text")) == 1
        noted = render_svg(Scene.build(LaptopSpec(1.5), table, Pose(1, 1, 0), [("a < b", (1.0, 1.0))]))
        root, _ = polygons(noted)
        assert len(root.findall(f"{SVG_NS}text")) == 2
        assert "a &lt; b" in noted

    def test_viewbox_covers_scene(self):
        table = TableSpec(2, 2)
        doc = render_svg(Scene.build(LaptopSpec(1.5), table, Pose(0, 0, 0)))
        root, _ = polygons(doc)
        x, y, w, h = map(float, root.get("viewBox").split())
        # laptop spans [-0.75, 2] x [-0.5, 2] in table units at 200 px
        assert x < -150 and x + w > 400 and y < -400 and y + h > 100

    def test_rejects_bad_scale(self):
        table = TableSpec(2, 2)
        with pytest.raises(ValueError):
            render_svg(Scene.build(LaptopSpec(1.5), table, Pose(0, 0, 0)), 0)


class TestJson:
    def test_opt_result(self):
        res = solve(LaptopSpec(1.5), TableSpec(2, 2), FAST)
        doc = json.loads(emit_json(res))
        assert list(doc) == ["min_area", "argmin", "tie_family", "evaluations"]
        assert doc["min_area"] == pytest.approx(0.25, abs=5e-4)
        assert 1 <= len(doc["argmin"]) <= 8
        assert list(doc["argmin"][0]) == ["cx", "cy", "theta", "area"]

    def test_empty_sweep(self):
        assert emit_json([]) == "[]"

    def test_round_trip(self):
        rep = verify_corner_constancy(LaptopSpec(1.0), TableSpec(0.6, 0.6), 16)
        text = emit_json(rep)
        doc = json.loads(text)
        assert list(doc) == ["name", "passed", "max_deviation", "samples", "details"]
        assert json.dumps(doc, indent=2) == text
        assert doc["max_deviation"] == float(format(rep.max_deviation, ".12g"))

    def test_deterministic(self):
        res = solve(LaptopSpec(1.3), TableSpec(0.7, 0.9), FAST)
        assert emit_json(res) == emit_json(res)


def _rows():
    return [
        SweepRow(0.3 * (i + 1), 0.4, 0.1 / 3 * i, Pose(0.1, 0.0, 2.0), Regime.ConjecturedQuarter, ShapeClass.Triangle)
        for i in range(5)
    ]


class TestCsv:
    def test_rows(self):
        text = emit_csv(_rows())
        lines = text.splitlines()
        assert len(lines) == 6
        assert lines[0] == ",".join(CSV_HEADER)

    def test_enum_names_and_digits(self):
        rows = list(csv.reader(io.StringIO(emit_csv(_rows()))))
        assert rows[1][6] == "ConjecturedQuarter" and rows[1][7] == "Triangle"
        assert rows[2][2] == "0.0333333333333"
        assert all("," not in c for c in rows[2])

    def test_row_count(self):
        assert len(emit_csv([]).splitlines()) == 1
