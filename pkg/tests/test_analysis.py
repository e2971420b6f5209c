import math

import pytest

from laptop_balance.analysis import (
    CORNER_LEG,
    Regime,
    RegimeError,
    classify_regime,
    scenario2_analyze,
    sweep_tables,
    verify_bounds,
    verify_corner_constancy,
    verify_corner_sweep,
    verify_scenario2,
)
from laptop_balance.optimizer import SearchConfig
from laptop_balance.placement import LaptopSpec, ShapeClass, TableSpec

SQUARE = LaptopSpec(1.0)
LAPTOP = LaptopSpec(1.5)
FAST = SearchConfig(grid_xy=24, grid_theta=48)


def test_thresholds():
    assert CORNER_LEG == pytest.approx(0.70710678, abs=1e-8)


class TestConstancy:
    def test_large_table(self):
        rep = verify_corner_constancy(SQUARE, TableSpec(2, 2), 360)
        assert rep.passed and rep.max_deviation <= 1e-9
        assert rep.notes["claim_applies"]

    def test_boundary_table(self):
        rep = verify_corner_constancy(SQUARE, TableSpec(CORNER_LEG, CORNER_LEG), 360)
        assert rep.passed

    def test_too_small(self):
        rep = verify_corner_constancy(SQUARE, TableSpec(0.6, 0.6), 360)
        assert not rep.passed
        assert math.fmod(rep.notes["worst_theta"], math.pi / 2) == pytest.approx(math.pi / 4, abs=1e-12)
        assert not rep.notes["claim_applies"]

    def test_rejects_oblong(self):
        with pytest.raises(ValueError):
            verify_corner_constancy(LAPTOP, TableSpec(2, 2))

    def test_reproducible(self):
        assert verify_corner_constancy(SQUARE, TableSpec(2, 2)) == verify_corner_constancy(SQUARE, TableSpec(2, 2))


class TestCornerSweep:
    def test_laptop_15(self):
        rep = verify_corner_sweep(LAPTOP, TableSpec(2, 2))
        assert rep.passed
        assert rep.notes["area_at_zero"] == pytest.approx(0.375, abs=1e-9)
        assert rep.notes["min_area"] == pytest.approx(0.25, abs=1e-9)

    def test_laptop_2(self):
        rep = verify_corner_sweep(LaptopSpec(2.0), TableSpec(2, 2))
        assert rep.passed
        assert rep.notes["area_at_zero"] == pytest.approx(0.5, abs=1e-9)

    def test_laptop_11_unique(self):
        rep = verify_corner_sweep(LaptopSpec(1.1), TableSpec(2, 2), 720)
        assert rep.passed
        assert rep.notes["argmin_thetas"] == [pytest.approx(0.75 * math.pi)]

    def test_rejects(self):
        with pytest.raises(ValueError):
            verify_corner_sweep(SQUARE, TableSpec(2, 2))
        with pytest.raises(RegimeError):
            verify_corner_sweep(LAPTOP, TableSpec(0.5, 2))


class TestBounds:
    @pytest.mark.parametrize(
        "length,w,h", [(1.5, 1.0, 1.5), (1.0, math.sqrt(2), math.sqrt(2)), (3.0, 1.0, 1.0)]
    )
    def test_passes(self, length, w, h):
        rep = verify_bounds(LaptopSpec(length), TableSpec(w, h), 100_000, seed=1)
        assert rep.passed
        assert rep.notes["symmetric_area"] <= 0.25 + 1e-9

    def test_rejects_small_table(self):
        with pytest.raises(RegimeError):
            verify_bounds(LAPTOP, TableSpec(0.9, 2))

    def test_reproducible(self):
        a = verify_bounds(LAPTOP, TableSpec(1, 1.5), 2000, seed=4)
        b = verify_bounds(LAPTOP, TableSpec(1, 1.5), 2000, seed=4)
        assert a == b


class TestRegime:
    @pytest.mark.parametrize(
        "w,h,expected",
        [
            (0.3, 0.4, Regime.FullTable),
            (2, 2, Regime.TheoremRegime),
            (1.0, 5.0, Regime.TheoremRegime),
            (CORNER_LEG, 0.9, Regime.ConjecturedQuarter),
            (math.sqrt(0.5), 3.0, Regime.ConjecturedQuarter),
            (0.28, 0.45, Regime.CornerTriangle),
            (0.37, 0.37, Regime.CornerTriangle),
            # a 0.52 side lets a two-corner strip stick out
            (0.06, 0.52, Regime.Complex),
            (0.5, 0.6, Regime.Complex),
        ],
    )
    def test_labels(self, w, h, expected):
        assert classify_regime(LaptopSpec(1.2 if w == 0.3 else 1.5), TableSpec(w, h)) is expected

    def test_deterministic(self):
        t = TableSpec(0.4, 0.45)
        assert classify_regime(LAPTOP, t, 5000, 3) is classify_regime(LAPTOP, t, 5000, 3)


class TestScenario2:
    def test_square_table_isosceles(self):
        rep = scenario2_analyze(LAPTOP, TableSpec(0.37, 0.37), FAST)
        assert rep.regime is Regime.CornerTriangle
        assert rep.piece_is_triangle
        assert rep.leg_difference <= 1e-3
        assert rep.is_isosceles
        # bookkeeping: footprint plus exposed triangle is the table
        assert rep.min_area + 0.5 * rep.legs[0] * rep.legs[1] == pytest.approx(0.37**2, abs=1e-6)
        assert rep.cross_check_min_area >= rep.min_area - 1e-9

    def test_thin_table_not_isosceles(self):
        rep = scenario2_analyze(LAPTOP, TableSpec(0.06, 0.52), FAST)
        assert rep.leg_difference > 1e-2
        assert rep.degrees_from_perpendicular < 5.0

    def test_oblong_corner_triangle(self):
        t = TableSpec(0.28, 0.45)
        rep = scenario2_analyze(LAPTOP, t, FAST)
        assert rep.piece_is_triangle
        assert rep.min_area + 0.5 * rep.legs[0] * rep.legs[1] == pytest.approx(t.area, abs=1e-6)

    @pytest.mark.parametrize("w,h", [(0.3, 0.4), (2, 2), (0.8, 0.8)])
    def test_rejects_other_regimes(self, w, h):
        with pytest.raises(RegimeError):
            scenario2_analyze(LAPTOP, TableSpec(w, h), FAST)

    def test_verify_wrapper(self):
        assert verify_scenario2(LAPTOP, TableSpec(0.37, 0.37), FAST).passed
        assert verify_scenario2(LAPTOP, TableSpec(0.28, 0.45), FAST).passed


class TestSweep:
    def test_rows(self):
        rows = sweep_tables(LAPTOP, [(s, s) for s in (0.3, 0.4, 0.8, 1.0, 2.0)], FAST)
        assert len(rows) == 5
        by_side = {r.table_w: r for r in rows}
        assert by_side[2.0].min_area == pytest.approx(0.25, abs=5e-4)
        assert by_side[0.3].min_area == pytest.approx(0.09, abs=1e-9)
        assert by_side[0.3].regime is Regime.FullTable
        assert by_side[0.8].regime is Regime.ConjecturedQuarter
        assert by_side[1.0].regime is Regime.TheoremRegime
        assert by_side[2.0].footprint_shape is ShapeClass.Triangle
        for r in rows:
            assert r.min_area <= 0.25 + 1e-9

    def test_empty(self):
        with pytest.raises(ValueError):
            sweep_tables(LAPTOP, [], FAST)
