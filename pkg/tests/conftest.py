import math

import pytest
from hypothesis import assume
from hypothesis import strategies as st

from laptop_balance.geometry import box_polygon, convex_hull, polygon_area

SQRT_HALF = math.sqrt(0.5)


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: long-running numeric checks")


@pytest.fixture
def unit_square():
    return box_polygon(0.0, 0.0, 1.0, 1.0)


@pytest.fixture
def diamond():
    # {|x| + |y| <= 1/sqrt(2)}
    r = SQRT_HALF
    return convex_hull([(r, 0.0), (0.0, r), (-r, 0.0), (0.0, -r)])


coord = st.floats(min_value=-2.0, max_value=2.0, allow_nan=False, allow_infinity=False)


@st.composite
def convex_polygons(draw, min_area=1e-3):
    pts = draw(st.lists(st.tuples(coord, coord), min_size=3, max_size=10))
    poly = convex_hull(pts)
    assume(not poly.is_empty and polygon_area(poly) > min_area)
    return poly


ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def acceptance_log():
    return ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
