"""
Balancing on a corner
=====================

A square laptop whose midpoint sits on a table corner always covers a
quarter of itself, whatever its angle. An oblong laptop covers more, except
at one 45-degree orientation.
"""
import math

import numpy as np

from laptop_balance import LaptopSpec, TableSpec, footprint_areas, verify_corner_constancy, verify_corner_sweep

# %%
# Square laptop, midpoint at (0, 0), sweep the angle.
table = TableSpec(2.0, 2.0)
thetas = np.linspace(0, math.pi, 7, endpoint=False)
areas = footprint_areas(LaptopSpec(1.0), table, 0.0, 0.0, thetas)
for t, a in zip(thetas, areas):
    print(f"theta={math.degrees(t):6.1f} deg  footprint={a:.12f}")

report = verify_corner_constancy(LaptopSpec(1.0), table, 360)
print("constancy on 2x2:", report.passed, "max deviation", report.max_deviation)

# %%
# The table must be at least 1/sqrt(2) wide, otherwise the turned square
# pokes off the far edges.
for side in (1 / math.sqrt(2), 0.6):
    rep = verify_corner_constancy(LaptopSpec(1.0), TableSpec(side, side), 360)
    print(f"side {side:.4f}: passed={rep.passed} worst theta={math.degrees(rep.notes['worst_theta']):.1f} deg")

# %%
# An oblong laptop: the extra beyond 1/4 vanishes only at 135 degrees.
rep = verify_corner_sweep(LaptopSpec(1.5), table, 720)
print("oblong sweep passed:", rep.passed)
print("area at 0:", rep.notes["area_at_zero"], " minimum:", rep.notes["min_area"])
print("minimising angles (deg):", [round(math.degrees(t), 6) for t in rep.notes["argmin_thetas"]])
