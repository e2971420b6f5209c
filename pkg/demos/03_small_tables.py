"""
Really small bedside tables
===========================

Below the theorem regime the answer depends on how small the table is.
"""
from laptop_balance import LaptopSpec, SearchConfig, TableSpec, classify_regime, scenario2_analyze, solve

laptop = LaptopSpec(1.5)
cfg = SearchConfig(grid_xy=32, grid_theta=64)

# %%
# Diagonal at most 1/2: the laptop covers the whole table wherever it sits.
tiny = TableSpec(0.3, 0.4)
res = solve(laptop, tiny, cfg)
print(classify_regime(laptop, tiny).value, "min area", round(res.min_area, 12), "table area", tiny.area)

# %%
# A little larger: only a corner triangle can stick out. On a square table
# the best exposed triangle is isosceles.
for w, h in [(0.37, 0.37), (0.28, 0.45)]:
    rep = scenario2_analyze(laptop, TableSpec(w, h), cfg)
    print(
        f"{w}x{h}: {rep.regime.value}, legs {rep.legs[0]:.6f} / {rep.legs[1]:.6f}, "
        f"difference {rep.leg_difference:.2e}, corner optimum {rep.min_area:.6f}, "
        f"full search {rep.cross_check_min_area:.6f}"
    )

# %%
# A very thin table: the exposed piece is lopsided, and the laptop's long
# side ends up nearly perpendicular to the table diagonal.
thin = scenario2_analyze(laptop, TableSpec(0.06, 0.52), cfg)
print(
    f"thin table: {thin.regime.value}, legs {thin.legs[0]:.4f} / {thin.legs[1]:.4f}, "
    f"{thin.degrees_from_perpendicular:.2f} deg from perpendicular"
)
