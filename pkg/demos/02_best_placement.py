"""
Finding the best placement
==========================

Grid search plus pattern search over every stable placement, then a figure
of the winner in the style of the classic corner picture.
"""
import math
from pathlib import Path

from laptop_balance import LaptopSpec, Scene, SearchConfig, TableSpec, footprint, render_svg, solve, verify_bounds

out = Path.cwd() / "demo_output"
out.mkdir(exist_ok=True)

laptop = LaptopSpec(1.6)
table = TableSpec(1.2, 1.8)

# %%
result = solve(laptop, table, SearchConfig())
print(f"min area {result.min_area:.12f} after {result.evaluations} evaluations")
for pose in result.argmin_poses:
    print(f"  midpoint ({pose.cx:.6f}, {pose.cy:.6f}), angle {math.degrees(pose.theta):.4f} deg")

best = result.best_pose
rep = footprint(laptop, table, best)
print("footprint:", rep.shape_class.name, "isosceles right:", rep.is_isosceles_right_triangle)

# %%
# A square laptop has a whole family of optima over each corner.
square = solve(LaptopSpec(1.0), TableSpec(2.0, 2.0), SearchConfig(grid_xy=32, grid_theta=48))
print("square laptop: min", round(square.min_area, 12), "tie family:", square.is_tie_family)

# %%
# Random placements on a table at least 1 wide never do better than 1/4.
bounds = verify_bounds(LaptopSpec(1.5), TableSpec(1.0, 1.5), 100_000, seed=1)
print("lower bound holds:", bounds.passed, "smallest sampled:", round(bounds.notes["min_sampled_area"], 6))

# %%
svg = render_svg(Scene.build(laptop, table, best, [("midpoint on the corner", (0.1, -0.15))]))
(out / "best_placement.svg").write_text(svg)
print("wrote", out / "best_placement.svg")
