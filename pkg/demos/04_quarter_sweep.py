"""
Tables between 1/sqrt(2) and 1 wide
===================================

Numerical evidence only: solve on square tables in the open range and
record how far each optimum is from 1/4.
"""
from pathlib import Path

from laptop_balance import LaptopSpec, SearchConfig, emit_csv, emit_json, sweep_tables

out = Path.cwd() / "demo_output"
out.mkdir(exist_ok=True)

sides = [0.71, 0.75, 0.8, 0.9, 0.99]
rows = sweep_tables(LaptopSpec(1.5), [(s, s) for s in sides], SearchConfig(grid_xy=32, grid_theta=96))

# %%
for r in rows:
    print(f"side {r.table_w:.2f}  min {r.min_area:.12f}  minus 1/4 {r.min_area - 0.25:+.2e}  {r.regime.value}")

(out / "quarter_sweep.csv").write_text(emit_csv(rows))
(out / "quarter_sweep.json").write_text(emit_json(rows))
print("wrote", out / "quarter_sweep.csv")
