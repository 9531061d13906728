"""
When aisles differ in length
============================

The rewrite above needs equal aisles and equal top and bottom rails. Drop
that and some warehouses force a walk down and back a whole aisle. A seeded
search over two-aisle warehouses finds one.
"""

from pathlib import Path
import tempfile

from aisle_router import RenderSpec, brute_force_optimum, find_counterexample, solve, write_svg
from aisle_router.model import full_double_aisles

inst = find_counterexample(seed=0)
print(inst)

best = solve(inst)
restricted = solve(inst, allow_full_double=False)
print("optimum", best.length, "plan", best.plan)
print("without full doubles", restricted.length)

optima = brute_force_optimum(inst, enumerate_all=True).optima
print("every optimum doubles an aisle:", all(full_double_aisles(inst, t) for t in optima))

out = Path(tempfile.gettempdir()) / "irregular.svg"
write_svg(inst, best.tour, RenderSpec(output=out, scale=30))
print("wrote", out)
