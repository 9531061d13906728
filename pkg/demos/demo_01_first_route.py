"""
Routing a picker through a small warehouse
==========================================

Two aisles of length 10 joined by cross aisles of length 2 at the top and
at the bottom. Aisle 1 holds picks 3 and 7 units below its top, aisle 2
holds one pick at 5. The picker starts and ends at the top of aisle 1.
"""

from pathlib import Path
import tempfile

from aisle_router import WarehouseInstance, solve, validate_tour, write_svg, RenderSpec
from aisle_router.formats import dumps_tour

inst = WarehouseInstance(
    aisle_lengths=(10, 10),
    picks=((3, 7), (5,)),
    top_segments=(2,),
    bottom_segments=(2,),
    depot=(0, 0),
)

###############################################################################
# The solver sweeps the aisles left to right. Its answer is the loop down
# one aisle and up the other.

sol = solve(inst)
print("length:", sol.length)
print("plan:", sol.plan)
print("valid:", validate_tour(inst, sol.tour) is None)

###############################################################################
# Tours are edge multisets. In files, aisle numbers start at 1 and vertices
# are named ``a<j>`` (top), ``b<j>`` (bottom) and ``p<j>.<k>`` (k-th pick).

print(dumps_tour(inst, sol.tour))

###############################################################################
# The drawing marks corners as dots, picks as rings and the depot as a square.

out = Path(tempfile.gettempdir()) / "first_route.svg"
write_svg(inst, sol.tour, RenderSpec(output=out))
print("wrote", out)
