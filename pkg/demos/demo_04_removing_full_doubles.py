"""
Removing aisles walked down and back
====================================

In a rectangular warehouse any tour that walks some aisle all the way down
and back up can be rewritten, one aisle pair at a time, into a tour that is
no longer and does not do so. Each step reports which of the three rewrite
cases applied and whether the pair had to be mirrored first.
"""

from aisle_router import WarehouseInstance, eliminate_all, iter_reductions, tour_length, validate_tour
from aisle_router.model import full_double_aisles

inst = WarehouseInstance(
    aisle_lengths=(10,) * 5,
    picks=((4,), (2, 6), (5,), (1, 8), (7,)),
    top_segments=(3,) * 4,
    bottom_segments=(3,) * 4,
)

###############################################################################
# A comb: every aisle walked down and back, joined along the top rail.

comb = {e: 2 for j in range(5) for e in inst.aisle_edges(j)}
comb.update({inst.top_rail(j): 2 for j in range(4)})
print("comb length", tour_length(inst, comb), "doubled aisles", full_double_aisles(inst, comb))

for step in iter_reductions(inst, comb):
    print(step.log_line())

###############################################################################
# The end result is still a tour, and shorter.

out = eliminate_all(inst, comb)
print("after", tour_length(inst, out), "valid", validate_tour(inst, out) is None,
      "doubled aisles", full_double_aisles(inst, out))
