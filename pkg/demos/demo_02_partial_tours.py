"""
What the sweep remembers
========================

Cut a tour just left of some aisle. Whatever lies to the left only matters
through the degree parity of the two corners of that aisle and through
which corners share a component. Seven such classes exist, and they are the
whole state of the dynamic program.
"""

from aisle_router import Side, WarehouseInstance, pts_class, restrict, solve

inst = WarehouseInstance(
    aisle_lengths=(8, 8, 8, 8),
    picks=((2, 6), (), (3,), (1, 5, 7)),
    top_segments=(3, 2, 4),
    bottom_segments=(3, 2, 4),
    depot=(1, 0),
)
sol = solve(inst)
print("optimal length", sol.length)

###############################################################################
# Class of the left part at each cut. ``U`` is odd degree, ``E`` even and
# nonzero, ``0`` untouched; the trailing ``1C``/``2C`` counts components.

for j in range(inst.aisle_count):
    side = Side.left(j)
    print(f"left of aisle {j + 1}:", pts_class(inst, restrict(inst, sol.tour, side), side))

###############################################################################
# The table keeps at most one entry per class and stage. Even stages follow
# an aisle, odd stages follow the rails after it.

for stage, count in enumerate(sol.table.entry_counts()):
    entries = sol.table.entries(stage)
    print(stage, count, {str(c): e.cost for c, e in entries.items()})
