"""
Checking the sweep against brute force
======================================

For desk-sized warehouses every edge multiplicity in {0, 1, 2} can be
tried. The exhaustive search is slow but independent, so agreement on many
random instances is strong evidence that the sweep is exact.
"""

import random

from aisle_router import brute_force_optimum, solve
from aisle_router.generate import small_instance

rng = random.Random(0)
agree = 0
for i in range(100):
    inst = small_instance(rng, rectangular=i % 2 == 0)
    exact = brute_force_optimum(inst).length
    fast = solve(inst).length
    agree += exact == fast
    if i < 5:
        print(inst.aisle_lengths, inst.picks, "->", fast, exact)
print(f"{agree}/100 instances agree")

###############################################################################
# The search can also list every optimal tour.

inst = small_instance(random.Random(3), rectangular=True)
result = brute_force_optimum(inst, enumerate_all=True)
print(len(result.optima), "optimal tours of length", result.length)
