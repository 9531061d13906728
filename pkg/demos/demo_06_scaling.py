"""
Running time grows linearly
===========================

The sweep does a constant amount of work per aisle and per pick, so
doubling the warehouse roughly doubles the time.
"""

import random
import time

from aisle_router import solve
from aisle_router.generate import random_instance

for aisles in (12_500, 25_000, 50_000, 100_000):
    inst = random_instance(random.Random(aisles), aisles, 3 * aisles, rectangular=True, max_len=20)
    t0 = time.perf_counter()
    sol = solve(inst)
    elapsed = time.perf_counter() - t0
    print(f"{aisles:>7} aisles  {elapsed:6.3f}s  length {sol.length}  widest stage {max(sol.table.entry_counts())}")
