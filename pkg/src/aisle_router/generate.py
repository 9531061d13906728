"""Seeded random warehouse instances."""

from __future__ import annotations

import random

from .model import WarehouseInstance

DEPOT_MODES = ("random", "a1", "interior")


def random_instance(rng: random.Random, aisles: int, picks: int, rectangular: bool = True,
                    max_len: int = 12, depot: str = "random") -> WarehouseInstance:
    """Draw an instance with exactly ``picks`` pick locations.

    Aisle lengths and rail segments are uniform in ``1..max_len`` (aisles
    holding picks need length 2 or more, so ``max_len >= 2`` is required
    whenever ``picks > 0``). Raises ValueError on unsatisfiable bounds.
    """
    if aisles < 1 or picks < 0 or max_len < 1:
        raise ValueError("aisles and max_len must be positive, picks non-negative")
    if depot not in DEPOT_MODES:
        raise ValueError(f"depot must be one of {DEPOT_MODES}")
    need_interior = picks > 0 or depot == "interior"
    lo = 2 if need_interior else 1
    if max_len < lo:
        raise ValueError("max_len must be at least 2 to hold picks or an interior depot")

    if rectangular:
        lengths = [rng.randint(lo, max_len)] * aisles
        top = [rng.randint(1, max_len) for _ in range(aisles - 1)]
        bottom = list(top)
    else:
        lengths = [rng.randint(lo, max_len) for _ in range(aisles)]
        top = [rng.randint(1, max_len) for _ in range(aisles - 1)]
        bottom = [rng.randint(1, max_len) for _ in range(aisles - 1)]

    capacity = sum(length - 1 for length in lengths)
    extra = 1 if depot == "interior" else 0
    if picks + extra > capacity:
        raise ValueError(f"{picks} picks do not fit into {capacity} interior positions")

    taken: set[tuple[int, int]] = set()
    if 2 * (picks + extra) <= capacity:
        while len(taken) < picks:
            j = rng.randrange(aisles)
            taken.add((j, rng.randint(1, lengths[j] - 1)))
    else:
        slots = [(j, p) for j in range(aisles) for p in range(1, lengths[j])]
        taken = set(rng.sample(slots, picks))
    per_aisle: list[list[int]] = [[] for _ in range(aisles)]
    for j, p in taken:
        per_aisle[j].append(p)
    for ps in per_aisle:
        ps.sort()

    if depot == "a1":
        depot_at = (0, 0)
    elif depot == "interior":
        while True:
            j = rng.randrange(aisles)
            p = rng.randint(1, lengths[j] - 1)
            if (j, p) not in taken:
                depot_at = (j, p)
                break
    else:
        while True:
            j = rng.randrange(aisles)
            p = rng.randint(0, lengths[j])
            if (j, p) not in taken:
                depot_at = (j, p)
                break
    return WarehouseInstance(tuple(lengths), tuple(tuple(ps) for ps in per_aisle), tuple(top),
                             tuple(bottom), depot_at)


def small_instance(rng: random.Random, rectangular: bool, max_aisles: int = 4, max_targets: int = 6,
                   max_len: int = 12) -> WarehouseInstance:
    """Desk-scale instance: 2..max_aisles aisles, at least one pick and at
    most ``max_targets`` interior targets counting an interior depot."""
    aisles = rng.randint(2, max_aisles)
    picks = rng.randint(1, max_targets)
    while True:
        try:
            inst = random_instance(rng, aisles, picks, rectangular=rectangular, max_len=max_len)
        except ValueError:
            picks = max(1, picks - 1)
            continue
        if sum(len(ts) for ts in inst.interior_targets) <= max_targets:
            return inst
