"""Shared builders and an independent tour checker for the test suite."""

from __future__ import annotations

import random
from pathlib import Path

import networkx as nx
from hypothesis import strategies as st

from aisle_router.generate import small_instance
from aisle_router.model import TourSubgraph, WarehouseInstance

FIXTURES = Path(__file__).parent / "fixtures"

# filled by the acceptance tests, printed at the end of the session
ACCEPTANCE_LINES: list[str] = []

E1 = WarehouseInstance((10, 10), ((3, 7), (5,)), (2,), (2,), (0, 0))


def e1_square() -> TourSubgraph:
    """Single pass down both aisles plus both rails: the optimum of E1."""
    inst = E1
    t = {e: 1 for e in inst.aisle_edges(0)}
    t.update({e: 1 for e in inst.aisle_edges(1)})
    t[inst.top_rail(0)] = 1
    t[inst.bottom_rail(0)] = 1
    return TourSubgraph(t)


def aisle(inst: WarehouseInstance, j: int, mult: int) -> dict:
    return {e: mult for e in inst.aisle_edges(j)}


def nx_is_tour(inst: WarehouseInstance, t) -> bool:
    """Tour check written against networkx, independent of validate_tour."""
    g = nx.MultiGraph()
    for (u, v), m in t.items():
        for _ in range(m):
            g.add_edge(u, v)
    required = {(j, p) for j in range(inst.aisle_count) for p in inst.picks[j]}
    required.add(tuple(inst.depot))
    if any(v not in g or g.degree(v) == 0 for v in required):
        return False
    if any(d % 2 for _, d in g.degree()):
        return False
    return nx.is_connected(g)


def corner_parities(inst: WarehouseInstance, t, aisles) -> dict:
    deg = TourSubgraph(t).degrees()
    return {v: deg.get(v, 0) % 2 for j in aisles for v in (inst.top(j), inst.bottom(j))}


@st.composite
def instances(draw, rectangular: bool | None = None, max_aisles: int = 4, max_targets: int = 6,
              max_len: int = 12) -> WarehouseInstance:
    """Desk-scale instances, drawn through the package generator from a hypothesis seed."""
    seed = draw(st.integers(0, 2**32 - 1))
    rect = draw(st.booleans()) if rectangular is None else rectangular
    return small_instance(random.Random(seed), rect, max_aisles=max_aisles, max_targets=max_targets,
                          max_len=max_len)


def pair_columns(step) -> tuple[int, ...]:
    """Aisles whose edges a reduction step may rewrite."""
    from aisle_router.reducer import ReductionCase

    j = step.aisle
    if step.case is ReductionCase.SINGLE_AISLE:
        return (j,)
    return (j - 1, j) if step.mirror_lr else (j, j + 1)


def reduction_failures(inst: WarehouseInstance, before, step) -> list[str]:
    """Conditions (i) to (v) of a reduction step, plus locality; returns the failed ones."""
    from aisle_router.model import full_double_aisles, tour_length, validate_tour

    before, after = TourSubgraph(before), step.tour
    failed = []
    if not (tour_length(inst, after) <= tour_length(inst, before)
            and step.saved == tour_length(inst, before) - tour_length(inst, after)):
        failed.append("i")
    if not len(full_double_aisles(inst, after)) < len(full_double_aisles(inst, before)):
        failed.append("ii")
    deg = after.degrees()
    if any(deg.get(v, 0) == 0 for v in inst.required_vertices()):
        failed.append("iii")
    if validate_tour(inst, after) is not None or not nx_is_tour(inst, after):
        failed.append("iv")
    cols = pair_columns(step)
    if corner_parities(inst, before, cols) != corner_parities(inst, after, cols):
        failed.append("v")
    inside = set()
    for j in cols:
        inside.update(inst.aisle_edges(j))
    if len(cols) == 2:
        inside.update((inst.top_rail(cols[0]), inst.bottom_rail(cols[0])))
    changed = {e for e in set(before) | set(after) if before.get(e, 0) != after.get(e, 0)}
    if not changed <= inside:
        failed.append("locality")
    return failed
