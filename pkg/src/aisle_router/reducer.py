"""Rewrite tours of rectangular warehouses so that no aisle is doubled end to end.

A step looks at one fully doubled aisle ``j`` together with a neighbouring
aisle, classifies what the tour does on either side of that pair, and
replaces only the edges inside the pair. Each step keeps the tour valid,
never makes it longer and strictly lowers the number of fully doubled
aisles, so :func:`eliminate_all` terminates.
"""

from __future__ import annotations

from collections.abc import Iterator, Mapping
from dataclasses import dataclass
from enum import IntEnum

from .configs import largest_gap
from .errors import ContractError, UnsupportedInstanceError
from .model import (Edge, EquivalenceClass, NotPTS, Side, TourSubgraph, WarehouseInstance, as_tour,
                    canonicalize_multiplicities, full_double_aisles, has_full_aisle_double, is_canonical,
                    is_rectangular, mirror_instance_lr, mirror_instance_tb, mirror_tour_lr, mirror_tour_tb,
                    pts_class, restrict, tour_length, validate_tour)


class ReductionCase(IntEnum):
    SINGLE_AISLE = 0  # the whole tour lives in the doubled aisle
    CASE1 = 1         # left part joins both corners with odd degree
    CASE2 = 2         # only the right part does
    CASE3 = 3         # neither does


@dataclass(frozen=True)
class ReductionStep:
    aisle: int
    case: ReductionCase
    mirror_lr: bool
    mirror_tb: bool
    tour: TourSubgraph
    saved: int

    def log_line(self) -> str:
        mirrors = ",".join(m for m, on in (("lr", self.mirror_lr), ("tb", self.mirror_tb)) if on) or "none"
        return f"aisle={self.aisle + 1} case={int(self.case)} mirrors={mirrors} saved={self.saved}"


def _check_tour(inst: WarehouseInstance, t: TourSubgraph, j: int) -> None:
    if not is_canonical(t):
        raise ContractError("tour multiplicities must be at most 2; canonicalize first")
    violation = validate_tour(inst, t)
    if violation is not None:
        raise ContractError(f"not a tour subgraph: {violation}")
    if not has_full_aisle_double(inst, t, j):
        raise ContractError(f"aisle {j} is not doubled over its whole length")


def classify_sides(inst: WarehouseInstance, t: Mapping[Edge, int], j: int) -> tuple[EquivalenceClass, EquivalenceClass]:
    """Classes of the parts of ``t`` left of aisle ``j`` and right of aisle ``j + 1``."""
    t = as_tour(t)
    if not (0 <= j < inst.aisle_count - 1):
        raise ContractError(f"aisle {j} has no right neighbour")
    _check_tour(inst, t, j)
    out = []
    for side in (Side.left(j), Side.right(j)):
        cls = pts_class(inst, restrict(inst, t, side), side)
        if isinstance(cls, NotPTS):
            raise ContractError(f"restriction to {side} is not a partial tour subgraph: {cls}")
        out.append(cls)
    return out[0], out[1]


def _widest_segment(inst: WarehouseInstance, j: int) -> Edge:
    offs = inst.aisle_vertices(j)
    _, i = largest_gap(offs)
    return ((j, offs[i]), (j, offs[i + 1]))


def _lone_aisle(inst: WarehouseInstance, t: TourSubgraph, j: int) -> TourSubgraph:
    """Shortest doubled path over the targets of aisle ``j``."""
    length = inst.aisle_lengths[j]
    points = list(inst.interior_targets[j])
    if inst.depot[0] == j and inst.depot_is_corner:
        points.append(inst.depot[1])
    points.sort()
    if not points or points == [0] or points == [length]:
        raise ContractError("a lone corner depot with nothing to pick needs the full double edge")
    if len(points) == 1:
        p = points[0]
        lo, hi = (0, p) if p <= length - p else (p, length)
    else:
        lo, hi = points[0], points[-1]
    return TourSubgraph({e: 2 for e in inst.aisle_edges(j) if lo <= e[0][1] and e[1][1] <= hi})


def _rewrite_pair(inst: WarehouseInstance, t: TourSubgraph, j: int,
                  c_left: EquivalenceClass, c_right: EquivalenceClass) -> tuple[ReductionCase, bool, TourSubgraph]:
    """Rewrite aisles ``j``, ``j + 1`` and the rails between them."""
    if c_left is EquivalenceClass.UU1C:
        # both corners stay joined through the left part
        return ReductionCase.CASE1, False, t.without([_widest_segment(inst, j)])

    top, bottom = t.mult(inst.top_rail(j)), t.mult(inst.bottom_rail(j))
    if top not in (0, 2) or bottom not in (0, 2) or top + bottom == 0:
        raise ContractError(f"rails after aisle {j} carry ({top}, {bottom}); expected a doubled rail")
    if top != 2:
        flipped = mirror_instance_tb(inst)
        case, _, out = _rewrite_pair(flipped, mirror_tour_tb(inst, t), j, c_left, c_right)
        return case, True, mirror_tour_tb(flipped, out)

    updates: dict[Edge, int] = {inst.top_rail(j): 1, inst.bottom_rail(j): 1}
    for e in inst.aisle_edges(j):
        updates[e] = 1
    if c_right is EquivalenceClass.UU1C:
        gap = _widest_segment(inst, j + 1)
        for e in inst.aisle_edges(j + 1):
            updates[e] = 0 if e == gap else 2
        return ReductionCase.CASE2, False, t.replace(updates)
    for e in inst.aisle_edges(j + 1):
        updates[e] = 1
    return ReductionCase.CASE3, False, t.replace(updates)


def reduction_step(inst: WarehouseInstance, t: Mapping[Edge, int], j: int) -> ReductionStep:
    """Remove the full double edge on aisle ``j`` (0-based) and report how."""
    if not is_rectangular(inst):
        raise UnsupportedInstanceError("double edges can only be removed in rectangular warehouses")
    t = as_tour(t)
    if not (0 <= j < inst.aisle_count):
        raise ContractError(f"aisle {j} out of range")
    _check_tour(inst, t, j)
    before = tour_length(inst, t)

    right_used = any(v[0] > j for _, v in t)
    left_used = any(u[0] < j for u, _ in t)
    if not right_used and not left_used:
        out = _lone_aisle(inst, t, j)
        return ReductionStep(j, ReductionCase.SINGLE_AISLE, False, False, out, before - tour_length(inst, out))

    # the pair is (j, j + 1); with nothing to the right, flip so the used side is on the right
    lr = not right_used
    work_inst, work_t, jj = inst, t, j
    if lr:
        work_inst, work_t = mirror_instance_lr(inst), mirror_tour_lr(inst, t)
        jj = inst.aisle_count - 1 - j
    c_left, c_right = classify_sides(work_inst, work_t, jj)
    case, tb, out = _rewrite_pair(work_inst, work_t, jj, c_left, c_right)
    if lr:
        out = mirror_tour_lr(work_inst, out)
    return ReductionStep(j, case, lr, tb, out, before - tour_length(inst, out))


def reduce_once(inst: WarehouseInstance, t: Mapping[Edge, int], j: int) -> TourSubgraph:
    return reduction_step(inst, t, j).tour


def iter_reductions(inst: WarehouseInstance, t: Mapping[Edge, int]) -> Iterator[ReductionStep]:
    """Reduce the leftmost fully doubled aisle until none is left."""
    if not is_rectangular(inst):
        raise UnsupportedInstanceError("double edges can only be removed in rectangular warehouses")
    t = canonicalize_multiplicities(t)
    doubled = full_double_aisles(inst, t)
    while doubled:
        step = reduction_step(inst, t, doubled[0])
        t = step.tour
        remaining = full_double_aisles(inst, t)
        if len(remaining) >= len(doubled):
            raise AssertionError("reduction step did not remove a full double edge")
        doubled = remaining
        yield step


def eliminate_all(inst: WarehouseInstance, t: Mapping[Edge, int]) -> TourSubgraph:
    """Equivalent tour, no longer than ``t``, without fully doubled aisles."""
    out = canonicalize_multiplicities(t)
    for step in iter_reductions(inst, t):
        out = step.tour
    if validate_tour(inst, out) is not None:
        raise ContractError("input is not a tour subgraph")
    return out
