"""Edge configurations a tour may use along one aisle or one pair of rails."""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum

from .model import Edge, TourSubgraph, WarehouseInstance


class VerticalKind(IntEnum):
    SINGLE_PASS = 1
    TOP_UTURN = 2
    BOTTOM_UTURN = 3
    LARGEST_GAP = 4
    FULL_DOUBLE = 5
    NO_EDGES = 6

    @property
    def roman(self) -> str:
        return ("i", "ii", "iii", "iv", "v", "vi")[self - 1]


# degree added at (top corner, bottom corner)
DEGREE_DELTA: dict[VerticalKind, tuple[int, int]] = {
    VerticalKind.SINGLE_PASS: (1, 1),
    VerticalKind.TOP_UTURN: (2, 0),
    VerticalKind.BOTTOM_UTURN: (0, 2),
    VerticalKind.LARGEST_GAP: (2, 2),
    VerticalKind.FULL_DOUBLE: (2, 2),
    VerticalKind.NO_EDGES: (0, 0),
}

CROSS_PAIRS: tuple[tuple[int, int], ...] = ((0, 0), (1, 1), (2, 0), (0, 2), (2, 2))


def largest_gap(offsets: tuple[int, ...] | list[int]) -> tuple[int, int]:
    """``(gap, i)`` for the widest step ``offsets[i] -> offsets[i + 1]``;
    the topmost one wins ties."""
    best, at = -1, -1
    for i in range(len(offsets) - 1):
        g = offsets[i + 1] - offsets[i]
        if g > best:
            best, at = g, i
    return best, at


def vertical_costs(length: int, targets: tuple[int, ...], allow_full_double: bool = True) -> list[tuple[VerticalKind, int]]:
    """Feasible kinds and their costs for an aisle, in kind order."""
    k = len(targets)
    out = [(VerticalKind.SINGLE_PASS, length)]
    if k:
        out.append((VerticalKind.TOP_UTURN, 2 * targets[-1]))
        out.append((VerticalKind.BOTTOM_UTURN, 2 * (length - targets[0])))
    if k >= 2:
        out.append((VerticalKind.LARGEST_GAP, 2 * (length - largest_gap(targets)[0])))
    if allow_full_double:
        out.append((VerticalKind.FULL_DOUBLE, 2 * length))
    if not k:
        out.append((VerticalKind.NO_EDGES, 0))
    return out


def segment_multiplicities(targets: tuple[int, ...], kind: VerticalKind) -> list[int]:
    """Multiplicity of each aisle segment, top to bottom, for ``kind``."""
    k = len(targets)
    segs = k + 1
    if kind is VerticalKind.SINGLE_PASS:
        return [1] * segs
    if kind is VerticalKind.FULL_DOUBLE:
        return [2] * segs
    if kind is VerticalKind.NO_EDGES:
        if k:
            raise ValueError("an occupied aisle cannot be left without edges")
        return [0]
    if kind is VerticalKind.TOP_UTURN:
        if not k:
            raise ValueError("a U-turn needs a target")
        return [2] * k + [0]
    if kind is VerticalKind.BOTTOM_UTURN:
        if not k:
            raise ValueError("a U-turn needs a target")
        return [0] + [2] * k
    if kind is VerticalKind.LARGEST_GAP:
        if k < 2:
            raise ValueError("a gap split needs two targets")
        _, i = largest_gap(targets)
        # segment i + 1 joins targets[i] and targets[i + 1]
        return [2] * (i + 1) + [0] + [2] * (k - i - 1)
    raise ValueError(kind)


def vertical_edges(inst: WarehouseInstance, j: int, kind: VerticalKind) -> dict[Edge, int]:
    mults = segment_multiplicities(inst.interior_targets[j], kind)
    return {e: m for e, m in zip(inst.aisle_edges(j), mults) if m}


@dataclass(frozen=True)
class VerticalConfiguration:
    kind: VerticalKind
    aisle: int
    edges: TourSubgraph
    cost: int

    @property
    def degree_delta(self) -> tuple[int, int]:
        return DEGREE_DELTA[self.kind]

    @property
    def connects_boundary(self) -> bool:
        return self.kind in (VerticalKind.SINGLE_PASS, VerticalKind.FULL_DOUBLE)


@dataclass(frozen=True)
class CrossConfiguration:
    top_count: int
    bottom_count: int
    cost: int
    edges: TourSubgraph

    @property
    def pair(self) -> tuple[int, int]:
        return (self.top_count, self.bottom_count)


def enumerate_vertical(inst: WarehouseInstance, j: int, allow_full_double: bool = True) -> list[VerticalConfiguration]:
    if not (0 <= j < inst.aisle_count):
        raise IndexError(f"aisle {j} out of range")
    targets = inst.interior_targets[j]
    return [VerticalConfiguration(kind, j, TourSubgraph(vertical_edges(inst, j, kind)), cost)
            for kind, cost in vertical_costs(inst.aisle_lengths[j], targets, allow_full_double)]


def cross_cost(inst: WarehouseInstance, j: int, pair: tuple[int, int]) -> int:
    return pair[0] * inst.top_segments[j] + pair[1] * inst.bottom_segments[j]


def enumerate_cross(inst: WarehouseInstance, j: int) -> list[CrossConfiguration]:
    if not (0 <= j < inst.aisle_count - 1):
        raise IndexError(f"no rails after aisle {j}")
    out = []
    for top, bottom in CROSS_PAIRS:
        edges = TourSubgraph({inst.top_rail(j): top, inst.bottom_rail(j): bottom})
        out.append(CrossConfiguration(top, bottom, cross_cost(inst, j, (top, bottom)), edges))
    return out
