"""Warehouse graph, tour subgraphs and the partial-tour classification.

Vertices are ``(aisle, offset)`` pairs with 0-based aisle indices and the
offset measured downwards from the top corner, so ``(j, 0)`` is the top
corner of aisle ``j`` and ``(j, aisle_lengths[j])`` its bottom corner.
Edges are ordered vertex pairs ``(u, v)`` with ``u < v``.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass
from enum import Enum
from functools import cached_property

from .errors import InvalidEdgeError, InvalidInstanceError, InvalidRestrictionError

Vertex = tuple[int, int]
Edge = tuple[Vertex, Vertex]


@dataclass(frozen=True)
class WarehouseInstance:
    """A two-cross-aisle warehouse with its pick locations and depot.

    ``picks[j]`` holds strictly increasing offsets strictly inside aisle
    ``j``. ``top_segments[j]`` / ``bottom_segments[j]`` are the lengths of
    the cross-aisle pieces between aisles ``j`` and ``j + 1``. ``depot`` is
    ``(aisle, offset)``; offset 0 or the aisle length puts it on a corner.
    """

    aisle_lengths: tuple[int, ...]
    picks: tuple[tuple[int, ...], ...]
    top_segments: tuple[int, ...]
    bottom_segments: tuple[int, ...]
    depot: tuple[int, int] = (0, 0)

    def __post_init__(self) -> None:
        lengths = tuple(self.aisle_lengths)
        picks = tuple(tuple(p) for p in self.picks)
        top = tuple(self.top_segments)
        bottom = tuple(self.bottom_segments)
        depot = tuple(self.depot)
        object.__setattr__(self, "aisle_lengths", lengths)
        object.__setattr__(self, "picks", picks)
        object.__setattr__(self, "top_segments", top)
        object.__setattr__(self, "bottom_segments", bottom)
        object.__setattr__(self, "depot", depot)

        n = len(lengths)
        if n < 1:
            raise InvalidInstanceError("a warehouse needs at least one aisle")
        if len(picks) != n:
            raise InvalidInstanceError(f"expected {n} pick lists, got {len(picks)}")
        if len(top) != n - 1 or len(bottom) != n - 1:
            raise InvalidInstanceError(f"expected {n - 1} top and bottom segments")
        for name, values in (("aisle length", lengths), ("top segment", top),
                             ("bottom segment", bottom)):
            for x in values:
                if not isinstance(x, int) or isinstance(x, bool) or x < 1:
                    raise InvalidInstanceError(f"{name} must be a positive integer, got {x!r}")
        for j, (length, offsets) in enumerate(zip(lengths, picks)):
            prev = 0
            for p in offsets:
                if not isinstance(p, int) or isinstance(p, bool):
                    raise InvalidInstanceError(f"pick offset {p!r} in aisle {j} is not an integer")
                if p <= prev or p >= length:
                    raise InvalidInstanceError(
                        f"picks of aisle {j} must be strictly increasing and strictly inside (0, {length})")
                prev = p
        if len(depot) != 2:
            raise InvalidInstanceError("depot must be an (aisle, offset) pair")
        dj, doff = depot
        if not (0 <= dj < n):
            raise InvalidInstanceError(f"depot aisle {dj} out of range")
        if not (0 <= doff <= lengths[dj]):
            raise InvalidInstanceError(f"depot offset {doff} outside aisle {dj}")
        if doff in picks[dj]:
            raise InvalidInstanceError("an interior depot may not share its position with a pick")

    @property
    def aisle_count(self) -> int:
        return len(self.aisle_lengths)

    @property
    def depot_vertex(self) -> Vertex:
        return self.depot

    @property
    def depot_is_corner(self) -> bool:
        j, off = self.depot
        return off == 0 or off == self.aisle_lengths[j]

    @cached_property
    def interior_targets(self) -> tuple[tuple[int, ...], ...]:
        """Per aisle, the sorted interior offsets that must be visited."""
        out = list(self.picks)
        dj, doff = self.depot
        if not self.depot_is_corner:
            out[dj] = tuple(sorted(out[dj] + (doff,)))
        return tuple(out)

    def aisle_vertices(self, j: int) -> tuple[int, ...]:
        """Offsets of every vertex of aisle ``j``, corners included."""
        return (0, *self.interior_targets[j], self.aisle_lengths[j])

    def top(self, j: int) -> Vertex:
        return (j, 0)

    def bottom(self, j: int) -> Vertex:
        return (j, self.aisle_lengths[j])

    def required_vertices(self) -> list[Vertex]:
        out = [(j, p) for j, offsets in enumerate(self.picks) for p in offsets]
        out.append(self.depot)
        return out

    def aisle_edges(self, j: int) -> list[Edge]:
        offs = self.aisle_vertices(j)
        return [((j, offs[i]), (j, offs[i + 1])) for i in range(len(offs) - 1)]

    def top_rail(self, j: int) -> Edge:
        return ((j, 0), (j + 1, 0))

    def bottom_rail(self, j: int) -> Edge:
        return ((j, self.aisle_lengths[j]), (j + 1, self.aisle_lengths[j + 1]))

    def iter_edges(self) -> Iterator[Edge]:
        """All edges of the warehouse graph, column by column, top to bottom."""
        for j in range(self.aisle_count):
            yield from self.aisle_edges(j)
            if j + 1 < self.aisle_count:
                yield self.top_rail(j)
                yield self.bottom_rail(j)

    @cached_property
    def edge_lengths(self) -> dict[Edge, int]:
        out: dict[Edge, int] = {}
        for j in range(self.aisle_count):
            offs = self.aisle_vertices(j)
            for i in range(len(offs) - 1):
                out[((j, offs[i]), (j, offs[i + 1]))] = offs[i + 1] - offs[i]
            if j + 1 < self.aisle_count:
                out[self.top_rail(j)] = self.top_segments[j]
                out[self.bottom_rail(j)] = self.bottom_segments[j]
        return out

    def edge_length(self, edge: Edge) -> int:
        try:
            return self.edge_lengths[normalize_edge(edge)]
        except KeyError:
            raise InvalidEdgeError(f"{edge!r} is not an edge of the warehouse graph") from None

    def scaled(self, k: int) -> WarehouseInstance:
        """Multiply every distance (and position) by ``k``."""
        return WarehouseInstance(
            aisle_lengths=tuple(k * x for x in self.aisle_lengths),
            picks=tuple(tuple(k * p for p in ps) for ps in self.picks),
            top_segments=tuple(k * x for x in self.top_segments),
            bottom_segments=tuple(k * x for x in self.bottom_segments),
            depot=(self.depot[0], k * self.depot[1]),
        )


def normalize_edge(edge: Edge) -> Edge:
    u, v = edge
    u, v = tuple(u), tuple(v)
    return (u, v) if u <= v else (v, u)


class TourSubgraph(Mapping):
    """Immutable edge -> multiplicity map; edges with multiplicity 0 are dropped."""

    __slots__ = ("_mult",)

    def __init__(self, mults: Mapping[Edge, int] | Iterable[tuple[Edge, int]] = ()):
        items = mults.items() if isinstance(mults, Mapping) else mults
        d: dict[Edge, int] = {}
        for edge, m in items:
            m = int(m)
            if m < 0:
                raise ValueError(f"negative multiplicity on {edge!r}")
            if m:
                key = normalize_edge(edge)
                d[key] = d.get(key, 0) + m
        self._mult = d

    @classmethod
    def _trusted(cls, d: dict[Edge, int]) -> TourSubgraph:
        # caller guarantees normalized keys and positive values
        obj = cls.__new__(cls)
        obj._mult = d
        return obj

    def __getitem__(self, edge: Edge) -> int:
        return self._mult[edge]

    def __iter__(self) -> Iterator[Edge]:
        return iter(self._mult)

    def __len__(self) -> int:
        return len(self._mult)

    def __repr__(self) -> str:
        return f"TourSubgraph({self._mult!r})"

    def mult(self, edge: Edge) -> int:
        return self._mult.get(normalize_edge(edge), 0)

    def degrees(self) -> dict[Vertex, int]:
        deg: dict[Vertex, int] = {}
        for (u, v), m in self._mult.items():
            deg[u] = deg.get(u, 0) + m
            deg[v] = deg.get(v, 0) + m
        return deg

    def replace(self, updates: Mapping[Edge, int]) -> TourSubgraph:
        """Copy with the multiplicities in ``updates`` overwritten."""
        d = dict(self._mult)
        for edge, m in updates.items():
            key = normalize_edge(edge)
            if m:
                d[key] = m
            else:
                d.pop(key, None)
        return TourSubgraph._trusted(d)

    def without(self, edges: Iterable[Edge]) -> TourSubgraph:
        return self.replace({e: 0 for e in edges})

    def union(self, other: Mapping[Edge, int]) -> TourSubgraph:
        d = dict(self._mult)
        for edge, m in other.items():
            d[edge] = d.get(edge, 0) + m
        return TourSubgraph._trusted(d)


def is_rectangular(inst: WarehouseInstance) -> bool:
    return (len(set(inst.aisle_lengths)) == 1
            and inst.top_segments == inst.bottom_segments)


def as_tour(t: Mapping[Edge, int]) -> TourSubgraph:
    return t if isinstance(t, TourSubgraph) else TourSubgraph(t)


def tour_length(inst: WarehouseInstance, t: Mapping[Edge, int]) -> int:
    t = as_tour(t)
    lengths = inst.edge_lengths
    total = 0
    for edge, m in t.items():
        try:
            total += m * lengths[edge]
        except KeyError:
            raise InvalidEdgeError(f"{edge!r} is not an edge of the warehouse graph") from None
    return total


@dataclass(frozen=True)
class Violation:
    """Why a subgraph is not a tour. ``clause`` is one of
    ``"edge"``, ``"coverage"``, ``"connectivity"`` or ``"parity"``."""

    clause: str
    vertex: Vertex | None = None
    edge: Edge | None = None

    def __str__(self) -> str:
        where = self.edge if self.edge is not None else self.vertex
        return f"{self.clause} violated at {where}"


def _components(adj: dict[Vertex, list[Vertex]]) -> list[set[Vertex]]:
    seen: set[Vertex] = set()
    comps = []
    for start in sorted(adj):
        if start in seen:
            continue
        comp = {start}
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if w not in comp:
                    comp.add(w)
                    queue.append(w)
        seen |= comp
        comps.append(comp)
    return comps


def _adjacency(t: Mapping[Edge, int]) -> dict[Vertex, list[Vertex]]:
    adj: dict[Vertex, list[Vertex]] = {}
    for (u, v), m in t.items():
        if m > 0:
            adj.setdefault(u, []).append(v)
            adj.setdefault(v, []).append(u)
    return adj


def validate_tour(inst: WarehouseInstance, t: Mapping[Edge, int]) -> Violation | None:
    """Return ``None`` for a tour subgraph, else the first failed clause."""
    t = as_tour(t)
    lengths = inst.edge_lengths
    for edge in t:
        if edge not in lengths:
            return Violation("edge", edge=edge)
    deg: dict[Vertex, int] = {}
    for (u, v), m in t.items():
        deg[u] = deg.get(u, 0) + m
        deg[v] = deg.get(v, 0) + m
    for v in inst.required_vertices():
        if deg.get(v, 0) == 0:
            return Violation("coverage", vertex=v)
    comps = _components(_adjacency(t))
    if len(comps) > 1:
        return Violation("connectivity", vertex=min(comps[1]))
    for v in sorted(deg):
        if deg[v] % 2:
            return Violation("parity", vertex=v)
    return None


def full_double_aisles(inst: WarehouseInstance, t: Mapping[Edge, int]) -> list[int]:
    return [j for j in range(inst.aisle_count) if has_full_aisle_double(inst, t, j)]


def has_full_aisle_double(inst: WarehouseInstance, t: Mapping[Edge, int], j: int) -> bool:
    if not (0 <= j < inst.aisle_count):
        raise IndexError(f"aisle {j} out of range")
    t = as_tour(t)
    return all(t.get(e, 0) >= 2 for e in inst.aisle_edges(j))


def canonicalize_multiplicities(t: Mapping[Edge, int]) -> TourSubgraph:
    """Lower every multiplicity above 2 by an even amount, down to 1 or 2."""
    return TourSubgraph._trusted(
        {e: (m if m <= 2 else 2 - m % 2) for e, m in t.items() if m > 0})


def is_canonical(t: Mapping[Edge, int]) -> bool:
    return all(0 <= m <= 2 for m in t.values())


# ---------------------------------------------------------------------------
# partial tour subgraphs


class EquivalenceClass(Enum):
    """Class of a partial tour subgraph seen from its two boundary corners.

    The value is ``(label, top parity, bottom parity, components)`` where
    each component is written as the boundary corners it contains.
    """

    UU1C = ("UU1C", "U", "U", ("ab",))
    EE1C = ("EE1C", "E", "E", ("ab",))
    ZE1C = ("0E1C", "0", "E", ("b",))
    EZ1C = ("E01C", "E", "0", ("a",))
    EE2C = ("EE2C", "E", "E", ("a", "b"))
    ZZ1C = ("001C", "0", "0", ("",))
    ZZ0C = ("000C", "0", "0", ())

    @property
    def label(self) -> str:
        return self.value[0]

    @property
    def top_parity(self) -> str:
        return self.value[1]

    @property
    def bottom_parity(self) -> str:
        return self.value[2]

    @property
    def components(self) -> tuple[str, ...]:
        return self.value[3]

    @classmethod
    def from_label(cls, label: str) -> EquivalenceClass:
        for c in cls:
            if c.label == label:
                return c
        raise ValueError(f"unknown class label {label!r}")

    def __str__(self) -> str:
        return self.label


CLASS_ORDER: tuple[EquivalenceClass, ...] = tuple(EquivalenceClass)

_STRUCTURE = {(c.top_parity, c.bottom_parity, c.components): c for c in EquivalenceClass}


def parity_symbol(degree: int) -> str:
    if degree == 0:
        return "0"
    return "U" if degree % 2 else "E"


def classify_structure(top: str, bottom: str, components: Iterable[str]) -> EquivalenceClass | None:
    """Class for boundary parities and per-component corner labels, if any."""
    return _STRUCTURE.get((top, bottom, tuple(sorted(components))))


@dataclass(frozen=True)
class Side:
    """``Side.left(j)``: aisle ``j``'s corners plus everything strictly left
    of aisle ``j``. ``Side.right(j)``: aisle ``j + 1``'s corners plus
    everything strictly right of aisle ``j + 1``."""

    kind: str
    j: int

    @classmethod
    def left(cls, j: int) -> Side:
        return cls("left", j)

    @classmethod
    def right(cls, j: int) -> Side:
        return cls("right", j)

    @property
    def boundary(self) -> int:
        return self.j if self.kind == "left" else self.j + 1

    def contains_edge(self, edge: Edge) -> bool:
        (i, _), (k, _) = edge
        b = self.boundary
        if self.kind == "left":
            return k < b if i == k else k <= b
        return i > b if i == k else i >= b

    def contains_vertex(self, v: Vertex) -> bool:
        """True for non-boundary vertices of the side."""
        b = self.boundary
        return v[0] < b if self.kind == "left" else v[0] > b


def restrict(inst: WarehouseInstance, t: Mapping[Edge, int], side: Side) -> TourSubgraph:
    return TourSubgraph._trusted({e: m for e, m in t.items() if m > 0 and side.contains_edge(e)})


@dataclass(frozen=True)
class NotPTS:
    """Report that a side subgraph admits no completion."""

    reason: str
    vertex: Vertex | None = None


def _check_side(inst: WarehouseInstance, side: Side) -> None:
    n = inst.aisle_count
    if side.kind == "left":
        ok = 0 <= side.j < n
    elif side.kind == "right":
        ok = 0 <= side.j < n - 1
    else:
        ok = False
    if not ok:
        raise InvalidRestrictionError(f"{side} does not exist in a {n}-aisle warehouse")


def pts_class(inst: WarehouseInstance, t: Mapping[Edge, int], side: Side) -> EquivalenceClass | NotPTS:
    """Equivalence class of ``t`` as a partial tour subgraph of ``side``."""
    _check_side(inst, side)
    t = as_tour(t)
    lengths = inst.edge_lengths
    for edge, m in t.items():
        if edge not in lengths:
            raise InvalidEdgeError(f"{edge!r} is not an edge of the warehouse graph")
        if m > 0 and not side.contains_edge(edge):
            raise InvalidRestrictionError(f"{edge!r} lies outside {side}")
    deg: dict[Vertex, int] = {}
    for (u, v), m in t.items():
        deg[u] = deg.get(u, 0) + m
        deg[v] = deg.get(v, 0) + m

    # the depot may sit on a boundary corner and be served from the other side
    for v in inst.required_vertices():
        if side.contains_vertex(v) and deg.get(v, 0) == 0:
            return NotPTS("coverage", v)
    b = side.boundary
    top, bottom = inst.top(b), inst.bottom(b)
    for v in sorted(deg):
        if v != top and v != bottom and deg[v] % 2:
            return NotPTS("parity", v)

    labels = []
    for comp in _components(_adjacency(t)):
        labels.append(("a" if top in comp else "") + ("b" if bottom in comp else ""))
    cls = classify_structure(parity_symbol(deg.get(top, 0)), parity_symbol(deg.get(bottom, 0)), labels)
    if cls is None:
        return NotPTS("components")
    return cls


# ---------------------------------------------------------------------------
# symmetries


def mirror_instance_lr(inst: WarehouseInstance) -> WarehouseInstance:
    n = inst.aisle_count
    return WarehouseInstance(
        aisle_lengths=inst.aisle_lengths[::-1],
        picks=inst.picks[::-1],
        top_segments=inst.top_segments[::-1],
        bottom_segments=inst.bottom_segments[::-1],
        depot=(n - 1 - inst.depot[0], inst.depot[1]),
    )


def mirror_instance_tb(inst: WarehouseInstance) -> WarehouseInstance:
    lengths = inst.aisle_lengths
    dj, doff = inst.depot
    return WarehouseInstance(
        aisle_lengths=lengths,
        picks=tuple(tuple(sorted(length - p for p in ps)) for length, ps in zip(lengths, inst.picks)),
        top_segments=inst.bottom_segments,
        bottom_segments=inst.top_segments,
        depot=(dj, lengths[dj] - doff),
    )


def mirror_tour_lr(inst: WarehouseInstance, t: Mapping[Edge, int]) -> TourSubgraph:
    """Image of ``t`` (a tour on ``inst``) on ``mirror_instance_lr(inst)``."""
    last = inst.aisle_count - 1
    return TourSubgraph({((last - u[0], u[1]), (last - v[0], v[1])): m for (u, v), m in t.items()})


def mirror_tour_tb(inst: WarehouseInstance, t: Mapping[Edge, int]) -> TourSubgraph:
    """Image of ``t`` (a tour on ``inst``) on ``mirror_instance_tb(inst)``."""
    lengths = inst.aisle_lengths
    return TourSubgraph({((u[0], lengths[u[0]] - u[1]), (v[0], lengths[v[0]] - v[1])): m
                         for (u, v), m in t.items()})
