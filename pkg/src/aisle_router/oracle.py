"""Exhaustive reference solver for small warehouses.

Every edge gets a multiplicity in {0, 1, 2}; a multiplicity of 3 or more
can always be lowered by 2 without touching parity or connectivity, so an
optimum exists among these assignments. The search walks the edges column
by column and cuts a branch as soon as a vertex with all of its edges
assigned has odd degree or is a target left unvisited, or the partial
length exceeds the bound. Nothing here depends on the dynamic program.
"""

from __future__ import annotations

import os
import random
from collections.abc import Iterator
from dataclasses import dataclass

from .errors import CounterexampleNotFound, InfeasibleError, InstanceTooLargeError
from .model import TourSubgraph, WarehouseInstance, full_double_aisles, is_rectangular, validate_tour

DEFAULT_MAX_EDGES = 18
MAX_EDGES_ENV = "AISLE_ROUTER_ORACLE_MAX_EDGES"


def max_edges_limit() -> int:
    raw = os.environ.get(MAX_EDGES_ENV)
    return int(raw) if raw else DEFAULT_MAX_EDGES


@dataclass(frozen=True)
class OracleResult:
    length: int
    witness: TourSubgraph
    optima: tuple[TourSubgraph, ...] | None = None


class _Search:
    def __init__(self, inst: WarehouseInstance, max_edges: int | None):
        self.inst = inst
        self.edges = list(inst.iter_edges())
        limit = max_edges_limit() if max_edges is None else max_edges
        if len(self.edges) > limit:
            raise InstanceTooLargeError(
                f"instance has {len(self.edges)} edges, the oracle handles at most {limit}")
        self.weights = [inst.edge_length(e) for e in self.edges]
        verts = sorted({v for e in self.edges for v in e} | {inst.depot})
        self.index = {v: i for i, v in enumerate(verts)}
        self.ends = [(self.index[u], self.index[v]) for u, v in self.edges]
        required = {self.index[v] for v in inst.required_vertices()}
        last: dict[int, int] = {}
        for i, (u, v) in enumerate(self.ends):
            last[u] = i
            last[v] = i
        # vertices whose degree is final once edge i is assigned
        self.closing: list[list[tuple[int, bool]]] = [[] for _ in self.edges]
        for vi, i in last.items():
            self.closing[i].append((vi, vi in required))
        # an isolated depot (single aisle, no edges) can never be covered
        self.hopeless = any(vi not in last for vi in required)
        self.nverts = len(verts)

    def _connected(self, mult: list[int]) -> bool:
        parent = list(range(self.nverts))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        roots = set()
        used = set()
        for (u, v), m in zip(self.ends, mult):
            if m:
                used.add(u)
                used.add(v)
                ru, rv = find(u), find(v)
                if ru != rv:
                    parent[ru] = rv
        for x in used:
            roots.add(find(x))
        return len(roots) <= 1

    def assignments(self, bound: int, strict: bool) -> Iterator[tuple[int, list[int]]]:
        """Yield ``(length, multiplicities)`` of valid tours within ``bound``,
        in lexicographic order of the multiplicity vector. With ``strict``
        the bound tightens to each newly found length (optimum search)."""
        if self.hopeless:
            return
        n_edges = len(self.edges)
        mult = [0] * n_edges
        deg = [0] * self.nverts
        state = {"bound": bound}

        def rec(i: int, length: int) -> Iterator[tuple[int, list[int]]]:
            if i == n_edges:
                if self._connected(mult):
                    if strict:
                        state["bound"] = length - 1
                    yield length, list(mult)
                return
            u, v = self.ends[i]
            w = self.weights[i]
            for m in (0, 1, 2):
                total = length + m * w
                if total > state["bound"]:
                    break
                mult[i] = m
                deg[u] += m
                deg[v] += m
                ok = True
                for vi, req in self.closing[i]:
                    d = deg[vi]
                    if d % 2 or (req and d == 0):
                        ok = False
                        break
                if ok:
                    yield from rec(i + 1, total)
                deg[u] -= m
                deg[v] -= m
            mult[i] = 0

        yield from rec(0, 0)

    def tour(self, mult: list[int]) -> TourSubgraph:
        return TourSubgraph._trusted({e: m for e, m in zip(self.edges, mult) if m})


def enumerate_tours(inst: WarehouseInstance, max_length: int, max_edges: int | None = None) -> Iterator[TourSubgraph]:
    """Every tour subgraph with multiplicities in {0, 1, 2} and length at
    most ``max_length``, in a fixed order."""
    search = _Search(inst, max_edges)
    for _, mult in search.assignments(max_length, strict=False):
        t = search.tour(mult)
        if validate_tour(inst, t) is None:
            yield t


def brute_force_optimum(inst: WarehouseInstance, enumerate_all: bool = False,
                        max_edges: int | None = None) -> OracleResult:
    search = _Search(inst, max_edges)
    best = None
    for length, mult in search.assignments(1 << 62, strict=True):
        t = search.tour(mult)
        if validate_tour(inst, t) is None:
            best = (length, t)
    if best is None:
        raise InfeasibleError("no tour subgraph exists")
    length, witness = best
    optima = None
    if enumerate_all:
        optima = tuple(enumerate_tours(inst, length, max_edges))
    return OracleResult(length, witness, optima)


# ---------------------------------------------------------------------------
# counterexample search


@dataclass(frozen=True)
class SearchSpace:
    """Two-aisle warehouses with lengths and rails in ``1..max_length`` /
    ``1..max_rail`` and between one and ``max_picks`` picks."""

    max_length: int = 12
    max_rail: int = 12
    max_picks: int = 2
    rectangular: bool = False
    max_tries: int = 20000


def _sample_instance(rng: random.Random, space: SearchSpace) -> WarehouseInstance | None:
    lengths = [rng.randint(1, space.max_length) for _ in range(2)]
    top = rng.randint(1, space.max_rail)
    bottom = rng.randint(1, space.max_rail)
    if space.rectangular:
        lengths[1] = lengths[0]
        bottom = top
    slots = [(j, p) for j in range(2) for p in range(1, lengths[j])]
    if not slots:
        return None
    k = rng.randint(1, min(space.max_picks, len(slots)))
    chosen = rng.sample(slots, k)
    picks = [sorted(p for j, p in chosen if j == a) for a in range(2)]
    dj = rng.randrange(2)
    free = [o for o in range(lengths[dj] + 1) if o not in picks[dj]]
    depot = (dj, rng.choice(free))
    inst = WarehouseInstance(tuple(lengths), tuple(tuple(p) for p in picks), (top,), (bottom,), depot)
    if is_rectangular(inst) != space.rectangular:
        return None
    return inst


def needs_full_double(inst: WarehouseInstance) -> bool:
    """True when every optimal tour doubles some aisle end to end."""
    result = brute_force_optimum(inst, enumerate_all=True)
    return all(full_double_aisles(inst, t) for t in result.optima)


def find_counterexample(space: SearchSpace = SearchSpace(), seed: int = 0) -> WarehouseInstance:
    """First sampled instance whose optimal tours all need a full double edge."""
    from .dp import solve

    rng = random.Random(seed)
    for _ in range(space.max_tries):
        inst = _sample_instance(rng, space)
        if inst is None:
            continue
        with_double = solve(inst, True).length
        try:
            without = solve(inst, False).length
        except InfeasibleError:
            without = None
        if without is not None and without <= with_double:
            continue
        if needs_full_double(inst):
            return inst
    raise CounterexampleNotFound(f"no counterexample in {space.max_tries} samples (seed {seed})")
