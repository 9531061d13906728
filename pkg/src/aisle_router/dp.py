"""Left-to-right dynamic program over the seven partial-tour classes.

The sweep alternates two kinds of stages. After the vertical stage of
column ``j`` the state is the class of everything up to and including
aisle ``j`` seen from ``(a_j, b_j)``; after the cross stage it is the class
seen from ``(a_{j+1}, b_{j+1})`` once the rails between the two columns
are fixed.

Transitions are derived from :func:`apply_vertical` and
:func:`apply_cross` and compiled into index tables once at import time;
the sweep itself only does table lookups, so it runs in time linear in
the number of aisles plus picks.
"""

from __future__ import annotations

import gc
from collections.abc import Callable, Iterator
from contextlib import contextmanager
from dataclasses import dataclass
from itertools import repeat
from typing import NamedTuple

from .configs import CROSS_PAIRS, DEGREE_DELTA, VerticalKind, largest_gap
from .errors import InfeasibleError
from .model import (CLASS_ORDER, EquivalenceClass, TourSubgraph, WarehouseInstance, classify_structure,
                    parity_symbol)

_REP = {"0": 0, "U": 1, "E": 2}

_GROUPS = {
    VerticalKind.SINGLE_PASS: ("ab",),
    VerticalKind.FULL_DOUBLE: ("ab",),
    VerticalKind.TOP_UTURN: ("a",),
    VerticalKind.BOTTOM_UTURN: ("b",),
    VerticalKind.LARGEST_GAP: ("a", "b"),
    VerticalKind.NO_EDGES: (),
}


def _merge(components: list[str], group: str) -> list[str]:
    labels = set(group)
    keep = []
    for comp in components:
        if labels & set(comp):
            labels |= set(comp)
        else:
            keep.append(comp)
    keep.append("".join(sorted(labels)))
    return keep


def apply_vertical(state: EquivalenceClass, kind: VerticalKind, aisle_occupied: bool) -> EquivalenceClass | None:
    """Class after adding one aisle's configuration, or ``None`` if infeasible."""
    if kind is VerticalKind.NO_EDGES:
        return None if aisle_occupied else state
    if not aisle_occupied and kind in (VerticalKind.TOP_UTURN, VerticalKind.BOTTOM_UTURN,
                                       VerticalKind.LARGEST_GAP):
        return None
    da, db = DEGREE_DELTA[kind]
    top = parity_symbol(_REP[state.top_parity] + da) if da else state.top_parity
    bottom = parity_symbol(_REP[state.bottom_parity] + db) if db else state.bottom_parity
    comps = list(state.components)
    for group in _GROUPS[kind]:
        comps = _merge(comps, group)
    # a component holding neither corner can never be reconnected
    return classify_structure(top, bottom, comps)


def apply_cross(state: EquivalenceClass, pair: tuple[int, int], picks_remain_right: bool,
                corner_required: tuple[bool, bool] = (False, False)) -> EquivalenceClass | None:
    """Class at the next boundary after fixing the rails ``pair``.

    ``corner_required`` marks a depot on the current column's corners; its
    degree is final once the rails are chosen.
    """
    t, b = pair
    top, bottom = state.top_parity, state.bottom_parity
    if (_REP[top] + t) % 2 or (_REP[bottom] + b) % 2:
        return None
    if (corner_required[0] and top == "0" and not t) or (corner_required[1] and bottom == "0" and not b):
        return None
    comps = []
    for comp in state.components:
        comps.append(("a" if t and "a" in comp else "") + ("b" if b and "b" in comp else ""))
    if t and top == "0":
        comps.append("a")
    if b and bottom == "0":
        comps.append("b")
    if "" in comps and picks_remain_right:
        return None
    return classify_structure(parity_symbol(t), parity_symbol(b), comps)


# ---------------------------------------------------------------------------
# compiled transition tables

_IDX = {c: i for i, c in enumerate(CLASS_ORDER)}
_START = _IDX[EquivalenceClass.ZZ0C]
_CLOSED = EquivalenceClass.ZZ1C
_KINDS = tuple(VerticalKind)


def _vertical_table(n_targets: int, allow_full_double: bool) -> tuple:
    """``((kind index, ((src, dst), ...)), ...)`` for an aisle with that many targets."""
    out = []
    for ki, kind in enumerate(_KINDS):
        if kind is VerticalKind.FULL_DOUBLE and not allow_full_double:
            continue
        if kind is VerticalKind.LARGEST_GAP and n_targets < 2:
            continue
        moves = []
        for c in CLASS_ORDER:
            nc = apply_vertical(c, kind, n_targets > 0)
            if nc is not None:
                moves.append((_IDX[c], _IDX[nc]))
        if moves:
            out.append((ki, tuple(moves)))
    return tuple(out)


def _cross_table(remain: bool, req: tuple[bool, bool]) -> tuple:
    out = []
    for pi, pair in enumerate(CROSS_PAIRS):
        moves = []
        for c in CLASS_ORDER:
            nc = apply_cross(c, pair, remain, req)
            if nc is not None:
                moves.append((_IDX[c], _IDX[nc]))
        if moves:
            out.append((pi, tuple(moves)))
    return tuple(out)


_VT = {(k, allow): _vertical_table(k, allow) for k in (0, 1, 2) for allow in (True, False)}
_CT = {(remain, ra, rb): _cross_table(remain, (ra, rb))
       for remain in (True, False) for ra in (True, False) for rb in (True, False)}
# classes that close into a single finished tour at the last column
_FINAL = {(ra, rb): tuple(i for i, c in enumerate(CLASS_ORDER)
                          if apply_cross(c, (0, 0), False, (ra, rb)) is _CLOSED)
          for ra in (True, False) for rb in (True, False)}

ACCEPTING = tuple(CLASS_ORDER[i] for i in _FINAL[False, False])

_INF = 1 << 62


class DpEntry(NamedTuple):
    cost: int
    prev: EquivalenceClass | None
    choice: VerticalKind | tuple[int, int] | None


@dataclass(frozen=True)
class DpTable:
    """Best cost and back-pointer per class for every stage.

    Stage ``2 * j`` follows the vertical configuration of aisle ``j``;
    stage ``2 * j + 1`` follows the rails between aisles ``j`` and ``j + 1``.
    """

    costs: list[list[int]]
    preds: list[list[int]]

    @property
    def stage_count(self) -> int:
        return len(self.costs)

    def entries(self, stage: int) -> dict[EquivalenceClass, DpEntry]:
        out = {}
        vertical = stage % 2 == 0
        for i, cost in enumerate(self.costs[stage]):
            if cost >= _INF:
                continue
            code = self.preds[stage][i]
            prev = CLASS_ORDER[code >> 3]
            choice = _KINDS[code & 7] if vertical else CROSS_PAIRS[code & 7]
            out[CLASS_ORDER[i]] = DpEntry(cost, prev, choice)
        return out

    def entry_counts(self) -> list[int]:
        return [sum(1 for c in row if c < _INF) for row in self.costs]


@dataclass(frozen=True)
class Solution:
    tour: TourSubgraph
    length: int
    table: DpTable | None
    vertical: tuple[VerticalKind, ...] | None
    cross: tuple[tuple[int, int], ...] | None

    @property
    def plan(self) -> tuple | None:
        """Chosen configurations in sweep order, or ``None`` for a lone-aisle path."""
        if self.vertical is None:
            return None
        out: list = []
        for j, kind in enumerate(self.vertical):
            out.append(kind)
            if j < len(self.cross):
                out.append(self.cross[j])
        return tuple(out)


def _aisle_costs(length: int, targets: tuple[int, ...]) -> tuple[int, ...]:
    k = len(targets)
    if not k:
        return (length, 0, 0, 0, 2 * length, 0)
    gap = largest_gap(targets)[0] if k > 1 else 0
    return (length, 2 * targets[-1], 2 * (length - targets[0]), 2 * (length - gap), 2 * length, 0)


def _compile(table: tuple, mask: int) -> tuple[Callable, int]:
    """Straight-line relaxation kernel for the moves of ``table`` that leave
    the classes in ``mask``; also returns the mask of reachable targets.

    The kernel maps ``(costs, weights)`` to ``(new costs, back-pointers)``.
    Candidates for one target are compared in choice-major order with a
    strict ``<``, so the earliest configuration wins ties.
    """
    groups: dict[int, list[tuple[int, int]]] = {}
    for ci, moves in table:
        for c, nc in moves:
            if mask >> c & 1:
                groups.setdefault(nc, []).append((c, ci))
    lines = ["def kernel(cur, w):",
             "    c0, c1, c2, c3, c4, c5, c6 = cur",
             "    new = [INF] * 7",
             "    pred = [-1] * 7"]
    out_mask = 0
    for nc in sorted(groups):
        out_mask |= 1 << nc
        (c, ci), *rest = groups[nc]
        lines.append(f"    b = c{c} + w[{ci}]; p = {c << 3 | ci}")
        for c, ci in rest:
            lines.append(f"    v = c{c} + w[{ci}]")
            lines.append(f"    if v < b: b = v; p = {c << 3 | ci}")
        lines.append(f"    new[{nc}] = b; pred[{nc}] = p")
    lines.append("    return new, pred")
    namespace = {"INF": _INF}
    exec("\n".join(lines), namespace)
    return namespace["kernel"], out_mask


def _sweep(inst: WarehouseInstance, allow_full_double: bool):
    n = inst.aisle_count
    lengths = inst.aisle_lengths
    targets = inst.interior_targets
    top_segments, bottom_segments = inst.top_segments, inst.bottom_segments
    dj, doff = inst.depot
    corner_col = dj if inst.depot_is_corner else -1
    corner_req = (doff == 0, doff == lengths[dj])
    last_col = max([j for j in range(n) if targets[j]] + [dj])

    vt = (_VT[0, allow_full_double], _VT[1, allow_full_double], _VT[2, allow_full_double])
    compiled: dict[tuple, tuple[Callable, int]] = {}
    costs: list[list[int]] = []
    preds: list[list[int]] = []
    cur = [_INF] * 7
    cur[_START] = 0
    mask = 1 << _START
    no_req = (False, False)
    for j in range(n):
        ts = targets[j]
        k = len(ts)
        key = (k if k < 2 else 2, mask)
        hit = compiled.get(key)
        if hit is None:
            hit = compiled[key] = _compile(vt[key[0]], mask)
        kernel, mask = hit
        cur, pred = kernel(cur, _aisle_costs(lengths[j], ts))
        costs.append(cur)
        preds.append(pred)
        if j == n - 1:
            break
        req = corner_req if j == corner_col else no_req
        key = (j < last_col, req[0], req[1], mask)
        hit = compiled.get(key)
        if hit is None:
            hit = compiled[key] = _compile(_CT[key[:3]], mask)
        kernel, mask = hit
        top, bottom = top_segments[j], bottom_segments[j]
        cur, pred = kernel(cur, (0, top + bottom, 2 * top, 2 * bottom, 2 * (top + bottom)))
        costs.append(cur)
        preds.append(pred)

    req = corner_req if corner_col == n - 1 else no_req
    best, best_c = _INF, -1
    for c in _FINAL[req]:
        if cur[c] < best:
            best, best_c = cur[c], c
    return DpTable(costs, preds), best, best_c


def _reconstruct(inst: WarehouseInstance, table: DpTable, final_c: int):
    n = inst.aisle_count
    kinds: list[VerticalKind] = [VerticalKind.NO_EDGES] * n
    pairs: list[tuple[int, int]] = [(0, 0)] * (n - 1)
    c = final_c
    for stage in range(table.stage_count - 1, -1, -1):
        code = table.preds[stage][c]
        if stage % 2 == 0:
            kinds[stage // 2] = _KINDS[code & 7]
        else:
            pairs[stage // 2] = CROSS_PAIRS[code & 7]
        c = code >> 3
    return kinds, pairs


def _build_tour(inst: WarehouseInstance, kinds, pairs) -> TourSubgraph:
    d: dict = {}
    lengths = inst.aisle_lengths
    targets = inst.interior_targets
    for j, kind in enumerate(kinds):
        if kind is VerticalKind.NO_EDGES:
            continue
        verts = [(j, 0), *[(j, o) for o in targets[j]], (j, lengths[j])]
        segs = list(zip(verts, verts[1:]))
        if kind is VerticalKind.SINGLE_PASS:
            d.update(zip(segs, repeat(1)))
            continue
        if kind is VerticalKind.TOP_UTURN:
            del segs[-1]
        elif kind is VerticalKind.BOTTOM_UTURN:
            del segs[0]
        elif kind is VerticalKind.LARGEST_GAP:
            del segs[largest_gap(targets[j])[1] + 1]
        d.update(zip(segs, repeat(2)))
    for j, (t, b) in enumerate(pairs):
        if t:
            d[((j, 0), (j + 1, 0))] = t
        if b:
            d[((j, lengths[j]), (j + 1, lengths[j + 1]))] = b
    return TourSubgraph._trusted(d)


def _lone_aisle_path(inst: WarehouseInstance) -> tuple[int, TourSubgraph] | None:
    """Doubled path between the extreme targets when every target shares one aisle."""
    dj, doff = inst.depot
    if any(ps for j, ps in enumerate(inst.picks) if j != dj):
        return None
    offs = (0, *inst.interior_targets[dj], inst.aisle_lengths[dj])
    pts = sorted(set(inst.picks[dj]) | {doff})
    if len(pts) < 2:
        return None
    lo, hi = pts[0], pts[-1]
    d = {((dj, offs[i]), (dj, offs[i + 1])): 2
         for i in range(len(offs) - 1) if lo <= offs[i] and offs[i + 1] <= hi}
    return 2 * (hi - lo), TourSubgraph._trusted(d)


@contextmanager
def _gc_paused() -> Iterator[None]:
    # the sweep allocates millions of acyclic tuples; generational passes only cost time
    enabled = gc.isenabled()
    gc.disable()
    try:
        yield
    finally:
        if enabled:
            gc.enable()


def solve(inst: WarehouseInstance, allow_full_double: bool = True) -> Solution:
    """Minimum-length tour subgraph.

    With ``allow_full_double=False`` no aisle may be traversed by a double
    edge over its whole length.

    Raises InfeasibleError if no admissible tour exists.
    """
    with _gc_paused():
        table, best, best_c = _sweep(inst, allow_full_double)
        lone = _lone_aisle_path(inst)
        if lone is not None and lone[0] <= best:
            return Solution(lone[1], lone[0], table, None, None)
        if best_c < 0:
            raise InfeasibleError("no admissible tour subgraph exists")
        kinds, pairs = _reconstruct(inst, table, best_c)
        return Solution(_build_tour(inst, kinds, pairs), best, table, tuple(kinds), tuple(pairs))
