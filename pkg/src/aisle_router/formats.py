"""JSON encoding of instances and tours.

Files use 1-based aisle numbers. Vertex ids are ``"a3"`` / ``"b3"`` for the
top / bottom corner of aisle 3, ``"p2.4"`` for the fourth pick of aisle 2
and ``"depot"`` for a depot strictly inside an aisle (a depot on a corner
is written as that corner).
"""

from __future__ import annotations

import json
import re
from bisect import bisect_left
from collections.abc import Mapping
from typing import Any

from .errors import FormatError, InvalidInstanceError
from .model import Edge, TourSubgraph, Vertex, WarehouseInstance, tour_length

_VERTEX_RE = re.compile(r"^(?:([ab])(\d+)|p(\d+)\.(\d+)|(depot))$")


def instance_to_dict(inst: WarehouseInstance) -> dict[str, Any]:
    return {
        "aisles": [{"length": length, "picks": list(picks)}
                   for length, picks in zip(inst.aisle_lengths, inst.picks)],
        "top_segments": list(inst.top_segments),
        "bottom_segments": list(inst.bottom_segments),
        "depot": {"aisle": inst.depot[0] + 1, "offset": inst.depot[1]},
    }


def instance_from_dict(data: Mapping[str, Any]) -> WarehouseInstance:
    try:
        aisles = data["aisles"]
        inst = WarehouseInstance(
            aisle_lengths=tuple(a["length"] for a in aisles),
            picks=tuple(tuple(a.get("picks", ())) for a in aisles),
            top_segments=tuple(data.get("top_segments", ())),
            bottom_segments=tuple(data.get("bottom_segments", ())),
            depot=(data["depot"]["aisle"] - 1, data["depot"]["offset"]),
        )
    except (KeyError, TypeError) as exc:
        raise FormatError(f"malformed instance: missing or mistyped field {exc}") from exc
    except InvalidInstanceError as exc:
        raise FormatError(f"invalid instance: {exc}") from exc
    return inst


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2) + "\n"


def dumps_instance(inst: WarehouseInstance) -> str:
    return dumps(instance_to_dict(inst))


def loads_instance(text: str) -> WarehouseInstance:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"instance is not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise FormatError("instance must be a JSON object")
    return instance_from_dict(data)


def vertex_id(inst: WarehouseInstance, v: Vertex) -> str:
    j, off = v
    if off == 0:
        return f"a{j + 1}"
    if off == inst.aisle_lengths[j]:
        return f"b{j + 1}"
    if v == inst.depot:
        return "depot"
    picks = inst.picks[j]
    i = bisect_left(picks, off)
    if i == len(picks) or picks[i] != off:
        raise FormatError(f"{v} is not a vertex of the warehouse")
    return f"p{j + 1}.{i + 1}"


def parse_vertex(inst: WarehouseInstance, text: str) -> Vertex:
    m = _VERTEX_RE.match(text)
    if m is None:
        raise FormatError(f"bad vertex id {text!r}")
    corner, aisle, pick_aisle, pick_idx, depot = m.groups()
    if depot:
        return inst.depot
    j = int(aisle or pick_aisle) - 1
    if not (0 <= j < inst.aisle_count):
        raise FormatError(f"vertex {text!r} refers to a missing aisle")
    if corner == "a":
        return (j, 0)
    if corner == "b":
        return (j, inst.aisle_lengths[j])
    i = int(pick_idx) - 1
    if not (0 <= i < len(inst.picks[j])):
        raise FormatError(f"vertex {text!r} refers to a missing pick")
    return (j, inst.picks[j][i])


def tour_to_dict(inst: WarehouseInstance, t: Mapping[Edge, int]) -> dict[str, Any]:
    order = {e: i for i, e in enumerate(inst.iter_edges())}
    edges = sorted(t.items(), key=lambda item: order.get(item[0], len(order)))
    return {
        "edges": [{"from": vertex_id(inst, u), "to": vertex_id(inst, v), "mult": m} for (u, v), m in edges],
        "length": tour_length(inst, t),
    }


def tour_from_dict(inst: WarehouseInstance, data: Mapping[str, Any]) -> TourSubgraph:
    try:
        raw = [((parse_vertex(inst, e["from"]), parse_vertex(inst, e["to"])), e["mult"]) for e in data["edges"]]
    except (KeyError, TypeError) as exc:
        raise FormatError(f"malformed tour: {exc}") from exc
    lengths = inst.edge_lengths
    for edge, m in raw:
        if not isinstance(m, int) or m < 0:
            raise FormatError(f"bad multiplicity {m!r}")
        u, v = edge
        if (u, v) not in lengths and (v, u) not in lengths:
            raise FormatError(f"{vertex_id(inst, u)}-{vertex_id(inst, v)} is not an edge of the warehouse")
    t = TourSubgraph(raw)
    if "length" in data and data["length"] != tour_length(inst, t):
        raise FormatError(f"declared length {data['length']} differs from {tour_length(inst, t)}")
    return t


def dumps_tour(inst: WarehouseInstance, t: Mapping[Edge, int]) -> str:
    return dumps(tour_to_dict(inst, t))


def loads_tour(inst: WarehouseInstance, text: str) -> TourSubgraph:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"tour is not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise FormatError("tour must be a JSON object")
    return tour_from_dict(inst, data)
