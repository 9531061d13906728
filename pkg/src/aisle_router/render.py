"""SVG drawings of warehouses and tours.

Doubled edges are drawn as two parallel strokes. Corners are filled dots,
picks hollow circles and the depot a red square.
"""

from __future__ import annotations

import math
import xml.etree.ElementTree as ET
from collections.abc import Mapping
from dataclasses import dataclass
from pathlib import Path

from .formats import vertex_id
from .model import Edge, Vertex, WarehouseInstance

SVG_NS = "http://www.w3.org/2000/svg"
MARGIN = 30.0
STROKE_GAP = 3.0


@dataclass(frozen=True)
class RenderSpec:
    output: Path | None = None
    scale: float = 20.0
    show_labels: bool = True
    parallel_doubles: bool = True

    def __post_init__(self) -> None:
        if not self.scale > 0:
            raise ValueError("scale must be positive")


def _position(inst: WarehouseInstance, v: Vertex, scale: float) -> tuple[float, float]:
    j, off = v
    x = MARGIN + scale * sum(inst.top_segments[:j])
    return x, MARGIN + scale * off


def _line(parent: ET.Element, p: tuple[float, float], q: tuple[float, float], **attrs: str) -> None:
    ET.SubElement(parent, "line", x1=f"{p[0]:.2f}", y1=f"{p[1]:.2f}", x2=f"{q[0]:.2f}", y2=f"{q[1]:.2f}", **attrs)


def render_svg(inst: WarehouseInstance, tour: Mapping[Edge, int] | None = None,
               spec: RenderSpec = RenderSpec()) -> str:
    s = spec.scale
    width = 2 * MARGIN + s * sum(inst.top_segments)
    height = 2 * MARGIN + s * max(inst.aisle_lengths)
    svg = ET.Element("svg", xmlns=SVG_NS, width=f"{width:.0f}", height=f"{height:.0f}",
                     viewBox=f"0 0 {width:.2f} {height:.2f}")

    grid = ET.SubElement(svg, "g", {"class": "warehouse", "stroke": "#bbbbbb", "stroke-width": "1"})
    for u, v in inst.iter_edges():
        _line(grid, _position(inst, u, s), _position(inst, v, s))

    if tour:
        strokes = ET.SubElement(svg, "g", {"class": "tour", "stroke": "#1f4e9c", "stroke-width": "1.6"})
        for (u, v), m in tour.items():
            p, q = _position(inst, u, s), _position(inst, v, s)
            name = f"{vertex_id(inst, u)}-{vertex_id(inst, v)}"
            if m == 1 or not spec.parallel_doubles:
                _line(strokes, p, q, **{"data-edge": name, "stroke-width": f"{1.6 * m:.1f}"})
                continue
            dx, dy = q[0] - p[0], q[1] - p[1]
            norm = math.hypot(dx, dy) or 1.0
            nx, ny = -dy / norm, dx / norm
            for k in range(m):
                off = STROKE_GAP * (k - (m - 1) / 2)
                _line(strokes, (p[0] + nx * off, p[1] + ny * off), (q[0] + nx * off, q[1] + ny * off),
                      **{"data-edge": name})

    marks = ET.SubElement(svg, "g", {"class": "vertices"})
    for j in range(inst.aisle_count):
        for v in (inst.top(j), inst.bottom(j)):
            x, y = _position(inst, v, s)
            ET.SubElement(marks, "circle", {"class": "corner", "cx": f"{x:.2f}", "cy": f"{y:.2f}", "r": "3",
                                            "fill": "black"})
            if spec.show_labels:
                label = ET.SubElement(marks, "text", x=f"{x + 5:.2f}", y=f"{y - 5 if v[1] == 0 else y + 14:.2f}",
                                      **{"font-size": "10", "font-family": "sans-serif"})
                label.text = vertex_id(inst, v)
        for p in inst.picks[j]:
            x, y = _position(inst, (j, p), s)
            ET.SubElement(marks, "circle", {"class": "pick", "cx": f"{x:.2f}", "cy": f"{y:.2f}", "r": "5",
                                            "fill": "white", "stroke": "black"})
    x, y = _position(inst, inst.depot, s)
    ET.SubElement(marks, "rect", {"class": "depot", "x": f"{x - 5:.2f}", "y": f"{y - 5:.2f}", "width": "10",
                                  "height": "10", "fill": "#c0392b"})
    return ET.tostring(svg, encoding="unicode") + "\n"


def write_svg(inst: WarehouseInstance, tour: Mapping[Edge, int] | None, spec: RenderSpec) -> Path:
    if spec.output is None:
        raise ValueError("RenderSpec.output is required to write a file")
    path = Path(spec.output)
    path.write_text(render_svg(inst, tour, spec), encoding="utf-8")
    return path
