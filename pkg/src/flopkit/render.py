"""SVG drawings of wall arrangements.

Geometry stays exact until the last step; coordinates are converted to
floats only when written out.
"""

from __future__ import annotations

import xml.etree.ElementTree as ET
from dataclasses import dataclass, field
from fractions import Fraction

from .arrangement import Wall, WallArrangement, Window
from .errors import DomainError

SVG_NS = "http://www.w3.org/2000/svg"

DEFAULT_STROKES = {1: 3.0, 2: 2.5, 3: 2.0, 4: 1.5, 5: 1.0, 6: 0.75}


@dataclass(frozen=True)
class RenderSpec:
    window: Window
    stroke_by_label: dict[int, float] = field(default_factory=lambda: dict(DEFAULT_STROKES))
    scale: int = 200

    def __post_init__(self) -> None:
        if self.scale <= 0:
            raise DomainError("scale must be positive")


def _num(x: Fraction | float) -> str:
    text = f"{float(x):.4f}".rstrip("0").rstrip(".")
    return "0" if text in ("", "-0") else text


def clip_line(wall: Wall, window: Window) -> list[tuple[Fraction, Fraction]]:
    """End points of the line ``wall`` inside the closed window box.

    Empty when the line misses the box or only touches a corner.
    """
    (c1, c2), n = wall.normal, wall.level
    (x0, y0), (x1, y1) = window.lo, window.hi
    pts = set()
    if c2:
        for x in (x0, x1):
            y = (n - c1 * x) / Fraction(c2)
            if y0 <= y <= y1:
                pts.add((x, y))
    if c1:
        for y in (y0, y1):
            x = (n - c2 * y) / Fraction(c1)
            if x0 <= x <= x1:
                pts.add((x, y))
    ordered = sorted(pts)
    if len(ordered) < 2:
        return []
    return [ordered[0], ordered[-1]]


def render_svg(arrangement: WallArrangement, spec: RenderSpec | None = None) -> str:
    """One ``polyline`` per wall; 1D walls carry a ``label-k`` class and stroke."""
    spec = spec or RenderSpec(arrangement.window)
    window = spec.window
    s = spec.scale
    x0, x1 = window.lo[0], window.hi[0]
    if arrangement.dimension == 1:
        y0, y1 = Fraction(0), Fraction(1, 4)
    else:
        y0, y1 = window.lo[1], window.hi[1]
    width, height = (x1 - x0) * s, (y1 - y0) * s

    def px(x: Fraction) -> str:
        return _num((x - x0) * s)

    def py(y: Fraction) -> str:
        return _num((y1 - y) * s)

    root = ET.Element(
        "svg",
        xmlns=SVG_NS,
        width=_num(width),
        height=_num(height),
        viewBox=f"0 0 {_num(width)} {_num(height)}",
    )
    ET.SubElement(root, "rect", x="0", y="0", width=_num(width), height=_num(height), fill="white")
    group = ET.SubElement(root, "g", stroke="black", fill="none")

    if arrangement.dimension == 1:
        ET.SubElement(group, "polyline", points=f"{px(x0)},{py(y1 / 2)} {px(x1)},{py(y1 / 2)}",
                      stroke="gray", **{"stroke-dasharray": "4 2"})
        for wall in arrangement.walls:
            x = wall.position
            if not x0 <= x <= x1:
                continue
            ET.SubElement(
                group,
                "polyline",
                points=f"{px(x)},{py(y0)} {px(x)},{py(y1)}",
                **{"class": f"wall label-{wall.label}",
                   "stroke-width": _num(spec.stroke_by_label.get(wall.label, 1.0))},
            )
            text = ET.SubElement(root, "text", x=px(x), y=py(y1 / 8), **{"font-size": "12", "text-anchor": "middle"})
            text.text = str(wall.label)
    else:
        for wall in arrangement.walls:
            ends = clip_line(wall, window)
            if not ends:
                continue
            points = " ".join(f"{px(x)},{py(y)}" for x, y in ends)
            ET.SubElement(group, "polyline", points=points, **{"class": "wall", "stroke-width": "1"})

    ET.indent(root)
    return ET.tostring(root, encoding="unicode") + "\n"
