"""Render primitives: the drawing vocabulary shared by the SVG emitter and UI.

Contours and shapes both describe themselves as flat lists of these values;
renderers only transcribe them, never compute geometry of their own.
"""

from __future__ import annotations

from dataclasses import dataclass, fields
from typing import Union

BACKGROUND = "#ffffff"
CONTOUR_STROKE = "#2e8b57"


@dataclass(frozen=True)
class Line:
    x1: int
    y1: int
    x2: int
    y2: int
    stroke: str = "#000000"
    width: int = 1


@dataclass(frozen=True)
class Box:
    x: int
    y: int
    w: int
    h: int
    stroke: str | None = "#000000"
    fill: str | None = None
    width: int = 1


@dataclass(frozen=True)
class Circle:
    cx: int
    cy: int
    r: int
    stroke: str | None = "#000000"
    fill: str | None = None
    width: int = 1


@dataclass(frozen=True)
class Polygon:
    points: tuple
    stroke: str | None = "#000000"
    fill: str | None = None
    width: int = 1


@dataclass(frozen=True)
class Text:
    x: int
    y: int
    text: str
    fill: str = "#000000"
    size: int = 12


Primitive = Union[Line, Box, Circle, Polygon, Text]

_KINDS = {Line: "line", Box: "box", Circle: "circle", Polygon: "polygon", Text: "text"}


def primitive_to_json(prim: Primitive) -> dict:
    """Flatten one primitive into a JSON-ready dict with a kind tag."""
    out: dict = {"kind": _KINDS[type(prim)]}
    if isinstance(prim, Polygon):
        out["points"] = [[int(x), int(y)] for x, y in prim.points]
        out["stroke"] = prim.stroke
        out["fill"] = prim.fill
        out["width"] = prim.width
    else:
        for field in fields(prim):
            out[field.name] = getattr(prim, field.name)
    return out


def primitives_to_json(prims: list) -> list[dict]:
    return [primitive_to_json(p) for p in prims]
