"""The twelve demonstration scenes, one per contour style.

Each case gets its own small scene; combined_scene() packs all twelve on
one surface in a fixed grid.  Geometry is deliberately plain so the
scenes double as readable examples of the JSON format.
"""

from __future__ import annotations

import math

from .geometry import Point, Rect
from .mover import PartlyVisible, WorkArea
from .scene import Scene
from .shapes import (ContourResize, ControlStub, CornerStyle, GraphObject,
                     NCircle, NRing, RectCorners, RectEightNode, RectFull,
                     RectSolidMove, RectTiled, RegularPolygonObject, ScrewNut)


def _rect_shifted(ox: int = 0, oy: int = 0) -> RectCorners:
    return RectCorners(Rect(ox + 100, oy + 100, 140, 90), min_w=40, min_h=30,
                       style=CornerStyle.SHIFTED_SQUARES)


def _rect_circles(ox: int = 0, oy: int = 0) -> RectCorners:
    return RectCorners(Rect(ox + 110, oy + 95, 150, 100), min_w=40, min_h=30,
                       style=CornerStyle.CORNER_CIRCLES)


def _rect_eight(ox: int = 0, oy: int = 0) -> RectEightNode:
    return RectEightNode(Rect(ox + 100, oy + 90, 170, 110), min_w=40, min_h=30,
                         resize=ContourResize.ANY)


def _graph(ox: int = 0, oy: int = 0) -> GraphObject:
    points = [(ox + 120, oy + 110), (ox + 250, oy + 95), (ox + 300, oy + 190),
              (ox + 190, oy + 235), (ox + 95, oy + 190)]
    radii = [14, 11, 16, 12, 10]
    colors = ["#e76f51", "#2a9d8f", "#e9c46a", "#8ab17d", "#6d597a"]
    links = [[0, 1], [1, 2], [2, 3], [3, 4], [4, 0], [0, 3]]
    return GraphObject(points, radii, colors, links)


def _polygon(ox: int = 0, oy: int = 0) -> RegularPolygonObject:
    return RegularPolygonObject((ox + 200, oy + 165), radius=85, sides=3,
                                angle=math.pi / 2)


def _solid(ox: int = 0, oy: int = 0) -> RectSolidMove:
    return RectSolidMove(Rect(ox + 110, oy + 110, 170, 90))


def _tiled(ox: int = 0, oy: int = 0) -> RectTiled:
    return RectTiled(Rect(ox + 90, oy + 120, 220, 70))


def _screw_nut(ox: int = 0, oy: int = 0) -> ScrewNut:
    return ScrewNut((ox + 200, oy + 160), inner_radius=40, outer_radius=95,
                    angle=0.0)


def _rect_full(ox: int = 0, oy: int = 0) -> RectFull:
    return RectFull(Rect(ox + 100, oy + 95, 180, 110), min_w=40, min_h=30)


def _n_circle(ox: int = 0, oy: int = 0) -> NCircle:
    return NCircle((ox + 200, oy + 160), radius=100, node_radius=8,
                   node_distance=10, min_radius=20)


def _n_ring(ox: int = 0, oy: int = 0) -> NRing:
    return NRing((ox + 200, oy + 160), inner_radius=50, outer_radius=100,
                 node_distance=10, node_radius=8)


def _control(ox: int = 0, oy: int = 0) -> ControlStub:
    return ControlStub("list_panel", Rect(ox + 70, oy + 100, 300, 120),
                       resize=ContourResize.ANY,
                       min_w=250, max_w=500, min_h=80, max_h=240)


_CASES = [
    ("rect_shifted_squares", _rect_shifted),
    ("rect_corner_circles", _rect_circles),
    ("rect_eight_node", _rect_eight),
    ("graph", _graph),
    ("regular_polygon", _polygon),
    ("rect_solid_move", _solid),
    ("rect_tiled", _tiled),
    ("screw_nut", _screw_nut),
    ("rect_full", _rect_full),
    ("n_circle", _n_circle),
    ("n_ring", _n_ring),
    ("control_stub", _control),
]

_CASE_WORK = WorkArea(440, 340)


def case_slugs() -> list[str]:
    return [slug for slug, _ in _CASES]


def case_scene(slug: str) -> Scene:
    for name, build in _CASES:
        if name == slug:
            return Scene(_CASE_WORK, PartlyVisible(), [build()])
    raise KeyError(f"unknown gallery case {slug!r}")


def combined_scene() -> Scene:
    """All twelve cases on one surface, laid out on a 4x3 grid."""
    objects = []
    for i, (_, build) in enumerate(_CASES):
        col, row = i % 4, i // 4
        objects.append(build(col * 420, row * 360))
    return Scene(WorkArea(4 * 420 + 40, 3 * 360 + 40), PartlyVisible(), objects)
