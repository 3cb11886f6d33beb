"""Integer-pixel 2D primitives shared by every hit test.

Screen coordinates: x grows right, y grows down.  Angles use the usual math
convention (0 points right, positive turns counter-clockwise as seen on
screen), so polar constructions negate the y component.
"""

from __future__ import annotations

import math
from typing import NamedTuple, Sequence


class Point(NamedTuple):
    """A pixel position on the drawing surface."""

    x: int
    y: int

    def moved(self, dx: int, dy: int) -> "Point":
        return Point(self.x + dx, self.y + dy)


class Delta(NamedTuple):
    """A displacement in pixels."""

    dx: int
    dy: int


class Rect(NamedTuple):
    """Axis-aligned rectangle anchored at its top-left corner."""

    x: int
    y: int
    w: int
    h: int

    @property
    def right(self) -> int:
        return self.x + self.w

    @property
    def bottom(self) -> int:
        return self.y + self.h

    def moved(self, dx: int, dy: int) -> "Rect":
        return Rect(self.x + dx, self.y + dy, self.w, self.h)


def distance(a: Point, b: Point) -> float:
    """Euclidean distance between two points."""
    return math.hypot(b.x - a.x, b.y - a.y)


def point_at(center: Point, angle: float, radius: float) -> Point:
    """Point at polar offset (angle, radius) from center, rounded to pixels.

    Args:
        center: pole of the polar offset.
        angle: radians, 0 pointing right, counter-clockwise positive.
        radius: nonnegative distance in pixels.

    Returns:
        The nearest integer point; y is inverted for the screen.
    """
    if radius < 0:
        raise ValueError("radius must be nonnegative")
    return Point(center.x + round(radius * math.cos(angle)),
                 center.y - round(radius * math.sin(angle)))


def point_on_line(a: Point, b: Point, ratio: float) -> Point:
    """Point a + ratio * (b - a), rounded per component.

    ratio 0 gives a, ratio 1 gives b; values outside [0, 1] extrapolate.
    """
    return Point(round(a.x + ratio * (b.x - a.x)),
                 round(a.y + ratio * (b.y - a.y)))


def dist_to_segment(p: Point, a: Point, b: Point) -> float:
    """Distance from p to the closed segment [a, b].

    Degenerates to the plain point distance when a == b.
    """
    dx = b.x - a.x
    dy = b.y - a.y
    if dx == 0 and dy == 0:
        return distance(p, a)
    t = ((p.x - a.x) * dx + (p.y - a.y) * dy) / (dx * dx + dy * dy)
    t = max(0.0, min(1.0, t))
    return math.hypot(p.x - (a.x + t * dx), p.y - (a.y + t * dy))


def on_segment(p: Point, a: Point, b: Point) -> bool:
    """Exact integer test: does p lie on the closed segment [a, b]?"""
    cross = (b.x - a.x) * (p.y - a.y) - (b.y - a.y) * (p.x - a.x)
    if cross != 0:
        return False
    return (min(a.x, b.x) <= p.x <= max(a.x, b.x)
            and min(a.y, b.y) <= p.y <= max(a.y, b.y))


def point_in_polygon(p: Point, vertices: Sequence[Point]) -> bool:
    """Even-odd containment test with the boundary counting as inside.

    Works entirely in integer arithmetic, so results are exact for any
    simple polygon with pixel vertices.
    """
    n = len(vertices)
    if n < 3:
        raise ValueError("polygon needs at least 3 vertices")
    for i in range(n):
        if on_segment(p, vertices[i], vertices[(i + 1) % n]):
            return True
    inside = False
    j = n - 1
    for i in range(n):
        xi, yi = vertices[i]
        xj, yj = vertices[j]
        if (yi > p.y) != (yj > p.y):
            # Exact comparison of p.x against the edge crossing at height p.y.
            t = (p.x - xi) * (yj - yi) - (xj - xi) * (p.y - yi)
            if (t < 0) if yj > yi else (t > 0):
                inside = not inside
        j = i
    return inside
