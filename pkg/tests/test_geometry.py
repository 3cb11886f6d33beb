from __future__ import annotations

import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from gripkit.geometry import (Point, Rect, dist_to_segment, distance,
                              on_segment, point_at, point_in_polygon,
                              point_on_line)

coord = st.integers(min_value=-2000, max_value=2000)
points = st.builds(Point, coord, coord)


def test_distance_known_values():
    assert distance(Point(0, 0), Point(3, 4)) == 5.0
    assert distance(Point(7, 7), Point(7, 7)) == 0.0
    assert distance(Point(0, 0), Point(1, 1)) == pytest.approx(math.sqrt(2), abs=1e-9)


@given(points, points)
def test_distance_is_symmetric(a, b):
    assert distance(a, b) == distance(b, a)


@given(points, points, points)
def test_distance_triangle_inequality(a, b, c):
    assert distance(a, c) <= distance(a, b) + distance(b, c) + 1e-9


def test_point_at_cardinal_directions():
    c = Point(100, 100)
    assert point_at(c, 0.0, 50) == Point(150, 100)
    # Positive angles turn counter-clockwise on screen, so y decreases.
    assert point_at(c, math.pi / 2, 50) == Point(100, 50)
    assert point_at(c, math.pi, 50) == Point(50, 100)
    assert point_at(c, -math.pi / 2, 50) == Point(100, 150)


def test_point_at_rounds_to_nearest():
    # cos(pi/6) * 100 = 86.60..., sin(pi/6) * 100 = 50.
    assert point_at(Point(0, 0), math.pi / 6, 100) == Point(87, -50)


def test_point_at_rejects_negative_radius():
    with pytest.raises(ValueError):
        point_at(Point(0, 0), 0.0, -1)


@given(points, st.floats(min_value=-10, max_value=10, allow_nan=False),
       st.integers(min_value=0, max_value=500))
def test_point_at_stays_within_half_pixel(center, angle, radius):
    p = point_at(center, angle, radius)
    assert abs(p.x - (center.x + radius * math.cos(angle))) <= 0.5
    assert abs(p.y - (center.y - radius * math.sin(angle))) <= 0.5


def test_point_on_line_known_values():
    assert point_on_line(Point(0, 0), Point(10, 6), 0.5) == Point(5, 3)
    assert point_on_line(Point(4, 9), Point(-20, 33), 0.0) == Point(4, 9)
    assert point_on_line(Point(2, 0), Point(12, 20), 0.3) == Point(5, 6)


@given(points, points)
def test_point_on_line_endpoints(a, b):
    assert point_on_line(a, b, 0.0) == a
    assert point_on_line(a, b, 1.0) == b


@given(points, points, st.floats(min_value=0, max_value=1, allow_nan=False))
def test_point_on_line_stays_in_bounding_box(a, b, ratio):
    p = point_on_line(a, b, ratio)
    assert min(a.x, b.x) <= p.x <= max(a.x, b.x)
    assert min(a.y, b.y) <= p.y <= max(a.y, b.y)


def test_dist_to_segment_perpendicular_and_clamped():
    assert dist_to_segment(Point(5, 3), Point(0, 0), Point(10, 0)) == 3.0
    # Beyond the start: clamps to the endpoint, a 3-4-5 triangle.
    assert dist_to_segment(Point(-4, 3), Point(0, 0), Point(10, 0)) == 5.0
    assert dist_to_segment(Point(2, 2), Point(7, 7), Point(7, 7)) == pytest.approx(
        math.hypot(5, 5))


def test_dist_to_segment_against_sampling_oracle():
    p, a, b = Point(6, 7), Point(1, 2), Point(9, 4)
    t = np.linspace(0.0, 1.0, 1_000_001)
    xs = a.x + t * (b.x - a.x)
    ys = a.y + t * (b.y - a.y)
    oracle = float(np.min(np.hypot(p.x - xs, p.y - ys)))
    got = dist_to_segment(p, a, b)
    assert abs(got - oracle) <= 1e-3
    assert got == pytest.approx(3.6380343755, abs=1e-6)


@given(points, points, points)
def test_dist_to_segment_never_beats_endpoints(p, a, b):
    d = dist_to_segment(p, a, b)
    assert 0.0 <= d <= min(distance(p, a), distance(p, b)) + 1e-9


@given(points, points, st.floats(min_value=0, max_value=1, allow_nan=False))
def test_points_on_segment_have_zero_distance(a, b, ratio):
    p = point_on_line(a, b, ratio)
    if on_segment(p, a, b):
        assert dist_to_segment(p, a, b) <= 0.71  # worst case: rounded off-line


SQUARE = [Point(0, 0), Point(10, 0), Point(10, 10), Point(0, 10)]


def test_point_in_polygon_basic():
    assert point_in_polygon(Point(5, 5), SQUARE)
    assert point_in_polygon(Point(10, 5), SQUARE)  # boundary counts
    assert point_in_polygon(Point(0, 0), SQUARE)   # vertex counts
    assert not point_in_polygon(Point(11, 5), SQUARE)
    assert not point_in_polygon(Point(-1, -1), SQUARE)


def test_point_in_polygon_rejects_degenerate():
    with pytest.raises(ValueError):
        point_in_polygon(Point(0, 0), [Point(0, 0), Point(1, 1)])


def test_point_in_polygon_concave():
    # An L shape: the notch at the top right is outside.
    l_shape = [Point(0, 0), Point(4, 0), Point(4, 2), Point(2, 2),
               Point(2, 6), Point(0, 6)]
    assert point_in_polygon(Point(1, 5), l_shape)
    assert point_in_polygon(Point(3, 1), l_shape)
    assert not point_in_polygon(Point(3, 4), l_shape)


def _half_plane_inside(p: Point, tri: list[Point]) -> bool:
    # Independent oracle for convex polygons: consistent cross-product signs.
    area2 = 0
    n = len(tri)
    for i in range(n):
        a, b = tri[i], tri[(i + 1) % n]
        area2 += a.x * b.y - b.x * a.y
    orient = 1 if area2 > 0 else -1
    for i in range(n):
        a, b = tri[i], tri[(i + 1) % n]
        cross = (b.x - a.x) * (p.y - a.y) - (b.y - a.y) * (p.x - a.x)
        if cross * orient < 0:
            return False
    return True


def test_point_in_polygon_matches_half_plane_oracle_on_triangle():
    tri = [Point(3, 2), Point(41, 9), Point(17, 37)]
    rng = np.random.default_rng(20240803)
    xs = rng.integers(-5, 50, size=10_000)
    ys = rng.integers(-5, 45, size=10_000)
    for x, y in zip(xs, ys):
        p = Point(int(x), int(y))
        assert point_in_polygon(p, tri) == _half_plane_inside(p, tri)


def _convex_hull(pts: list[Point]) -> list[Point]:
    pts = sorted(set(pts))

    def half(seq):
        out: list[Point] = []
        for p in seq:
            while len(out) >= 2:
                o, a = out[-2], out[-1]
                if (a.x - o.x) * (p.y - o.y) - (a.y - o.y) * (p.x - o.x) <= 0:
                    out.pop()
                else:
                    break
            out.append(p)
        return out

    lower = half(pts)
    upper = half(reversed(pts))
    return lower[:-1] + upper[:-1]


@given(st.lists(st.tuples(st.integers(0, 60), st.integers(0, 60)),
                min_size=6, max_size=14, unique=True),
       st.integers(-5, 65), st.integers(-5, 65))
def test_point_in_polygon_matches_oracle_on_random_hulls(raw, x, y):
    hull = _convex_hull([Point(a, b) for a, b in raw])
    if len(hull) < 3:
        return
    p = Point(x, y)
    assert point_in_polygon(p, hull) == _half_plane_inside(p, hull)


def test_rect_edges():
    rc = Rect(10, 20, 30, 40)
    assert rc.right == 40
    assert rc.bottom == 60
    assert rc.moved(5, -5) == Rect(15, 15, 30, 40)
