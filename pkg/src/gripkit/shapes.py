"""The stock object classes, one per demonstrated contour style.

Each class is self-contained: geometry fields, contour construction, the
reaction to node drags, its own image, and a JSON record.  Resize limits
live in the objects themselves; the supervising engine never knows them.
"""

from __future__ import annotations

import math
from enum import Enum

from . import render
from .contour import (CircleArea, Connection, Contour, CursorHint,
                      MovementFreedom, Node, SquareArea)
from .errors import InvariantError
from .geometry import Delta, Point, Rect, distance, point_at, point_on_line
from .moveable import MouseButton, MoveableObject

CORNER_SHIFT = 3
CORNER_CIRCLE_RADIUS = 6
BORDER_HALF = 3
RING_GAP = 8
CONTROL_CORNER_HALF = 5
CONTROL_STRIP_HALF = 3


class CornerStyle(Enum):
    SHIFTED_SQUARES = "shifted_squares"
    CORNER_CIRCLES = "corner_circles"


class ContourResize(Enum):
    """Which directions a rectangle's handles are allowed to resize in."""

    NONE = "none"
    NS = "ns"
    WE = "we"
    ANY = "any"


def _check_rect(rect: Rect, min_w: int, min_h: int) -> Rect:
    rect = Rect(*(int(v) for v in rect))
    if min_w < 1 or min_h < 1:
        raise InvariantError("minimum sizes must be positive")
    if rect.w < min_w or rect.h < min_h:
        raise InvariantError(
            f"rectangle {rect.w}x{rect.h} starts below its minimum {min_w}x{min_h}")
    return rect


class RectCorners(MoveableObject):
    """Rectangle moved by its border, resized by four corner nodes.

    Two looks: small squares shifted diagonally outside the corners, or
    slightly enlarged circles sitting exactly on them.  Node order is
    left-top, right-top, right-bottom, left-bottom.
    """

    kind = "rect_corners"

    def __init__(self, rect: Rect, min_w: int = 20, min_h: int = 20,
                 style: CornerStyle = CornerStyle.SHIFTED_SQUARES) -> None:
        super().__init__()
        self.rect = _check_rect(rect, min_w, min_h)
        self.min_w = int(min_w)
        self.min_h = int(min_h)
        self.style = style
        self.define_contour()

    def define_contour(self) -> None:
        rc = self.rect
        if self.style is CornerStyle.SHIFTED_SQUARES:
            s = CORNER_SHIFT
            nodes = (
                Node(0, Point(rc.x - s, rc.y - s)),
                Node(1, Point(rc.right, rc.y), shift=Delta(s, -s)),
                Node(2, Point(rc.right + s, rc.bottom + s)),
                Node(3, Point(rc.x - s, rc.bottom + s)),
            )
            connections = tuple(Connection(i, (i + 1) % 4) for i in range(4))
            self._contour = Contour(nodes, connections)
        else:
            corners = (Point(rc.x, rc.y), Point(rc.right, rc.y),
                       Point(rc.right, rc.bottom), Point(rc.x, rc.bottom))
            nodes = tuple(Node(i, p, area=CircleArea(CORNER_CIRCLE_RADIUS))
                          for i, p in enumerate(corners))
            self._contour = Contour.closed_loop(nodes)

    def move(self, dx: int, dy: int) -> None:
        self.rect = self.rect.moved(dx, dy)

    def move_contour_point(self, index: int, dx: int, dy: int,
                           mouse: Point, button: MouseButton) -> bool:
        if button is not MouseButton.LEFT:
            return False
        x, y, w, h = self.rect
        changed = False
        if index in (0, 1):
            if dy != 0 and h - dy >= self.min_h:
                y += dy
                h -= dy
                changed = True
        else:
            if dy != 0 and h + dy >= self.min_h:
                h += dy
                changed = True
        if index in (1, 2):
            if dx != 0 and w + dx >= self.min_w:
                w += dx
                changed = True
        else:
            if dx != 0 and w - dx >= self.min_w:
                x += dx
                w -= dx
                changed = True
        if changed:
            self.rect = Rect(x, y, w, h)
        return changed

    def render(self) -> list:
        rc = self.rect
        return [render.Box(rc.x, rc.y, rc.w, rc.h, stroke="#33415c", fill="#e8eef7")]

    def to_json(self) -> dict:
        return {"type": self.kind, "rect": list(self.rect),
                "min_w": self.min_w, "min_h": self.min_h,
                "style": self.style.value}

    @classmethod
    def from_json(cls, data: dict) -> "RectCorners":
        return cls(Rect(*data["rect"]), data["min_w"], data["min_h"],
                   CornerStyle(data["style"]))


class RectEightNode(MoveableObject):
    """Rectangle with eight handles: corners plus side midpoints.

    The resize mode picks which handles are live; dead handles keep their
    slots so indexing stays stable.  Order starts at the left-top corner
    and goes clockwise.
    """

    kind = "rect_eight_node"

    _ANY_FREEDOM = (MovementFreedom.ANY, MovementFreedom.NS, MovementFreedom.ANY,
                    MovementFreedom.WE, MovementFreedom.ANY, MovementFreedom.NS,
                    MovementFreedom.ANY, MovementFreedom.WE)
    _ANY_CURSOR = (CursorHint.SIZE_NWSE, CursorHint.SIZE_NS, CursorHint.SIZE_NESW,
                   CursorHint.SIZE_WE, CursorHint.SIZE_NWSE, CursorHint.SIZE_NS,
                   CursorHint.SIZE_NESW, CursorHint.SIZE_WE)

    def __init__(self, rect: Rect, min_w: int = 20, min_h: int = 20,
                 resize: ContourResize = ContourResize.ANY) -> None:
        super().__init__()
        self.rect = _check_rect(rect, min_w, min_h)
        self.min_w = int(min_w)
        self.min_h = int(min_h)
        self.resize = resize
        self.define_contour()

    def _handle_points(self) -> list[Point]:
        rc = self.rect
        mx = rc.x + rc.w // 2
        my = rc.y + rc.h // 2
        return [Point(rc.x, rc.y), Point(mx, rc.y), Point(rc.right, rc.y),
                Point(rc.right, my), Point(rc.right, rc.bottom),
                Point(mx, rc.bottom), Point(rc.x, rc.bottom), Point(rc.x, my)]

    def _slots(self) -> list[tuple[MovementFreedom, CursorHint]]:
        mode = self.resize
        if mode is ContourResize.ANY:
            return list(zip(self._ANY_FREEDOM, self._ANY_CURSOR))
        if mode is ContourResize.NS:
            slots = [(MovementFreedom.NS, CursorHint.SIZE_NS)] * 8
            slots[3] = slots[7] = (MovementFreedom.NONE, CursorHint.SIZE_ALL)
            return slots
        if mode is ContourResize.WE:
            slots = [(MovementFreedom.WE, CursorHint.SIZE_WE)] * 8
            slots[1] = slots[5] = (MovementFreedom.NONE, CursorHint.SIZE_ALL)
            return slots
        return [(MovementFreedom.NONE, CursorHint.SIZE_ALL)] * 8

    def define_contour(self) -> None:
        nodes = tuple(
            Node(i, p, freedom=freedom, cursor=cursor)
            for i, (p, (freedom, cursor)) in enumerate(zip(self._handle_points(),
                                                           self._slots())))
        self._contour = Contour.closed_loop(nodes)

    def move(self, dx: int, dy: int) -> None:
        self.rect = self.rect.moved(dx, dy)

    def move_contour_point(self, index: int, dx: int, dy: int,
                           mouse: Point, button: MouseButton) -> bool:
        if button is not MouseButton.LEFT:
            return False
        freedom = self.contour.node_freedom(index)
        v_ok = freedom in (MovementFreedom.ANY, MovementFreedom.NS)
        h_ok = freedom in (MovementFreedom.ANY, MovementFreedom.WE)
        x, y, w, h = self.rect
        changed = False
        if v_ok and dy != 0:
            if index in (0, 1, 2) and h - dy >= self.min_h:
                y += dy
                h -= dy
                changed = True
            elif index in (4, 5, 6) and h + dy >= self.min_h:
                h += dy
                changed = True
        if h_ok and dx != 0:
            if index in (2, 3, 4) and w + dx >= self.min_w:
                w += dx
                changed = True
            elif index in (0, 6, 7) and w - dx >= self.min_w:
                x += dx
                w -= dx
                changed = True
        if changed:
            self.rect = Rect(x, y, w, h)
        return changed

    def render(self) -> list:
        rc = self.rect
        return [render.Box(rc.x, rc.y, rc.w, rc.h, stroke="#5f0f40", fill="#f3e8ee")]

    def to_json(self) -> dict:
        return {"type": self.kind, "rect": list(self.rect),
                "min_w": self.min_w, "min_h": self.min_h,
                "resize": self.resize.value}

    @classmethod
    def from_json(cls, data: dict) -> "RectEightNode":
        return cls(Rect(*data["rect"]), data["min_w"], data["min_h"],
                   ContourResize(data["resize"]))


class GraphObject(MoveableObject):
    """Node-and-edge diagram: every vertex drags alone, edges drag the whole."""

    kind = "graph"

    def __init__(self, points, radii, colors, links) -> None:
        super().__init__()
        pts = [Point(int(x), int(y)) for x, y in points]
        if not pts:
            raise InvariantError("graph needs at least one vertex")
        if not (len(pts) == len(radii) == len(colors)):
            raise InvariantError("points, radii and colors must have equal length")
        radii = [int(r) for r in radii]
        if any(r < 1 for r in radii):
            raise InvariantError("vertex radii must be positive")
        links = [(int(a), int(b)) for a, b in links]
        for a, b in links:
            if not (0 <= a < len(pts) and 0 <= b < len(pts)) or a == b:
                raise InvariantError(f"link ({a}, {b}) is not a pair of distinct vertices")
        self.points = pts
        self.radii = radii
        self.colors = [str(c) for c in colors]
        self.links = links
        self.define_contour()

    def define_contour(self) -> None:
        nodes = tuple(Node(i, p, area=CircleArea(r))
                      for i, (p, r) in enumerate(zip(self.points, self.radii)))
        connections = tuple(Connection(a, b) for a, b in self.links)
        self._contour = Contour(nodes, connections)

    def move(self, dx: int, dy: int) -> None:
        self.points = [p.moved(dx, dy) for p in self.points]

    def move_contour_point(self, index: int, dx: int, dy: int,
                           mouse: Point, button: MouseButton) -> bool:
        if button is not MouseButton.LEFT or (dx == 0 and dy == 0):
            return False
        self.points[index] = self.points[index].moved(dx, dy)
        return True

    def render(self) -> list:
        prims: list = []
        for a, b in self.links:
            pa, pb = self.points[a], self.points[b]
            prims.append(render.Line(pa.x, pa.y, pb.x, pb.y, stroke="#555555"))
        for p, r, color in zip(self.points, self.radii, self.colors):
            prims.append(render.Circle(p.x, p.y, r, stroke="#333333", fill=color))
        return prims

    def to_json(self) -> dict:
        return {"type": self.kind,
                "points": [list(p) for p in self.points],
                "radii": list(self.radii),
                "colors": list(self.colors),
                "links": [list(l) for l in self.links]}

    @classmethod
    def from_json(cls, data: dict) -> "GraphObject":
        return cls(data["points"], data["radii"], data["colors"], data["links"])


class RegularPolygonObject(MoveableObject):
    """Regular polygon dragged by the circle inscribed in it; never resized."""

    kind = "regular_polygon"

    def __init__(self, center, radius: int, sides: int,
                 angle: float = math.pi / 2) -> None:
        super().__init__()
        if sides < 3:
            raise InvariantError("polygon needs at least 3 sides")
        if radius < 1:
            raise InvariantError("inscribed radius must be positive")
        self.center = Point(*center)
        self.radius = int(radius)
        self.sides = int(sides)
        self.angle = float(angle)
        self.define_contour()

    def vertices(self) -> list[Point]:
        circum = self.radius / math.cos(math.pi / self.sides)
        step = 2 * math.pi / self.sides
        return [point_at(self.center, self.angle + i * step, circum)
                for i in range(self.sides)]

    def define_contour(self) -> None:
        node = Node(0, self.center, area=CircleArea(self.radius))
        self._contour = Contour((node,), None)

    def move(self, dx: int, dy: int) -> None:
        self.center = self.center.moved(dx, dy)

    def move_contour_point(self, index: int, dx: int, dy: int,
                           mouse: Point, button: MouseButton) -> bool:
        # The single node stands for the whole object, whatever its index.
        if button is not MouseButton.LEFT or (dx == 0 and dy == 0):
            return False
        self.move(dx, dy)
        return True

    def render(self) -> list:
        return [render.Polygon(tuple(self.vertices()), stroke="#2d6a4f",
                               fill="#e7f4e4")]

    def to_json(self) -> dict:
        return {"type": self.kind, "center": list(self.center),
                "radius": self.radius, "sides": self.sides, "angle": self.angle}

    @classmethod
    def from_json(cls, data: dict) -> "RegularPolygonObject":
        return cls(data["center"], data["radius"], data["sides"], data["angle"])


class RectSolidMove(MoveableObject):
    """Rectangle moveable by any interior point; no resizing at all.

    Two fat square nodes sit inset from the short ends and the connection
    between them is widened to the same half size, so together they cover
    the full interior.
    """

    kind = "rect_solid_move"

    def __init__(self, rect: Rect) -> None:
        super().__init__()
        rect = Rect(*(int(v) for v in rect))
        if rect.w < 2 or rect.h < 2:
            raise InvariantError("rectangle too small for a solid-move contour")
        self.rect = rect
        self.define_contour()

    def define_contour(self) -> None:
        rc = self.rect
        half = min(rc.w, rc.h) // 2
        p0 = Point(rc.x + half, rc.y + half)
        if rc.w >= rc.h:
            p1 = Point(rc.right - 1 - half, p0.y)
        else:
            p1 = Point(p0.x, rc.bottom - 1 - half)
        nodes = tuple(Node(i, p, area=SquareArea(half),
                           cursor=CursorHint.SIZE_ALL, clearance=False)
                      for i, p in enumerate((p0, p1)))
        self._contour = Contour.closed_loop(nodes, connection_sensitivity=half)

    def move(self, dx: int, dy: int) -> None:
        self.rect = self.rect.moved(dx, dy)

    def move_contour_point(self, index: int, dx: int, dy: int,
                           mouse: Point, button: MouseButton) -> bool:
        if button is not MouseButton.LEFT or (dx == 0 and dy == 0):
            return False
        self.move(dx, dy)
        return True

    def render(self) -> list:
        rc = self.rect
        return [render.Box(rc.x, rc.y, rc.w, rc.h, stroke="#7f5539", fill="#ede0d4")]

    def to_json(self) -> dict:
        return {"type": self.kind, "rect": list(self.rect)}

    @classmethod
    def from_json(cls, data: dict) -> "RectSolidMove":
        return cls(Rect(*data["rect"]))


class RectTiled(MoveableObject):
    """Rectangle covered edge to edge by stand-alone square nodes.

    Equal tiles of side min(w, h) pack from one end; the last tile is
    aligned to the far edge, so only the last two may overlap.
    """

    kind = "rect_tiled"

    def __init__(self, rect: Rect) -> None:
        super().__init__()
        rect = Rect(*(int(v) for v in rect))
        if rect.w < 2 or rect.h < 2:
            raise InvariantError("rectangle too small to tile")
        self.rect = rect
        self.define_contour()

    def tile_centers(self) -> tuple[list[Point], int]:
        rc = self.rect
        side = min(rc.w, rc.h)
        half = side // 2
        centers: list[Point] = []
        if rc.w >= rc.h:
            count = max(1, math.ceil(rc.w / side))
            for i in range(count - 1):
                centers.append(Point(rc.x + half + i * side, rc.y + half))
            centers.append(Point(rc.right - 1 - half, rc.y + half))
        else:
            count = max(1, math.ceil(rc.h / side))
            for i in range(count - 1):
                centers.append(Point(rc.x + half, rc.y + half + i * side))
            centers.append(Point(rc.x + half, rc.bottom - 1 - half))
        return centers, half

    def define_contour(self) -> None:
        centers, half = self.tile_centers()
        nodes = tuple(Node(i, c, area=SquareArea(half), clearance=False)
                      for i, c in enumerate(centers))
        self._contour = Contour(nodes, None)

    def move(self, dx: int, dy: int) -> None:
        self.rect = self.rect.moved(dx, dy)

    def move_contour_point(self, index: int, dx: int, dy: int,
                           mouse: Point, button: MouseButton) -> bool:
        if button is not MouseButton.LEFT or (dx == 0 and dy == 0):
            return False
        self.move(dx, dy)
        return True

    def render(self) -> list:
        rc = self.rect
        return [render.Box(rc.x, rc.y, rc.w, rc.h, stroke="#3a5a40", fill="#dde5b6")]

    def to_json(self) -> dict:
        return {"type": self.kind, "rect": list(self.rect)}

    @classmethod
    def from_json(cls, data: dict) -> "RectTiled":
        return cls(Rect(*data["rect"]))


class ScrewNut(MoveableObject):
    """Hexagonal nut: six trapezoids tile the area between the two borders."""

    kind = "screw_nut"

    def __init__(self, center, inner_radius: int, outer_radius: int,
                 angle: float = 0.0) -> None:
        super().__init__()
        if not 0 < inner_radius < outer_radius:
            raise InvariantError("need 0 < inner radius < outer radius")
        self.center = Point(*center)
        self.inner_radius = int(inner_radius)
        self.outer_radius = int(outer_radius)
        self.angle = float(angle)
        self.define_contour()

    def border_points(self, radius: int) -> list[Point]:
        return [point_at(self.center, self.angle + 2 * math.pi * i / 6, radius)
                for i in range(6)]

    def define_contour(self) -> None:
        inner = self.border_points(self.inner_radius)
        outer = self.border_points(self.outer_radius)
        nodes = []
        for i in range(6):
            i1 = (i + 1) % 6
            nodes.append(Node.polygon(
                i, (inner[i], inner[i1], outer[i1], outer[i]), clearance=False))
        self._contour = Contour(tuple(nodes), None)

    def move(self, dx: int, dy: int) -> None:
        self.center = self.center.moved(dx, dy)

    def move_contour_point(self, index: int, dx: int, dy: int,
                           mouse: Point, button: MouseButton) -> bool:
        if button is not MouseButton.LEFT or (dx == 0 and dy == 0):
            return False
        self.move(dx, dy)
        return True

    def render(self) -> list:
        outer = tuple(self.border_points(self.outer_radius))
        inner = tuple(self.border_points(self.inner_radius))
        return [render.Polygon(outer, stroke="#495057", fill="#d9d9d9"),
                render.Polygon(inner, stroke="#495057", fill=render.BACKGROUND)]

    def to_json(self) -> dict:
        return {"type": self.kind, "center": list(self.center),
                "r_inner": self.inner_radius, "r_outer": self.outer_radius,
                "angle": self.angle}

    @classmethod
    def from_json(cls, data: dict) -> "ScrewNut":
        return cls(data["center"], data["r_inner"], data["r_outer"], data["angle"])


class RectFull(MoveableObject):
    """Rectangle resizable by any border point, moveable by any inner one.

    Node order encodes priority: corner circles first, then four border
    strips, then one interior polygon covering everything.
    """

    kind = "rect_full"

    def __init__(self, rect: Rect, min_w: int = 20, min_h: int = 20) -> None:
        super().__init__()
        self.rect = _check_rect(rect, min_w, min_h)
        self.min_w = int(min_w)
        self.min_h = int(min_h)
        self.define_contour()

    def define_contour(self) -> None:
        rc = self.rect
        l, t, r, b = rc.x, rc.y, rc.right, rc.bottom
        radius = 2 * BORDER_HALF
        corner_cursors = (CursorHint.SIZE_NWSE, CursorHint.SIZE_NESW,
                          CursorHint.SIZE_NWSE, CursorHint.SIZE_NESW)
        corner_pts = (Point(l, t), Point(r, t), Point(r, b), Point(l, b))
        nodes = [Node(i, p, area=CircleArea(radius), cursor=c)
                 for i, (p, c) in enumerate(zip(corner_pts, corner_cursors))]
        h = BORDER_HALF
        mx, my = (l + r) // 2, (t + b) // 2
        nodes.append(Node.polygon(4, ((l - h, t), (l + h, t), (l + h, b), (l - h, b)),
                                  anchor=Point(l, my), freedom=MovementFreedom.WE,
                                  cursor=CursorHint.SIZE_WE))
        nodes.append(Node.polygon(5, ((l, t - h), (r, t - h), (r, t + h), (l, t + h)),
                                  anchor=Point(mx, t), freedom=MovementFreedom.NS,
                                  cursor=CursorHint.SIZE_NS))
        nodes.append(Node.polygon(6, ((r - h, t), (r + h, t), (r + h, b), (r - h, b)),
                                  anchor=Point(r, my), freedom=MovementFreedom.WE,
                                  cursor=CursorHint.SIZE_WE))
        nodes.append(Node.polygon(7, ((l, b - h), (r, b - h), (r, b + h), (l, b + h)),
                                  anchor=Point(mx, b), freedom=MovementFreedom.NS,
                                  cursor=CursorHint.SIZE_NS))
        nodes.append(Node.polygon(8, ((l, t), (r, t), (r, b), (l, b)),
                                  anchor=Point(mx, my), clearance=False))
        self._contour = Contour(tuple(nodes), None)

    def move(self, dx: int, dy: int) -> None:
        self.rect = self.rect.moved(dx, dy)

    def move_contour_point(self, index: int, dx: int, dy: int,
                           mouse: Point, button: MouseButton) -> bool:
        if button is not MouseButton.LEFT:
            return False
        if index == 8:
            if dx == 0 and dy == 0:
                return False
            self.move(dx, dy)
            return True
        x, y, w, h = self.rect
        changed = False
        if index in (0, 1, 5):
            if dy != 0 and h - dy >= self.min_h:
                y += dy
                h -= dy
                changed = True
        elif index in (2, 3, 7):
            if dy != 0 and h + dy >= self.min_h:
                h += dy
                changed = True
        if index in (1, 2, 6):
            if dx != 0 and w + dx >= self.min_w:
                w += dx
                changed = True
        elif index in (0, 3, 4):
            if dx != 0 and w - dx >= self.min_w:
                x += dx
                w -= dx
                changed = True
        if changed:
            self.rect = Rect(x, y, w, h)
        return changed

    def render(self) -> list:
        rc = self.rect
        return [render.Box(rc.x, rc.y, rc.w, rc.h, stroke="#1d3557", fill="#dbe7f0")]

    def to_json(self) -> dict:
        return {"type": self.kind, "rect": list(self.rect),
                "min_w": self.min_w, "min_h": self.min_h}

    @classmethod
    def from_json(cls, data: dict) -> "RectFull":
        return cls(Rect(*data["rect"]), data["min_w"], data["min_h"])


class NCircle(MoveableObject):
    """Circle with its border tiled by small interchangeable resize nodes.

    One big node in the middle moves the whole object; any small node sets
    the radius straight from the mouse distance to the center.  The node
    count follows the radius, so the border never shows gaps: the contour
    is rebuilt after every accepted step.
    """

    kind = "n_circle"

    def __init__(self, center, radius: int, node_radius: int = 8,
                 node_distance: int = 10, min_radius: int = 20) -> None:
        super().__init__()
        radius, node_radius = int(radius), int(node_radius)
        node_distance, min_radius = int(node_distance), int(min_radius)
        if node_radius < 1 or node_distance < 1:
            raise InvariantError("node radius and spacing must be positive")
        if min_radius < node_radius:
            raise InvariantError("minimum radius must be at least the node radius")
        if radius < min_radius:
            raise InvariantError("radius starts below the minimum")
        if round(2 * math.pi * min_radius / node_distance) < 3:
            raise InvariantError("node spacing too coarse for the minimum radius")
        self.center = Point(*center)
        self.radius = radius
        self.node_radius = node_radius
        self.node_distance = node_distance
        self.min_radius = min_radius
        self.define_contour()

    def border_count(self) -> int:
        return round(2 * math.pi * self.radius / self.node_distance)

    def define_contour(self) -> None:
        n = self.border_count()
        nodes = [Node(0, self.center,
                      area=CircleArea(self.radius - self.node_radius + 1),
                      cursor=CursorHint.SIZE_ALL)]
        for i in range(1, n + 1):
            p = point_at(self.center, 2 * math.pi * (i - 1) / n, self.radius)
            nodes.append(Node(i, p, area=CircleArea(self.node_radius),
                              clearance=False))
        self._contour = Contour(tuple(nodes), None)

    def move(self, dx: int, dy: int) -> None:
        self.center = self.center.moved(dx, dy)

    def move_contour_point(self, index: int, dx: int, dy: int,
                           mouse: Point, button: MouseButton) -> bool:
        if button is not MouseButton.LEFT:
            return False
        if index == 0:
            if dx == 0 and dy == 0:
                return False
            self.move(dx, dy)
            return True
        new_radius = round(distance(self.center, mouse))
        if new_radius != self.radius and new_radius >= self.min_radius:
            self.radius = new_radius
            return True
        return False

    def render(self) -> list:
        return [render.Circle(self.center.x, self.center.y, self.radius,
                              stroke="#9d0208", fill="#fde2e4")]

    def to_json(self) -> dict:
        return {"type": self.kind, "center": list(self.center),
                "radius": self.radius, "node_radius": self.node_radius,
                "node_distance": self.node_distance, "min_radius": self.min_radius}

    @classmethod
    def from_json(cls, data: dict) -> "NCircle":
        return cls(data["center"], data["radius"], data["node_radius"],
                   data["node_distance"], data["min_radius"])


class NRing(MoveableObject):
    """Ring with both borders tiled by small resize nodes.

    Trapezoid nodes fill the area between the borders and move the whole
    ring.  Node counts are frozen while a gesture is in flight (their
    slots must stay addressable), so enlarging a border stretches the
    existing nodes apart; redefine_contour() retiles once the gesture
    ends.
    """

    kind = "n_ring"

    def __init__(self, center, inner_radius: int, outer_radius: int,
                 node_distance: int = 10, node_radius: int = 8) -> None:
        super().__init__()
        inner_radius, outer_radius = int(inner_radius), int(outer_radius)
        node_distance, node_radius = int(node_distance), int(node_radius)
        if not 0 < inner_radius < outer_radius:
            raise InvariantError("need 0 < inner radius < outer radius")
        if node_radius < 1 or node_distance < 1:
            raise InvariantError("node radius and spacing must be positive")
        if round(2 * math.pi * inner_radius / node_distance) < 3:
            raise InvariantError("node spacing too coarse for the inner border")
        self.center = Point(*center)
        self.inner_radius = inner_radius
        self.outer_radius = outer_radius
        self.node_distance = node_distance
        self.node_radius = node_radius
        self.nodes_on_outer = 0
        self.nodes_on_inner = 0
        self.polygon_nodes = 0
        self._recount()
        self.define_contour()

    def _recount(self) -> None:
        self.nodes_on_outer = round(2 * math.pi * self.outer_radius / self.node_distance)
        self.nodes_on_inner = round(2 * math.pi * self.inner_radius / self.node_distance)
        self.polygon_nodes = self.nodes_on_outer // 2 + 1

    def redefine_contour(self) -> None:
        """Retile both borders for the current radii, then rebuild."""
        self._recount()
        self.define_contour()

    def define_contour(self) -> None:
        n_out, n_in = self.nodes_on_outer, self.nodes_on_inner
        outer_pts = [point_at(self.center, 2 * math.pi * i / n_out, self.outer_radius)
                     for i in range(n_out)]
        nodes = [Node(i, p, area=CircleArea(self.node_radius), clearance=False)
                 for i, p in enumerate(outer_pts)]
        for i in range(n_in):
            p = point_at(self.center, 2 * math.pi * i / n_in, self.inner_radius)
            nodes.append(Node(n_out + i, p, area=CircleArea(self.node_radius),
                              clearance=False))
        ratio = self.inner_radius / self.outer_radius
        base = n_out + n_in
        for i in range(self.polygon_nodes):
            j = (2 * i) % n_out
            p0_out = outer_pts[j]
            p1_out = outer_pts[(j + 2) % n_out]
            p0_in = point_on_line(self.center, p0_out, ratio)
            p1_in = point_on_line(self.center, p1_out, ratio)
            nodes.append(Node.polygon(base + i, (p0_in, p0_out, p1_out, p1_in),
                                      clearance=False))
        self._contour = Contour(tuple(nodes), None)

    def move(self, dx: int, dy: int) -> None:
        self.center = self.center.moved(dx, dy)

    def move_contour_point(self, index: int, dx: int, dy: int,
                           mouse: Point, button: MouseButton) -> bool:
        if button is not MouseButton.LEFT:
            return False
        border_nodes = self.nodes_on_outer + self.nodes_on_inner
        if index < self.nodes_on_outer:
            new_radius = max(round(distance(self.center, mouse)),
                             self.inner_radius + RING_GAP)
            if new_radius == self.outer_radius:
                return False
            self.outer_radius = new_radius
            return True
        if index < border_nodes:
            new_radius = min(round(distance(self.center, mouse)),
                             self.outer_radius - RING_GAP)
            new_radius = max(new_radius, 1)
            if new_radius == self.inner_radius:
                return False
            self.inner_radius = new_radius
            return True
        if dx == 0 and dy == 0:
            return False
        self.move(dx, dy)
        return True

    def render(self) -> list:
        c = self.center
        return [render.Circle(c.x, c.y, self.outer_radius, stroke="#287271",
                              fill="#e2ece9"),
                render.Circle(c.x, c.y, self.inner_radius, stroke="#287271",
                              fill=render.BACKGROUND)]

    def to_json(self) -> dict:
        return {"type": self.kind, "center": list(self.center),
                "r_inner": self.inner_radius, "r_outer": self.outer_radius,
                "node_distance": self.node_distance, "node_radius": self.node_radius}

    @classmethod
    def from_json(cls, data: dict) -> "NRing":
        return cls(data["center"], data["r_inner"], data["r_outer"],
                   data["node_distance"], data["node_radius"])


class ControlStub(MoveableObject):
    """Stand-in for a hosted widget, grabbable only along its border.

    Corner squares and mid-side handles resize within hard min/max size
    clamps; the border in between moves the control.  The interior stays
    non-sensitive so the widget keeps its own mouse handling.
    """

    kind = "control_stub"

    def __init__(self, id: str, rect: Rect, resize: ContourResize = ContourResize.ANY,
                 min_w: int = 40, max_w: int = 2000,
                 min_h: int = 24, max_h: int = 2000) -> None:
        super().__init__()
        rect = Rect(*(int(v) for v in rect))
        min_w, max_w = int(min_w), int(max_w)
        min_h, max_h = int(min_h), int(max_h)
        if min_w < 24 or min_h < 24:
            raise InvariantError("control minimum sizes must be at least 24")
        if not (min_w <= rect.w <= max_w and min_h <= rect.h <= max_h):
            raise InvariantError("control starts outside its size clamps")
        self.id = str(id)
        self.rect = rect
        self.resize = resize
        self.min_w, self.max_w = min_w, max_w
        self.min_h, self.max_h = min_h, max_h
        self.define_contour()

    def _slots(self) -> list[tuple[MovementFreedom, CursorHint]]:
        mode = self.resize
        if mode is ContourResize.ANY:
            return list(zip(RectEightNode._ANY_FREEDOM, RectEightNode._ANY_CURSOR))
        if mode is ContourResize.NS:
            slots = [(MovementFreedom.NS, CursorHint.SIZE_NS)] * 8
            slots[3] = slots[7] = (MovementFreedom.NONE, CursorHint.SIZE_ALL)
            return slots
        if mode is ContourResize.WE:
            slots = [(MovementFreedom.WE, CursorHint.SIZE_WE)] * 8
            slots[1] = slots[5] = (MovementFreedom.NONE, CursorHint.SIZE_ALL)
            return slots
        return [(MovementFreedom.NONE, CursorHint.SIZE_ALL)] * 8

    def define_contour(self) -> None:
        rc = self.rect
        l, t, r, b = rc.x, rc.y, rc.right, rc.bottom
        mx, my = l + rc.w // 2, t + rc.h // 2
        slots = self._slots()
        ch = CONTROL_CORNER_HALF
        sh = CONTROL_STRIP_HALF
        # Mid handles cover half the span between corner squares; the
        # remaining border stays a plain move strip via the connections.
        hx = max(2, (rc.w - 2 * ch) // 4)
        hy = max(2, (rc.h - 2 * ch) // 4)
        nodes = [
            Node(0, Point(l, t), area=SquareArea(ch),
                 freedom=slots[0][0], cursor=slots[0][1]),
            Node.polygon(1, ((mx - hx, t - sh), (mx + hx, t - sh),
                             (mx + hx, t + sh), (mx - hx, t + sh)),
                         anchor=Point(mx, t), freedom=slots[1][0], cursor=slots[1][1]),
            Node(2, Point(r, t), area=SquareArea(ch),
                 freedom=slots[2][0], cursor=slots[2][1]),
            Node.polygon(3, ((r - sh, my - hy), (r + sh, my - hy),
                             (r + sh, my + hy), (r - sh, my + hy)),
                         anchor=Point(r, my), freedom=slots[3][0], cursor=slots[3][1]),
            Node(4, Point(r, b), area=SquareArea(ch),
                 freedom=slots[4][0], cursor=slots[4][1]),
            Node.polygon(5, ((mx - hx, b - sh), (mx + hx, b - sh),
                             (mx + hx, b + sh), (mx - hx, b + sh)),
                         anchor=Point(mx, b), freedom=slots[5][0], cursor=slots[5][1]),
            Node(6, Point(l, b), area=SquareArea(ch),
                 freedom=slots[6][0], cursor=slots[6][1]),
            Node.polygon(7, ((l - sh, my - hy), (l + sh, my - hy),
                             (l + sh, my + hy), (l - sh, my + hy)),
                         anchor=Point(l, my), freedom=slots[7][0], cursor=slots[7][1]),
        ]
        connections = (Connection(0, 2), Connection(2, 4),
                       Connection(4, 6), Connection(6, 0))
        self._contour = Contour(tuple(nodes), connections)

    def move(self, dx: int, dy: int) -> None:
        self.rect = self.rect.moved(dx, dy)

    def _clamp_w(self, w: int) -> int:
        return min(max(w, self.min_w), self.max_w)

    def _clamp_h(self, h: int) -> int:
        return min(max(h, self.min_h), self.max_h)

    def move_contour_point(self, index: int, dx: int, dy: int,
                           mouse: Point, button: MouseButton) -> bool:
        if button is not MouseButton.LEFT:
            return False
        freedom = self.contour.node_freedom(index)
        v_ok = freedom in (MovementFreedom.ANY, MovementFreedom.NS)
        h_ok = freedom in (MovementFreedom.ANY, MovementFreedom.WE)
        x, y, w, h = self.rect
        changed = False
        if v_ok and dy != 0:
            if index in (0, 1, 2):
                nh = self._clamp_h(h - dy)
                if nh != h:
                    y += h - nh
                    h = nh
                    changed = True
            elif index in (4, 5, 6):
                nh = self._clamp_h(h + dy)
                if nh != h:
                    h = nh
                    changed = True
        if h_ok and dx != 0:
            if index in (2, 3, 4):
                nw = self._clamp_w(w + dx)
                if nw != w:
                    w = nw
                    changed = True
            elif index in (0, 6, 7):
                nw = self._clamp_w(w - dx)
                if nw != w:
                    x += w - nw
                    w = nw
                    changed = True
        if changed:
            self.rect = Rect(x, y, w, h)
        return changed

    def render(self) -> list:
        rc = self.rect
        return [render.Box(rc.x, rc.y, rc.w, rc.h, stroke="#495057", fill="#f1f3f5"),
                render.Text(rc.x + 8, rc.y + 18, self.id, fill="#212529")]

    def to_json(self) -> dict:
        return {"type": self.kind, "id": self.id, "rect": list(self.rect),
                "resize": self.resize.value,
                "min_w": self.min_w, "max_w": self.max_w,
                "min_h": self.min_h, "max_h": self.max_h}

    @classmethod
    def from_json(cls, data: dict) -> "ControlStub":
        return cls(data["id"], Rect(*data["rect"]), ContourResize(data["resize"]),
                   data["min_w"], data["max_w"], data["min_h"], data["max_h"])


SHAPE_TYPES: dict[str, type] = {
    cls.kind: cls
    for cls in (RectCorners, RectEightNode, GraphObject, RegularPolygonObject,
                RectSolidMove, RectTiled, ScrewNut, RectFull, NCircle, NRing,
                ControlStub)
}
