"""Contours: the sensitive geometry an object exposes for manipulation.

A contour is everything the supervising engine knows about an object:
node areas that grab individual points (usually resizing) and strip areas
around connections (usually moving the whole object).  Objects rebuild
their contour whenever their geometry changes; nothing else mutates one.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Sequence, Union

from . import render
from .geometry import Delta, Point, Rect, dist_to_segment, point_in_polygon

DEFAULT_SQUARE_HALF = 3
DEFAULT_CIRCLE_RADIUS = 5
DEFAULT_CONNECTION_SENSE = 3


class MovementFreedom(Enum):
    """How a node may move on its own (the engine constrains deltas to match)."""

    NONE = "none"
    NS = "ns"
    WE = "we"
    ANY = "any"


class CursorHint(Enum):
    """Pointer shape suggested while hovering a sensitive area."""

    HAND = "hand"
    SIZE_ALL = "size_all"
    SIZE_NS = "size_ns"
    SIZE_WE = "size_we"
    SIZE_NWSE = "size_nwse"
    SIZE_NESW = "size_nesw"
    DEFAULT = "default"


@dataclass(frozen=True)
class NullArea:
    """No sensitive surface at all; the node only anchors connections."""


@dataclass(frozen=True)
class SquareArea:
    half_side: int = DEFAULT_SQUARE_HALF

    def __post_init__(self) -> None:
        if self.half_side < 1:
            raise ValueError("square area half side must be at least 1")


@dataclass(frozen=True)
class CircleArea:
    radius: int = DEFAULT_CIRCLE_RADIUS

    def __post_init__(self) -> None:
        if self.radius < 1:
            raise ValueError("circle area radius must be at least 1")


@dataclass(frozen=True)
class PolygonArea:
    vertices: tuple

    def __post_init__(self) -> None:
        vs = tuple(Point(int(x), int(y)) for x, y in self.vertices)
        if len(vs) < 3:
            raise ValueError("polygon area needs at least 3 vertices")
        object.__setattr__(self, "vertices", vs)


NodeArea = Union[NullArea, SquareArea, CircleArea, PolygonArea]
NULL_AREA = NullArea()


@dataclass(frozen=True)
class Node:
    """One sensitive area with its identity, anchor and movement rules.

    The square and circle forms are centered at anchor + shift; a polygon
    form is defined by its vertices alone.  Nodes with clearance set are
    drawn background-filled so they stay readable over the object.
    """

    id: int
    anchor: Point
    shift: Delta = Delta(0, 0)
    area: NodeArea = SquareArea()
    freedom: MovementFreedom = MovementFreedom.ANY
    cursor: CursorHint | None = None
    clearance: bool = True

    def __post_init__(self) -> None:
        if self.id < 0:
            raise ValueError("node id must be nonnegative")
        if self.cursor is None:
            default = (CursorHint.SIZE_ALL if isinstance(self.area, PolygonArea)
                       else CursorHint.HAND)
            object.__setattr__(self, "cursor", default)

    @classmethod
    def polygon(cls, id: int, vertices: Sequence, anchor: Point | None = None, *,
                freedom: MovementFreedom = MovementFreedom.ANY,
                cursor: CursorHint | None = None,
                clearance: bool = True) -> "Node":
        """Build a polygon-area node; the anchor defaults to the first vertex."""
        area = PolygonArea(tuple(vertices))
        if anchor is None:
            anchor = area.vertices[0]
        return cls(id, anchor, area=area, freedom=freedom, cursor=cursor,
                   clearance=clearance)

    @property
    def center(self) -> Point:
        """Center of the sensitive area: anchor plus shift."""
        return Point(self.anchor.x + self.shift.dx, self.anchor.y + self.shift.dy)

    def contains(self, p: Point) -> bool:
        """Is p inside the sensitive area (boundary included)?"""
        area = self.area
        if isinstance(area, NullArea):
            return False
        if isinstance(area, SquareArea):
            c = self.center
            return max(abs(p.x - c.x), abs(p.y - c.y)) <= area.half_side
        if isinstance(area, CircleArea):
            c = self.center
            dx = p.x - c.x
            dy = p.y - c.y
            return dx * dx + dy * dy <= area.radius * area.radius
        return point_in_polygon(p, area.vertices)


@dataclass(frozen=True)
class Connection:
    """Grab strip between two nodes, addressed by their indices.

    sensitivity is the half thickness of the strip; None defers to the
    contour-wide default.
    """

    a: int
    b: int
    sensitivity: int | None = None

    def __post_init__(self) -> None:
        if self.a == self.b:
            raise ValueError("connection endpoints must be two distinct nodes")
        if self.sensitivity is not None and self.sensitivity < 1:
            raise ValueError("connection sensitivity must be at least 1")


@dataclass(frozen=True)
class NodeHit:
    index: int
    cursor: CursorHint


@dataclass(frozen=True)
class ConnectionHit:
    index: int
    cursor: CursorHint = CursorHint.SIZE_ALL


Hit = Union[NodeHit, ConnectionHit]


@dataclass
class Contour:
    """Ordered nodes plus connections; node order sets the hit priority.

    The plain constructor leaves the node set unconnected (pass explicit
    connections to link them); closed_loop() is the shorthand that chains
    every node to the next and back around to the first.
    """

    nodes: tuple
    connections: tuple = ()
    connection_sensitivity: int = DEFAULT_CONNECTION_SENSE

    def __post_init__(self) -> None:
        self.nodes = tuple(self.nodes)
        self.connections = tuple(self.connections) if self.connections else ()
        if not self.nodes:
            raise ValueError("a contour needs at least one node")
        for i, node in enumerate(self.nodes):
            if node.id != i:
                raise ValueError(f"node id {node.id} must equal its index {i}")
        n = len(self.nodes)
        for c in self.connections:
            if not (0 <= c.a < n and 0 <= c.b < n):
                raise ValueError(f"connection ({c.a}, {c.b}) references a missing node")
        if self.connection_sensitivity < 1:
            raise ValueError("connection sensitivity must be at least 1")

    @classmethod
    def closed_loop(cls, nodes: Sequence[Node],
                    connection_sensitivity: int = DEFAULT_CONNECTION_SENSE) -> "Contour":
        """Chain the nodes into a loop: 0-1, 1-2, ..., (n-1)-0.

        A single node yields no connections.
        """
        nodes = tuple(nodes)
        n = len(nodes)
        conns = tuple(Connection(i, (i + 1) % n) for i in range(n)) if n >= 2 else ()
        return cls(nodes, conns, connection_sensitivity)

    def node_freedom(self, index: int) -> MovementFreedom:
        if not 0 <= index < len(self.nodes):
            raise IndexError(f"node index {index} out of range")
        return self.nodes[index].freedom

    def effective_sensitivity(self, conn: Connection) -> int:
        return (conn.sensitivity if conn.sensitivity is not None
                else self.connection_sensitivity)

    def connection_contains(self, index: int, p: Point) -> bool:
        conn = self.connections[index]
        a = self.nodes[conn.a].center
        b = self.nodes[conn.b].center
        return dist_to_segment(p, a, b) <= self.effective_sensitivity(conn)

    def hit_test(self, p: Point) -> Hit | None:
        """First sensitive area under p: nodes in order, then connections.

        Nodes that cannot move at all are transparent to the pointer, the
        same way they are invisible in the rendered contour.
        """
        for i, node in enumerate(self.nodes):
            if node.freedom is MovementFreedom.NONE:
                continue
            if node.contains(p):
                return NodeHit(i, node.cursor)
        for j in range(len(self.connections)):
            if self.connection_contains(j, p):
                return ConnectionHit(j)
        return None

    def render_primitives(self) -> list:
        """Connection lines first, then one glyph per visible node."""
        prims: list = []
        for conn in self.connections:
            a = self.nodes[conn.a].center
            b = self.nodes[conn.b].center
            prims.append(render.Line(a.x, a.y, b.x, b.y, stroke=render.CONTOUR_STROKE))
        for node in self.nodes:
            if node.freedom is MovementFreedom.NONE or isinstance(node.area, NullArea):
                continue
            fill = render.BACKGROUND if node.clearance else None
            area = node.area
            if isinstance(area, SquareArea):
                c = node.center
                h = area.half_side
                prims.append(render.Box(c.x - h, c.y - h, 2 * h, 2 * h,
                                        stroke=render.CONTOUR_STROKE, fill=fill))
            elif isinstance(area, CircleArea):
                c = node.center
                prims.append(render.Circle(c.x, c.y, area.radius,
                                           stroke=render.CONTOUR_STROKE, fill=fill))
            else:
                prims.append(render.Polygon(area.vertices,
                                            stroke=render.CONTOUR_STROKE, fill=fill))
        return prims

    def bbox(self) -> Rect:
        """Bounding box of every sensitive area, connection strips included."""
        lo_x = lo_y = None
        hi_x = hi_y = None

        def grow(x0: int, y0: int, x1: int, y1: int) -> None:
            nonlocal lo_x, lo_y, hi_x, hi_y
            lo_x = x0 if lo_x is None else min(lo_x, x0)
            lo_y = y0 if lo_y is None else min(lo_y, y0)
            hi_x = x1 if hi_x is None else max(hi_x, x1)
            hi_y = y1 if hi_y is None else max(hi_y, y1)

        for node in self.nodes:
            c = node.center
            grow(c.x, c.y, c.x, c.y)
            area = node.area
            if isinstance(area, SquareArea):
                grow(c.x - area.half_side, c.y - area.half_side,
                     c.x + area.half_side, c.y + area.half_side)
            elif isinstance(area, CircleArea):
                grow(c.x - area.radius, c.y - area.radius,
                     c.x + area.radius, c.y + area.radius)
            elif isinstance(area, PolygonArea):
                for v in area.vertices:
                    grow(v.x, v.y, v.x, v.y)
        for conn in self.connections:
            s = self.effective_sensitivity(conn)
            for end in (self.nodes[conn.a].center, self.nodes[conn.b].center):
                grow(end.x - s, end.y - s, end.x + s, end.y + s)
        return Rect(lo_x, lo_y, hi_x - lo_x, hi_y - lo_y)
