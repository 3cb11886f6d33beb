"""gripkit: moveable and resizable 2D screen objects.

Objects expose contours (sensitive nodes plus connection strips); a Mover
supervises catch/move/release gestures against those contours and never
touches the objects' own geometry except through their three hooks.
Scenes, traces and SVG snapshots make every session replayable.
"""

from .contour import (CircleArea, Connection, ConnectionHit, Contour,
                      CursorHint, MovementFreedom, Node, NodeHit, NullArea,
                      PolygonArea, SquareArea)
from .errors import InvariantError, SceneFormatError, TraceFormatError
from .geometry import (Delta, Point, Rect, dist_to_segment, distance,
                       point_at, point_in_polygon, point_on_line)
from .moveable import MouseButton, MoveableObject
from .mover import (ConnectionGrab, ContainmentPolicy, FullyInside, Mover,
                    NodeGrab, PartlyVisible, Unrestricted, WorkArea,
                    apply_containment, format_policy, parse_policy)
from .replay import (GestureSummary, ReplayReport, TraceEvent, format_trace,
                     parse_trace, replay)
from .scene import Scene, load_scene, save_scene, scene_digest
from .shapes import (SHAPE_TYPES, ContourResize, ControlStub, CornerStyle,
                     GraphObject, NCircle, NRing, RectCorners, RectEightNode,
                     RectFull, RectSolidMove, RectTiled, RegularPolygonObject,
                     ScrewNut)
from .svg import emit_svg

__version__ = "0.1.0"

__all__ = [
    "CircleArea", "Connection", "ConnectionGrab", "ConnectionHit",
    "ContainmentPolicy", "Contour", "ContourResize", "ControlStub",
    "CornerStyle", "CursorHint", "Delta", "FullyInside", "GestureSummary",
    "GraphObject", "InvariantError", "MouseButton", "MoveableObject",
    "MovementFreedom", "Mover", "NCircle", "NRing", "Node", "NodeGrab",
    "NodeHit", "NullArea", "PartlyVisible", "Point", "PolygonArea", "Rect",
    "RectCorners", "RectEightNode", "RectFull", "RectSolidMove", "RectTiled",
    "RegularPolygonObject", "ReplayReport", "SHAPE_TYPES", "Scene",
    "SceneFormatError", "ScrewNut", "SquareArea", "TraceEvent",
    "TraceFormatError", "Unrestricted", "WorkArea", "apply_containment",
    "dist_to_segment", "distance", "emit_svg", "format_policy",
    "format_trace", "load_scene", "parse_policy", "parse_trace", "point_at",
    "point_in_polygon", "point_on_line", "replay", "save_scene",
    "scene_digest",
]
