"""The supervising engine: one state machine for catch / move / release.

The mover never touches real objects directly; it looks at their contours,
decides what was grabbed, constrains the mouse delta, and dispatches to
the object's own hooks.  Registry order is hit priority: index 0 wins
ties, and drawing goes back to front.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Optional, Union

from .contour import ConnectionHit, CursorHint, MovementFreedom, NodeHit
from .errors import InvariantError
from .geometry import Delta, Point, Rect
from .moveable import MouseButton, MoveableObject
from .shapes import ControlStub, NRing

DEFAULT_VISIBLE_MARGIN = 16


class WorkArea(NamedTuple):
    """The surface objects live on, anchored at (0, 0)."""

    width: int
    height: int


@dataclass(frozen=True)
class Unrestricted:
    """Objects may go anywhere, including fully off-surface."""


@dataclass(frozen=True)
class PartlyVisible:
    """At least margin pixels of the object must stay visible per axis."""

    margin: int = DEFAULT_VISIBLE_MARGIN


@dataclass(frozen=True)
class FullyInside:
    """The whole contour bounding box must stay on the surface."""


ContainmentPolicy = Union[Unrestricted, PartlyVisible, FullyInside]


def parse_policy(text: str) -> ContainmentPolicy:
    """Parse the compact policy notation: unrestricted | partly:N | inside."""
    if text == "unrestricted":
        return Unrestricted()
    if text == "inside":
        return FullyInside()
    if text.startswith("partly:"):
        margin = text.split(":", 1)[1]
        if not margin.isdigit():
            raise InvariantError(f"bad visibility margin in policy {text!r}")
        return PartlyVisible(int(margin))
    raise InvariantError(f"unknown containment policy {text!r}")


def format_policy(policy: ContainmentPolicy) -> str:
    if isinstance(policy, Unrestricted):
        return "unrestricted"
    if isinstance(policy, FullyInside):
        return "inside"
    return f"partly:{policy.margin}"


def _clip_axis(d: int, lo: int, hi: int) -> int:
    if lo > hi:
        return 0
    return min(max(d, lo), hi)


def apply_containment(policy: ContainmentPolicy, work: WorkArea,
                      bbox: Rect, d: Delta) -> Delta:
    """Clip a whole-object displacement so bbox honors the policy.

    Pure function; axes are independent.  When the box cannot satisfy the
    policy at all on an axis (it is wider than the allowance), that axis
    freezes rather than jumping.
    """
    if isinstance(policy, Unrestricted):
        return Delta(*d)
    if isinstance(policy, FullyInside):
        dx = _clip_axis(d[0], -bbox.x, work.width - bbox.right)
        dy = _clip_axis(d[1], -bbox.y, work.height - bbox.bottom)
        return Delta(dx, dy)
    m = policy.margin
    dx = _clip_axis(d[0], m - bbox.right, work.width - m - bbox.x)
    dy = _clip_axis(d[1], m - bbox.bottom, work.height - m - bbox.y)
    return Delta(dx, dy)


@dataclass(frozen=True)
class NodeGrab:
    index: int


@dataclass(frozen=True)
class ConnectionGrab:
    index: int


Grab = Union[NodeGrab, ConnectionGrab]


class SenseResult(NamedTuple):
    cursor: CursorHint
    over: Optional[tuple[int, Grab]]


@dataclass
class RegistryEntry:
    """One registered object; controls advertise their clamps here too."""

    obj: MoveableObject

    @property
    def kind(self) -> str:
        return "control-stub" if isinstance(self.obj, ControlStub) else "graphical"

    @property
    def contour(self):
        return self.obj.contour

    @property
    def clamps(self) -> Optional[tuple[int, int, int, int]]:
        if isinstance(self.obj, ControlStub):
            o = self.obj
            return (o.min_w, o.max_w, o.min_h, o.max_h)
        return None


@dataclass
class _Caught:
    entry_index: int
    grab: Grab
    freedom: Optional[MovementFreedom]
    last_mouse: Point
    button: MouseButton


class Mover:
    """Supervises every registered object's gestures on one surface."""

    def __init__(self, work: WorkArea,
                 policy: ContainmentPolicy = PartlyVisible()) -> None:
        self.work = WorkArea(*work)
        self.policy = policy
        self._entries: list[RegistryEntry] = []
        self._caught: Optional[_Caught] = None
        self._was_caught: Optional[int] = None

    # -- registry ---------------------------------------------------------

    def add(self, obj: MoveableObject) -> int:
        """Append an object at the lowest priority; returns its index."""
        self._entries.append(RegistryEntry(obj))
        return len(self._entries) - 1

    def insert(self, at: int, obj: MoveableObject) -> None:
        """Insert at a priority slot; 0 is the front (wins hit ties)."""
        if not 0 <= at <= len(self._entries):
            raise IndexError(f"insert position {at} out of range")
        self._entries.insert(at, RegistryEntry(obj))

    def __len__(self) -> int:
        return len(self._entries)

    def __getitem__(self, index: int) -> RegistryEntry:
        return self._entries[index]

    # -- gesture state machine -------------------------------------------

    @property
    def caught(self) -> Optional[tuple[int, Grab]]:
        """(entry index, grab) while a gesture is in flight, else None."""
        if self._caught is None:
            return None
        return (self._caught.entry_index, self._caught.grab)

    def catch(self, p: Point, button: MouseButton = MouseButton.LEFT) -> bool:
        """Try to start a gesture at p; no-op while one is in flight."""
        if self._caught is not None:
            return False
        p = Point(*p)
        for i, entry in enumerate(self._entries):
            hit = entry.contour.hit_test(p)
            if hit is None:
                continue
            if isinstance(hit, NodeHit):
                grab: Grab = NodeGrab(hit.index)
                freedom: Optional[MovementFreedom] = \
                    entry.contour.node_freedom(hit.index)
            else:
                grab = ConnectionGrab(hit.index)
                freedom = None
            self._caught = _Caught(i, grab, freedom, p, button)
            return True
        return False

    def move(self, p: Point) -> bool:
        """Feed a mouse position; returns whether anything changed on screen."""
        if self._caught is None:
            return False
        p = Point(*p)
        st = self._caught
        d = Delta(p.x - st.last_mouse.x, p.y - st.last_mouse.y)
        st.last_mouse = p
        entry = self._entries[st.entry_index]
        obj = entry.obj
        if isinstance(st.grab, ConnectionGrab):
            clipped = apply_containment(self.policy, self.work,
                                        entry.contour.bbox(), d)
            if clipped == (0, 0):
                return False
            obj.move(*clipped)
            obj.define_contour()
            return True
        dx, dy = d
        if st.freedom is MovementFreedom.NS:
            dx = 0
        elif st.freedom is MovementFreedom.WE:
            dy = 0
        elif st.freedom is MovementFreedom.NONE:
            dx = dy = 0
        enforce = isinstance(self.policy, FullyInside)
        state = obj.geometry_state() if enforce else None
        changed = obj.move_contour_point(st.grab.index, dx, dy, p, st.button)
        if not changed:
            return False
        obj.define_contour()
        if enforce and not self._bbox_inside(entry.contour.bbox()):
            obj.restore_geometry(state)
            return False
        return True

    def release(self) -> bool:
        """End the gesture; returns whether one was in flight."""
        if self._caught is None:
            return False
        entry = self._entries[self._caught.entry_index]
        self._was_caught = self._caught.entry_index
        self._caught = None
        if isinstance(entry.obj, NRing):
            entry.obj.redefine_contour()
        return True

    def was_caught_object(self) -> int:
        """Registry index of the last completed gesture's object."""
        if self._was_caught is None:
            raise RuntimeError("no gesture has completed yet")
        return self._was_caught

    def _bbox_inside(self, bbox: Rect) -> bool:
        return (bbox.x >= 0 and bbox.y >= 0
                and bbox.right <= self.work.width
                and bbox.bottom <= self.work.height)

    # -- read-only queries ------------------------------------------------

    def sense(self, p: Point) -> SenseResult:
        """What is under p, without touching any state."""
        p = Point(*p)
        for i, entry in enumerate(self._entries):
            hit = entry.contour.hit_test(p)
            if hit is None:
                continue
            grab: Grab = (NodeGrab(hit.index) if isinstance(hit, NodeHit)
                          else ConnectionGrab(hit.index))
            return SenseResult(hit.cursor, (i, grab))
        return SenseResult(CursorHint.DEFAULT, None)

    def draw_contours(self) -> list:
        """All contour primitives, back to front (lowest priority first)."""
        prims: list = []
        for entry in reversed(self._entries):
            prims.extend(entry.contour.render_primitives())
        return prims
