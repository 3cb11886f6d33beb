"""The contract every manipulable object fulfills.

Objects own their geometry and the contour built from it.  Supervision
(hit testing, gesture bookkeeping, containment) happens entirely outside,
against the contour, so the three hooks below are the whole surface a new
object class has to provide.
"""

from __future__ import annotations

import copy
from abc import ABC, abstractmethod
from enum import Enum
from typing import ClassVar

from .contour import Contour
from .geometry import Point


class MouseButton(Enum):
    LEFT = "left"
    RIGHT = "right"


class MoveableObject(ABC):
    kind: ClassVar[str] = ""

    def __init__(self) -> None:
        self._contour: Contour | None = None

    @property
    def contour(self) -> Contour:
        if self._contour is None:
            raise RuntimeError("define_contour() has not run yet")
        return self._contour

    @abstractmethod
    def define_contour(self) -> None:
        """Rebuild the contour from the current geometry."""

    @abstractmethod
    def move(self, dx: int, dy: int) -> None:
        """Translate the whole object; shape and size stay put."""

    @abstractmethod
    def move_contour_point(self, index: int, dx: int, dy: int,
                           mouse: Point, button: MouseButton) -> bool:
        """React to a drag of one node.

        Returns True iff the geometry actually changed; False leaves the
        object bit-identical.  The right button is plumbed through but no
        stock object assigns it a meaning.
        """

    @abstractmethod
    def render(self) -> list:
        """The object's own image as a list of render primitives."""

    @abstractmethod
    def to_json(self) -> dict:
        """Serializable record: type tag plus constructor fields."""

    # Snapshot hooks used by the engine to undo a rejected step.  The
    # contour is rebuilt rather than copied; it is a pure function of the
    # geometry fields.
    def geometry_state(self) -> dict:
        return copy.deepcopy(
            {k: v for k, v in self.__dict__.items() if k != "_contour"})

    def restore_geometry(self, state: dict) -> None:
        self.__dict__.update(copy.deepcopy(state))
        self.define_contour()
