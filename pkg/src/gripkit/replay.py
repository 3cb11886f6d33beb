"""Deterministic trace replay: the headless twin of live mouse input.

A trace is JSON lines, one pointer event per line: down / move / up with
pixel coordinates (button on down only).  Replaying a trace against a
scene produces exactly what the interactive session would have.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .errors import TraceFormatError
from .geometry import Delta, Point
from .moveable import MouseButton
from .mover import ConnectionGrab, NodeGrab
from .scene import Scene

_COORD_LIMIT = 2 ** 31

_EVENT_KINDS = ("down", "move", "up")


@dataclass(frozen=True)
class TraceEvent:
    kind: str
    x: int
    y: int
    button: Optional[MouseButton] = None


def parse_trace(text: str) -> list[TraceEvent]:
    """Parse JSON-lines pointer events; blank lines are allowed."""
    events: list[TraceEvent] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line:
            continue
        try:
            doc = json.loads(line)
        except json.JSONDecodeError as e:
            raise TraceFormatError(f"line {lineno}: {e.msg}") from None
        if not isinstance(doc, dict):
            raise TraceFormatError(f"line {lineno}: event must be a JSON object")
        kind = doc.get("kind")
        if kind not in _EVENT_KINDS:
            raise TraceFormatError(f"line {lineno}: unknown event kind {kind!r}")
        try:
            x, y = doc["x"], doc["y"]
        except KeyError as e:
            raise TraceFormatError(
                f"line {lineno}: missing field {e.args[0]!r}") from None
        for name, value in (("x", x), ("y", y)):
            if isinstance(value, bool) or not isinstance(value, int):
                raise TraceFormatError(f"line {lineno}: {name} must be an integer")
            if not -_COORD_LIMIT <= value < _COORD_LIMIT:
                raise TraceFormatError(f"line {lineno}: {name} out of range")
        button: Optional[MouseButton] = None
        if kind == "down":
            raw = doc.get("button", "left")
            try:
                button = MouseButton(raw)
            except ValueError:
                raise TraceFormatError(
                    f"line {lineno}: unknown button {raw!r}") from None
        elif "button" in doc:
            raise TraceFormatError(
                f"line {lineno}: only down events carry a button")
        events.append(TraceEvent(kind, x, y, button))
    return events


def format_trace(events: Sequence[TraceEvent]) -> str:
    lines = []
    for ev in events:
        doc: dict = {"kind": ev.kind, "x": ev.x, "y": ev.y}
        if ev.kind == "down":
            doc["button"] = (ev.button or MouseButton.LEFT).value
        lines.append(json.dumps(doc))
    return "\n".join(lines) + ("\n" if lines else "")


@dataclass
class GestureSummary:
    """One completed down...up arc, as seen from the registry."""

    object_index: int
    grab: dict
    start: Point
    end: Point
    net: Delta
    nodes_at_catch: int
    nodes_after_release: int

    def to_json(self) -> dict:
        return {"object": self.object_index, "grab": self.grab,
                "start": list(self.start), "end": list(self.end),
                "net": list(self.net),
                "nodes_at_catch": self.nodes_at_catch,
                "nodes_after_release": self.nodes_after_release}


@dataclass
class ReplayReport:
    final_scene: Scene
    log: list[dict] = field(default_factory=list)
    gestures: list[GestureSummary] = field(default_factory=list)

    def to_json(self) -> dict:
        from .scene import save_scene

        return {"final_scene": json.loads(save_scene(self.final_scene)),
                "log": self.log,
                "gestures": [g.to_json() for g in self.gestures]}


def _grab_json(grab) -> dict:
    if isinstance(grab, NodeGrab):
        return {"kind": "node", "index": grab.index}
    assert isinstance(grab, ConnectionGrab)
    return {"kind": "connection", "index": grab.index}


def replay(scene: Scene, events: Sequence[TraceEvent]) -> ReplayReport:
    """Run the events against a private copy of the scene.

    The log has exactly one entry per event; gesture summaries also track
    contour node counts so border retiling at release is visible.
    """
    scene = scene.copy()
    mover = scene.build_mover()
    log: list[dict] = []
    gestures: list[GestureSummary] = []
    open_gesture: Optional[dict] = None
    for ev in events:
        p = Point(ev.x, ev.y)
        entry: dict = {"kind": ev.kind, "x": ev.x, "y": ev.y}
        if ev.kind == "down":
            caught = mover.catch(p, ev.button or MouseButton.LEFT)
            entry["caught"] = caught
            if caught:
                index, grab = mover.caught
                open_gesture = {
                    "object": index, "grab": _grab_json(grab), "start": p,
                    "nodes": len(mover[index].contour.nodes),
                }
        elif ev.kind == "move":
            entry["repaint"] = mover.move(p)
        else:
            released = mover.release()
            entry["released"] = released
            if released and open_gesture is not None:
                index = open_gesture["object"]
                start = open_gesture["start"]
                gestures.append(GestureSummary(
                    object_index=index,
                    grab=open_gesture["grab"],
                    start=start,
                    end=p,
                    net=Delta(p.x - start.x, p.y - start.y),
                    nodes_at_catch=open_gesture["nodes"],
                    nodes_after_release=len(mover[index].contour.nodes),
                ))
                open_gesture = None
        entry["cursor"] = mover.sense(p).cursor.value
        log.append(entry)
    return ReplayReport(final_scene=scene, log=log, gestures=gestures)
