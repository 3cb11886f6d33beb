#!/usr/bin/env python3
"""Record the golden scene/trace pairs used by the replay regression tests.

For each gallery case this simulates a short gesture script against a live
mover, recording the pointer events as it goes.  Grab points are taken
from the live contours (and verified with sense()), so the traces stay
valid even if default geometry shifts.  The replayed outcome is frozen
next to each trace as final_scene.json and final.svg.

Run from the repository root:

    python3 scripts/record_goldens.py
"""

from __future__ import annotations

import sys
from pathlib import Path
from statistics import mean

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from gripkit.gallery import case_scene, case_slugs
from gripkit.geometry import Point
from gripkit.moveable import MouseButton
from gripkit.mover import NodeGrab
from gripkit.replay import TraceEvent, format_trace, replay
from gripkit.scene import save_scene
from gripkit.svg import emit_svg

OUT_DIR = Path(__file__).resolve().parent.parent / "tests" / "data" / "goldens"


class Recorder:
    """Applies events to a private mover while keeping the raw trace."""

    def __init__(self, scene):
        self.scene = scene.copy()
        self.mover = self.scene.build_mover()
        self.events: list[TraceEvent] = []

    def down(self, x: int, y: int) -> None:
        self.events.append(TraceEvent("down", x, y, MouseButton.LEFT))
        assert self.mover.catch(Point(x, y)), f"nothing to catch at ({x}, {y})"

    def move(self, x: int, y: int) -> None:
        self.events.append(TraceEvent("move", x, y))
        self.mover.move(Point(x, y))

    def up(self, x: int, y: int) -> None:
        self.events.append(TraceEvent("up", x, y))
        assert self.mover.release()

    def drag(self, start, *stops) -> None:
        self.down(*start)
        for stop in stops:
            self.move(*stop)
        self.up(*stops[-1])

    def node_center(self, index: int, obj: int = 0) -> Point:
        return self.mover[obj].contour.nodes[index].center

    def polygon_centroid(self, index: int, obj: int = 0) -> Point:
        verts = self.mover[obj].contour.nodes[index].area.vertices
        p = Point(round(mean(v.x for v in verts)), round(mean(v.y for v in verts)))
        hit = self.mover.sense(p).over
        assert hit == (obj, NodeGrab(index)), f"centroid misses node {index}"
        return p


def rect_shifted_squares(rec: Recorder) -> None:
    rec.drag((170, 97), (180, 107), (190, 117))       # top border: move
    corner = rec.node_center(2)
    rec.drag(corner, (corner.x + 17, corner.y + 17))  # grow at right-bottom


def rect_corner_circles(rec: Recorder) -> None:
    rec.drag((180, 95), (195, 110), (205, 118))
    corner = rec.node_center(2)
    rec.drag(corner, (corner.x - 20, corner.y - 10))  # shrink a little


def rect_eight_node(rec: Recorder) -> None:
    side = rec.node_center(3)
    rec.drag(side, (side.x + 25, side.y + 5))         # widen; dy is ignored
    rec.drag((140, 90), (155, 110))                   # then move by the border


def graph(rec: Recorder) -> None:
    vertex = rec.node_center(2)
    rec.drag(vertex, (vertex.x + 20, vertex.y - 20))
    rec.drag((185, 103), (195, 118))                  # edge 0-1: whole move


def regular_polygon(rec: Recorder) -> None:
    rec.drag((200, 165), (215, 175), (230, 185))


def rect_solid_move(rec: Recorder) -> None:
    rec.drag((150, 150), (180, 140))


def rect_tiled(rec: Recorder) -> None:
    rec.drag((125, 155), (105, 165))


def screw_nut(rec: Recorder) -> None:
    rec.drag((260, 160), (272, 180))


def rect_full(rec: Recorder) -> None:
    rec.drag((100, 95), (90, 85))                     # corner: grow up-left
    strip = rec.node_center(6)
    rec.drag(strip, (strip.x + 17, strip.y))          # right strip: widen
    rec.drag((150, 150), (170, 160))                  # interior: move


def n_circle(rec: Recorder) -> None:
    start = rec.node_center(1)
    rec.drag(start, (320, 160), (350, 160))           # radius 100 -> 150
    rec.drag((200, 160), (220, 165))                  # then move the center


def n_ring(rec: Recorder) -> None:
    start = rec.node_center(0)
    rec.drag(start, (320, 160), (360, 160), (400, 160))  # outer 100 -> 200
    ring = rec.mover[0].obj  # release retiled it, so recount the borders
    body = rec.polygon_centroid(ring.nodes_on_outer + ring.nodes_on_inner)
    rec.drag(body, (body.x + 10, body.y + 12))


def control_stub(rec: Recorder) -> None:
    handle = rec.node_center(3)
    rec.drag(handle, (handle.x + 200, handle.y))      # clamps at max width
    rec.drag((130, 100), (145, 125))                  # then move by the border


SCRIPTS = {
    "rect_shifted_squares": rect_shifted_squares,
    "rect_corner_circles": rect_corner_circles,
    "rect_eight_node": rect_eight_node,
    "graph": graph,
    "regular_polygon": regular_polygon,
    "rect_solid_move": rect_solid_move,
    "rect_tiled": rect_tiled,
    "screw_nut": screw_nut,
    "rect_full": rect_full,
    "n_circle": n_circle,
    "n_ring": n_ring,
    "control_stub": control_stub,
}


def main() -> int:
    assert set(SCRIPTS) == set(case_slugs()), "gallery cases changed"
    for i, slug in enumerate(case_slugs(), start=1):
        scene = case_scene(slug)
        rec = Recorder(scene)
        SCRIPTS[slug](rec)
        report = replay(scene, rec.events)
        live = save_scene(rec.scene)
        replayed = save_scene(report.final_scene)
        assert live == replayed, f"replay of {slug} diverged from the recording"
        assert replayed != save_scene(scene), f"{slug} script changed nothing"

        case_dir = OUT_DIR / f"{i:02d}_{slug}"
        case_dir.mkdir(parents=True, exist_ok=True)
        (case_dir / "scene.json").write_text(save_scene(scene), encoding="utf-8")
        (case_dir / "trace.jsonl").write_text(format_trace(rec.events),
                                              encoding="utf-8")
        (case_dir / "final_scene.json").write_text(replayed, encoding="utf-8")
        (case_dir / "final.svg").write_text(
            emit_svg(report.final_scene, show_contours=True), encoding="utf-8")
        print(f"{case_dir.name}: {len(rec.events)} events")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
