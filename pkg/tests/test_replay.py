from __future__ import annotations

import json

import pytest

from gripkit.errors import TraceFormatError
from gripkit.geometry import Delta, Point, Rect
from gripkit.moveable import MouseButton
from gripkit.mover import Unrestricted, WorkArea
from gripkit.replay import TraceEvent, format_trace, parse_trace, replay
from gripkit.scene import Scene, save_scene
from gripkit.shapes import NRing, RectCorners


class TestParseTrace:
    def test_basic_events(self):
        text = ('{"kind": "down", "x": 10, "y": 20, "button": "left"}\n'
                '\n'
                '{"kind": "move", "x": -5, "y": 20}\n'
                '{"kind": "up", "x": -5, "y": 20}\n')
        events = parse_trace(text)
        assert events == [
            TraceEvent("down", 10, 20, MouseButton.LEFT),
            TraceEvent("move", -5, 20),
            TraceEvent("up", -5, 20),
        ]

    def test_down_button_defaults_to_left(self):
        (ev,) = parse_trace('{"kind": "down", "x": 0, "y": 0}')
        assert ev.button is MouseButton.LEFT

    def test_format_parse_round_trip(self):
        events = [TraceEvent("down", 1, 2, MouseButton.RIGHT),
                  TraceEvent("move", 3, 4),
                  TraceEvent("up", 3, 4)]
        assert parse_trace(format_trace(events)) == events

    def test_format_always_writes_the_down_button(self):
        text = format_trace([TraceEvent("down", 1, 2, MouseButton.LEFT)])
        assert json.loads(text)["button"] == "left"

    def test_format_empty(self):
        assert format_trace([]) == ""

    @pytest.mark.parametrize("line, fragment", [
        ('{"kind": "down", "x": 1', "line 1"),
        ('[1, 2, 3]', "JSON object"),
        ('{"kind": "hover", "x": 1, "y": 2}', "kind 'hover'"),
        ('{"kind": "move", "y": 2}', "missing field 'x'"),
        ('{"kind": "move", "x": 1.5, "y": 2}', "x must be an integer"),
        ('{"kind": "move", "x": true, "y": 2}', "x must be an integer"),
        ('{"kind": "move", "x": 1, "y": 4294967296}', "y out of range"),
        ('{"kind": "down", "x": 1, "y": 2, "button": "middle"}',
         "unknown button"),
        ('{"kind": "move", "x": 1, "y": 2, "button": "left"}',
         "only down events"),
        ('{"kind": "up", "x": 1, "y": 2, "button": "left"}',
         "only down events"),
    ])
    def test_rejects_malformed_lines(self, line, fragment):
        with pytest.raises(TraceFormatError, match=fragment):
            parse_trace(line)

    def test_error_carries_the_line_number(self):
        good = '{"kind": "move", "x": 1, "y": 2}'
        with pytest.raises(TraceFormatError, match="line 3"):
            parse_trace(f"{good}\n{good}\nwat\n")


def drag(x0, y0, x1, y1) -> list[TraceEvent]:
    return [TraceEvent("down", x0, y0, MouseButton.LEFT),
            TraceEvent("move", x1, y1),
            TraceEvent("up", x1, y1)]


class TestReplay:
    def scene(self) -> Scene:
        return Scene(WorkArea(400, 300), Unrestricted(),
                     [RectCorners(Rect(100, 100, 100, 60))])

    def test_border_drag_translates_the_rect(self):
        report = replay(self.scene(), drag(150, 97, 170, 107))
        assert report.final_scene.objects[0].rect == Rect(120, 110, 100, 60)

    def test_the_input_scene_is_untouched(self):
        scene = self.scene()
        replay(scene, drag(150, 97, 170, 107))
        assert scene.objects[0].rect == Rect(100, 100, 100, 60)

    def test_log_has_one_entry_per_event(self):
        events = drag(150, 97, 170, 107) + drag(5, 5, 9, 9)
        report = replay(self.scene(), events)
        assert len(report.log) == 6
        assert report.log[0] == {"kind": "down", "x": 150, "y": 97,
                                 "caught": True, "cursor": "size_all"}
        assert report.log[1]["repaint"] is True
        assert report.log[2]["released"] is True
        assert report.log[3]["caught"] is False
        assert report.log[5]["released"] is False

    def test_gesture_summary(self):
        report = replay(self.scene(), drag(150, 97, 170, 107))
        (g,) = report.gestures
        assert g.object_index == 0
        assert g.grab == {"kind": "connection", "index": 0}
        assert g.start == Point(150, 97)
        assert g.end == Point(170, 107)
        assert g.net == Delta(20, 10)
        assert g.nodes_at_catch == g.nodes_after_release == 4

    def test_missed_gesture_leaves_no_summary(self):
        report = replay(self.scene(), drag(5, 5, 9, 9))
        assert report.gestures == []

    def test_click_without_motion_changes_nothing(self):
        scene = self.scene()
        before = save_scene(scene)
        report = replay(scene, [TraceEvent("down", 150, 97, MouseButton.LEFT),
                                TraceEvent("up", 150, 97)])
        assert save_scene(report.final_scene) == before
        assert len(report.gestures) == 1

    def test_ring_gesture_shows_the_release_retiling(self):
        scene = Scene(WorkArea(1000, 800), Unrestricted(),
                      [NRing((500, 400), 50, 100, node_distance=10)])
        report = replay(scene, drag(600, 400, 700, 400))
        (g,) = report.gestures
        assert g.grab == {"kind": "node", "index": 0}
        assert g.nodes_at_catch == 126   # 63 outer + 31 inner + 32 fill
        assert g.nodes_after_release == 221  # 126 + 31 + 64 after retiling
        assert report.final_scene.objects[0].outer_radius == 200

    def test_report_serializes(self):
        report = replay(self.scene(), drag(150, 97, 170, 107))
        doc = report.to_json()
        assert doc["final_scene"] == json.loads(save_scene(report.final_scene))
        assert len(doc["log"]) == 3
        assert doc["gestures"][0]["net"] == [20, 10]
