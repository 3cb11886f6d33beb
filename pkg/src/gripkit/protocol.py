"""JSON command/response session hosting the engine for interactive clients.

One session owns one scene plus its mover.  Commands mirror raw UI input;
every response carries the complete picture (repaint flag, cursor, full
primitive list, registry info) so clients render without computing any
geometry themselves.  The same JSON travels over stdio lines or HTTP.
"""

from __future__ import annotations

import json
import sys
from http.server import BaseHTTPRequestHandler, SimpleHTTPRequestHandler, ThreadingHTTPServer
from typing import Optional

from . import gallery, render
from .errors import InvariantError, SceneFormatError, TraceFormatError
from .geometry import Point
from .moveable import MouseButton
from .mover import Mover, parse_policy
from .replay import TraceEvent, format_trace
from .scene import Scene, load_scene, save_scene
from .svg import emit_svg


class UiSession:
    """Scene + mover + view toggles behind a dict-in, dict-out interface."""

    def __init__(self) -> None:
        self._scene: Optional[Scene] = None
        self._mover: Optional[Mover] = None
        self._show_contours = False
        self._last_pointer = Point(0, 0)
        self._events: list[TraceEvent] = []

    def handle(self, command: dict) -> dict:
        """Dispatch one command; errors come back as {"error": ...}."""
        try:
            return self._dispatch(command)
        except (SceneFormatError, TraceFormatError, InvariantError) as e:
            return {"error": str(e)}

    def _dispatch(self, command: dict) -> dict:
        if not isinstance(command, dict):
            raise SceneFormatError("command must be a JSON object")
        cmd = command.get("cmd")
        if cmd == "load_scene":
            scene_doc = command.get("scene")
            scene = load_scene(json.dumps(scene_doc)
                               if not isinstance(scene_doc, str) else scene_doc)
            self._scene = scene
            self._mover = scene.build_mover()
            self._events = []
            self._last_pointer = Point(0, 0)
            return self._response(repaint=True)
        if cmd == "pointer":
            return self._pointer(command)
        if cmd == "set_contours":
            visible = bool(command.get("visible"))
            changed = visible != self._show_contours
            self._show_contours = visible
            return self._response(repaint=changed)
        if cmd == "set_policy":
            policy = parse_policy(str(command.get("policy")))
            if self._mover is not None:
                self._mover.policy = policy
            if self._scene is not None:
                self._scene.policy = policy
            return self._response(repaint=False)
        if cmd == "export":
            return self._export(str(command.get("what")))
        raise SceneFormatError(f"unknown command {cmd!r}")

    def _pointer(self, command: dict) -> dict:
        if self._mover is None:
            raise InvariantError("no scene loaded")
        kind = command.get("kind")
        if kind not in ("down", "move", "up"):
            raise TraceFormatError(f"unknown pointer kind {kind!r}")
        x, y = int(command.get("x", 0)), int(command.get("y", 0))
        p = Point(x, y)
        self._last_pointer = p
        if kind == "down":
            button = MouseButton(command.get("button", "left"))
            self._events.append(TraceEvent("down", x, y, button))
            repaint = self._mover.catch(p, button)
        elif kind == "move":
            self._events.append(TraceEvent("move", x, y))
            repaint = self._mover.move(p)
        else:
            self._events.append(TraceEvent("up", x, y))
            repaint = self._mover.release()
        return self._response(repaint=repaint)

    def _export(self, what: str) -> dict:
        if self._scene is None:
            raise InvariantError("no scene loaded")
        if what == "scene":
            text = save_scene(self._scene)
        elif what == "trace":
            text = format_trace(self._events)
        elif what == "svg":
            text = emit_svg(self._scene, self._show_contours)
        else:
            raise SceneFormatError(f"unknown export {what!r}")
        out = self._response(repaint=False)
        out["export"] = {"what": what, "text": text}
        return out

    def _response(self, repaint: bool) -> dict:
        prims: list = []
        info: list[dict] = []
        cursor = "default"
        if self._scene is not None and self._mover is not None:
            for obj in reversed(self._scene.objects):
                prims.extend(obj.render())
            if self._show_contours:
                prims.extend(self._mover.draw_contours())
            caught = self._mover.caught
            for i, _ in enumerate(self._scene.objects):
                entry = self._mover[i]
                bbox = entry.contour.bbox()
                info.append({"index": i, "type": entry.obj.kind,
                             "bounds": list(bbox),
                             "caught": caught is not None and caught[0] == i})
            cursor = self._mover.sense(self._last_pointer).cursor.value
        return {"repaint": repaint, "cursor": cursor,
                "render": render.primitives_to_json(prims), "info": info}


def stdio_loop(stdin=None, stdout=None) -> None:
    """One JSON command per input line, one JSON response per output line."""
    stdin = stdin if stdin is not None else sys.stdin
    stdout = stdout if stdout is not None else sys.stdout
    session = UiSession()
    for line in stdin:
        line = line.strip()
        if not line:
            continue
        try:
            command = json.loads(line)
        except json.JSONDecodeError as e:
            response = {"error": f"bad command line: {e.msg}"}
        else:
            response = session.handle(command)
        stdout.write(json.dumps(response) + "\n")
        stdout.flush()


def make_server(port: int, root: Optional[str] = None) -> ThreadingHTTPServer:
    """Build the HTTP server: POST /command plus the gallery endpoints.

    With root set, anything else is served as static files from there.
    """
    session = UiSession()

    if root is not None:
        class _Base(SimpleHTTPRequestHandler):
            def __init__(self, *args, **kwargs):
                super().__init__(*args, directory=root, **kwargs)
    else:
        class _Base(BaseHTTPRequestHandler):  # type: ignore[no-redef]
            def do_GET(self):  # noqa: N802  (http.server naming)
                self.send_error(404)

    class Handler(_Base):
        def log_message(self, *args) -> None:
            pass

        def _send_json(self, payload: dict, status: int = 200) -> None:
            body = json.dumps(payload).encode("utf-8")
            self.send_response(status)
            self.send_header("Content-Type", "application/json")
            self.send_header("Content-Length", str(len(body)))
            self.end_headers()
            self.wfile.write(body)

        def do_GET(self):  # noqa: N802
            if self.path == "/gallery":
                self._send_json({"cases": gallery.case_slugs()})
                return
            if self.path.startswith("/gallery/"):
                slug = self.path.split("/", 2)[2]
                if slug == "combined":
                    scene = gallery.combined_scene()
                else:
                    try:
                        scene = gallery.case_scene(slug)
                    except KeyError:
                        self._send_json({"error": f"unknown case {slug!r}"}, 404)
                        return
                self._send_json(json.loads(save_scene(scene)))
                return
            super().do_GET()

        def do_POST(self):  # noqa: N802
            if self.path != "/command":
                self._send_json({"error": "unknown endpoint"}, 404)
                return
            length = int(self.headers.get("Content-Length", 0))
            raw = self.rfile.read(length)
            try:
                command = json.loads(raw)
            except json.JSONDecodeError as e:
                self._send_json({"error": f"bad command: {e.msg}"}, 400)
                return
            self._send_json(session.handle(command))

    return ThreadingHTTPServer(("127.0.0.1", port), Handler)


def serve(port: int, root: Optional[str] = None) -> None:
    """Run the HTTP server until interrupted."""
    server = make_server(port, root)
    print(f"serving on http://127.0.0.1:{server.server_address[1]}")
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()
