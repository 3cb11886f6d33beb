"""Command line front end: replay traces, render scenes, emit the gallery.

Exit codes: 0 success, 2 input error (bad file, syntax, unknown tag),
3 invariant violation in otherwise well-formed input.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import gallery, protocol
from .errors import InvariantError, SceneFormatError, TraceFormatError
from .mover import parse_policy
from .replay import parse_trace, replay
from .scene import load_scene, save_scene
from .svg import emit_svg


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gripkit",
        description="Move and resize 2D screen objects; replay recorded traces.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_replay = sub.add_parser("replay", help="run a trace against a scene")
    p_replay.add_argument("--scene", required=True, help="scene JSON file")
    p_replay.add_argument("--trace", required=True, help="trace JSON-lines file")
    p_replay.add_argument("--out", help="write the final scene JSON here")
    p_replay.add_argument("--svg-dir", help="write initial.svg and final.svg here")
    p_replay.add_argument("--contours", action="store_true",
                          help="include contour overlays in SVG output")
    p_replay.add_argument("--policy",
                          help="override containment: unrestricted | partly:N | inside")

    p_render = sub.add_parser("render", help="render a scene to SVG")
    p_render.add_argument("--scene", required=True)
    p_render.add_argument("--svg", required=True, help="output SVG file")
    p_render.add_argument("--contours", action="store_true")
    p_render.add_argument("--policy")

    p_gallery = sub.add_parser("gallery", help="the twelve demonstration scenes")
    group = p_gallery.add_mutually_exclusive_group(required=True)
    group.add_argument("--list", action="store_true", help="print case names")
    group.add_argument("--emit", metavar="DIR", help="write scene files here")

    sub.add_parser("session", help="serve the JSON protocol over stdio lines")

    p_serve = sub.add_parser("serve", help="serve the JSON protocol over HTTP")
    p_serve.add_argument("--port", type=int, default=8077)
    p_serve.add_argument("--root", help="also serve static files from this directory")

    return parser


def _read(path: str) -> str:
    return Path(path).read_text(encoding="utf-8")


def _load_scene_file(path: str, policy_text: str | None):
    scene = load_scene(_read(path))
    if policy_text:
        scene.policy = parse_policy(policy_text)
    return scene


def _cmd_replay(args: argparse.Namespace) -> int:
    scene = _load_scene_file(args.scene, args.policy)
    events = parse_trace(_read(args.trace))
    if args.svg_dir:
        svg_dir = Path(args.svg_dir)
        svg_dir.mkdir(parents=True, exist_ok=True)
        (svg_dir / "initial.svg").write_text(
            emit_svg(scene, args.contours), encoding="utf-8")
    report = replay(scene, events)
    final_text = save_scene(report.final_scene)
    if args.out:
        Path(args.out).write_text(final_text, encoding="utf-8")
    else:
        sys.stdout.write(final_text)
    if args.svg_dir:
        (Path(args.svg_dir) / "final.svg").write_text(
            emit_svg(report.final_scene, args.contours), encoding="utf-8")
    repaints = sum(1 for e in report.log if e.get("repaint"))
    print(f"events: {len(report.log)}  gestures: {len(report.gestures)}  "
          f"repaints: {repaints}", file=sys.stderr)
    return 0


def _cmd_render(args: argparse.Namespace) -> int:
    scene = _load_scene_file(args.scene, args.policy)
    Path(args.svg).write_text(emit_svg(scene, args.contours), encoding="utf-8")
    return 0


def _cmd_gallery(args: argparse.Namespace) -> int:
    if args.list:
        for slug in gallery.case_slugs():
            print(slug)
        return 0
    out = Path(args.emit)
    out.mkdir(parents=True, exist_ok=True)
    for i, slug in enumerate(gallery.case_slugs(), start=1):
        path = out / f"{i:02d}_{slug}.json"
        path.write_text(save_scene(gallery.case_scene(slug)), encoding="utf-8")
        print(path)
    combined = out / "combined.json"
    combined.write_text(save_scene(gallery.combined_scene()), encoding="utf-8")
    print(combined)
    return 0


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "replay":
            return _cmd_replay(args)
        if args.command == "render":
            return _cmd_render(args)
        if args.command == "gallery":
            return _cmd_gallery(args)
        if args.command == "session":
            protocol.stdio_loop()
            return 0
        if args.command == "serve":
            protocol.serve(args.port, args.root)
            return 0
    except (SceneFormatError, TraceFormatError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except InvariantError as e:
        print(f"error: {e}", file=sys.stderr)
        return 3
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
