"""Deterministic SVG snapshots of a scene.

Output is plain text with a fixed element order (shapes back to front,
then the optional contour layer), so identical scenes yield identical
bytes.
"""

from __future__ import annotations

from xml.sax.saxutils import escape

from . import render
from .scene import Scene


def _style(stroke, fill, width) -> str:
    parts = []
    if stroke is not None:
        parts.append(f'stroke="{stroke}" stroke-width="{width}"')
    parts.append(f'fill="{fill if fill is not None else "none"}"')
    return " ".join(parts)


def _element(prim: render.Primitive) -> str:
    if isinstance(prim, render.Line):
        return (f'<line x1="{prim.x1}" y1="{prim.y1}" x2="{prim.x2}" '
                f'y2="{prim.y2}" stroke="{prim.stroke}" '
                f'stroke-width="{prim.width}"/>')
    if isinstance(prim, render.Box):
        return (f'<rect x="{prim.x}" y="{prim.y}" width="{prim.w}" '
                f'height="{prim.h}" {_style(prim.stroke, prim.fill, prim.width)}/>')
    if isinstance(prim, render.Circle):
        return (f'<circle cx="{prim.cx}" cy="{prim.cy}" r="{prim.r}" '
                f'{_style(prim.stroke, prim.fill, prim.width)}/>')
    if isinstance(prim, render.Polygon):
        pts = " ".join(f"{x},{y}" for x, y in prim.points)
        return (f'<polygon points="{pts}" '
                f'{_style(prim.stroke, prim.fill, prim.width)}/>')
    assert isinstance(prim, render.Text)
    return (f'<text x="{prim.x}" y="{prim.y}" font-size="{prim.size}" '
            f'font-family="sans-serif" fill="{prim.fill}">'
            f'{escape(prim.text)}</text>')


def emit_svg(scene: Scene, show_contours: bool = False) -> str:
    """Render the scene; contour overlays are opt-in."""
    w, h = scene.work.width, scene.work.height
    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" '
        f'viewBox="0 0 {w} {h}">',
        f'<rect width="{w}" height="{h}" fill="{render.BACKGROUND}"/>',
        '<g id="shapes">',
    ]
    for obj in reversed(scene.objects):
        lines.extend(_element(p) for p in obj.render())
    lines.append("</g>")
    if show_contours:
        lines.append('<g id="contours">')
        mover = scene.build_mover()
        lines.extend(_element(p) for p in mover.draw_contours())
        lines.append("</g>")
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
