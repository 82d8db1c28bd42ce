"""Deterministic SVG serialization of evaluated scenes.

Output is meant to be byte-identical for identical input on any platform:
fixed attribute order, fixed number formatting (four decimals, trailing zeros
trimmed, no negative zero), explicit newlines, UTF-8.

Scene geometry is y-up; each cell wraps its paths in a ``scale(1,-1)`` group
so the file shows them the way the coordinates mean them.  Labels stay
outside the flipped group.
"""

from __future__ import annotations

from typing import Iterable, Sequence
from xml.sax.saxutils import escape

from .pathmodel import Action, Circle, ClosePath, CurveTo, LineTo, MoveTo, PathOp, Scene


def format_number(value: float) -> str:
    """Four decimal places, trailing zeros trimmed; tiny values become 0."""
    text = f"{value:.4f}".rstrip("0").rstrip(".")
    if text == "-0":
        return "0"
    return text


def to_path_data(outline: Iterable[PathOp]) -> str:
    """SVG path data for a resolved outline.

    Circles become two half-circle arcs so everything stays one path element.
    """
    fmt = format_number
    parts: list[str] = []
    for op in outline:
        if isinstance(op, MoveTo):
            parts.append(f"M {fmt(op.x)} {fmt(op.y)}")
        elif isinstance(op, LineTo):
            parts.append(f"L {fmt(op.x)} {fmt(op.y)}")
        elif isinstance(op, CurveTo):
            parts.append(
                f"C {fmt(op.c1x)} {fmt(op.c1y)} {fmt(op.c2x)} {fmt(op.c2y)} {fmt(op.x)} {fmt(op.y)}"
            )
        elif isinstance(op, ClosePath):
            parts.append("Z")
        elif isinstance(op, Circle):
            r = fmt(op.radius)
            east = f"{fmt(op.cx + op.radius)} {fmt(op.cy)}"
            west = f"{fmt(op.cx - op.radius)} {fmt(op.cy)}"
            parts.append(f"M {east} A {r} {r} 0 0 1 {west} A {r} {r} 0 0 1 {east} Z")
        else:
            raise TypeError(f"not a resolved path op: {op!r}")
    return " ".join(parts)


def _element(drawable, paint: str) -> str:
    d = to_path_data(drawable.outline)
    if drawable.action is Action.FILL:
        return f'<path d="{d}" fill="{paint}" stroke="none"/>'
    fill = paint if drawable.action is Action.FILL_STROKE else "none"
    return (
        f'<path d="{d}" fill="{fill}" stroke="{paint}"'
        f' stroke-width="{format_number(drawable.width)}"'
        f' stroke-linecap="{drawable.cap.value}"'
        f' stroke-linejoin="{drawable.join.value}"/>'
    )


def scene_bounds(scene: Scene) -> tuple[float, float, float, float]:
    """Control-point bounding box, padded for stroke width and caps.

    A bound, not a tight box: control points can overestimate curves and the
    pad of 1.5 widths covers every cap and miter spike in the catalog.
    """
    xs: list[float] = []
    ys: list[float] = []
    for drawable in scene:
        pad = 0.0 if drawable.action is Action.FILL else 1.5 * drawable.width
        for op in drawable.outline:
            if isinstance(op, Circle):
                points = [
                    (op.cx - op.radius, op.cy - op.radius),
                    (op.cx + op.radius, op.cy + op.radius),
                ]
            elif isinstance(op, CurveTo):
                points = [(op.c1x, op.c1y), (op.c2x, op.c2y), (op.x, op.y)]
            elif isinstance(op, ClosePath):
                points = []
            else:
                points = [(op.x, op.y)]
            for x, y in points:
                xs.append(x - pad)
                xs.append(x + pad)
                ys.append(y - pad)
                ys.append(y + pad)
    if not xs:
        raise ValueError("scene has no geometry")
    return (min(xs), min(ys), max(xs), max(ys))


def render_document(
    scenes: Sequence[tuple[str, Scene]],
    columns: int = 1,
    cell_width: float = 96.0,
    cell_height: float = 30.0,
    origin_x: float = 28.0,
    origin_y: float = 20.0,
    paint: str = "#000",
    font_size: float = 6.0,
) -> str:
    """One SVG document laying the labeled scenes out on a fixed grid.

    Cell (row, col) sits at (col * cell_width, row * cell_height); inside it
    the scene's world origin lands at (origin_x, origin_y) with +y up.
    """
    if columns < 1:
        raise ValueError(f"columns must be >= 1, got {columns}")
    fmt = format_number
    rows = (len(scenes) + columns - 1) // columns
    width = fmt(columns * cell_width)
    height = fmt(max(rows, 1) * cell_height)
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}"'
        f' viewBox="0 0 {width} {height}">',
    ]
    for index, (label, scene) in enumerate(scenes):
        row, col = divmod(index, columns)
        cell_x = fmt(col * cell_width)
        cell_y = fmt(row * cell_height)
        lines.append(f'<g id="cell-r{row}-c{col}" transform="translate({cell_x},{cell_y})">')
        lines.append(
            f'<text x="4" y="8" font-family="monospace"'
            f' font-size="{fmt(font_size)}">{escape(label)}</text>'
        )
        lines.append(f'<g transform="translate({fmt(origin_x)},{fmt(origin_y)}) scale(1,-1)">')
        for drawable in scene:
            lines.append(_element(drawable, paint))
        lines.append("</g>")
        lines.append("</g>")
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
