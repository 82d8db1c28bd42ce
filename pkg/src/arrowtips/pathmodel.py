"""Render programs: path ops, graphics-state ops, and sequential evaluation.

Coordinates inside a program are stored as ``fixed + widths * W`` where W is a
live line-width register.  The register starts at the host stroke width and may
be rescaled mid-program, which changes what later register-relative coordinates
resolve to.  Evaluating a program yields drawables whose outlines contain plain
float coordinates only.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Union

from .geometry import AffineTransform


@dataclass(frozen=True)
class Scalar:
    """A length ``fixed + widths * W`` against the line-width register W."""

    fixed: float
    widths: float = 0.0

    def resolve(self, register: float) -> float:
        return self.fixed + self.widths * register

    def __neg__(self) -> "Scalar":
        return Scalar(-self.fixed, -self.widths)


Coord = Union[float, Scalar]


def wl(factor: float) -> Scalar:
    """A multiple of the live line-width register."""
    return Scalar(0.0, factor)


def _as_scalar(value: Coord) -> Scalar:
    return value if isinstance(value, Scalar) else Scalar(float(value))


class LineCap(Enum):
    BUTT = "butt"
    ROUND = "round"


class LineJoin(Enum):
    MITER = "miter"
    ROUND = "round"


class Action(Enum):
    """Terminal op: emit the accumulated path with the current state."""

    STROKE = "stroke"
    FILL = "fill"
    FILL_STROKE = "fillstroke"


@dataclass(frozen=True)
class MoveTo:
    x: Coord
    y: Coord


@dataclass(frozen=True)
class LineTo:
    x: Coord
    y: Coord


@dataclass(frozen=True)
class CurveTo:
    c1x: Coord
    c1y: Coord
    c2x: Coord
    c2y: Coord
    x: Coord
    y: Coord


@dataclass(frozen=True)
class ClosePath:
    pass


@dataclass(frozen=True)
class Circle:
    """A standalone closed subpath: full circle at (cx, cy)."""

    cx: Coord
    cy: Coord
    radius: Coord


@dataclass(frozen=True)
class SetDashSolid:
    pass


@dataclass(frozen=True)
class SetCap:
    cap: LineCap


@dataclass(frozen=True)
class SetJoin:
    join: LineJoin


@dataclass(frozen=True)
class SetLineWidthFactor:
    """Multiply the line-width register by ``factor``, affecting later ops."""

    factor: float

    def __post_init__(self) -> None:
        if not self.factor > 0:
            raise ValueError(f"width factor must be positive, got {self.factor}")


@dataclass(frozen=True)
class Translate:
    """Shift the origin of every later path op by (dx, dy)."""

    dx: Coord
    dy: Coord


PathOp = Union[MoveTo, LineTo, CurveTo, ClosePath, Circle]
StateOp = Union[SetDashSolid, SetCap, SetJoin, SetLineWidthFactor, Translate]
Op = Union[PathOp, StateOp, Action]


def move_to(x: Coord, y: Coord) -> MoveTo:
    return MoveTo(_as_scalar(x), _as_scalar(y))


def line_to(x: Coord, y: Coord) -> LineTo:
    return LineTo(_as_scalar(x), _as_scalar(y))


def curve_to(c1x: Coord, c1y: Coord, c2x: Coord, c2y: Coord, x: Coord, y: Coord) -> CurveTo:
    return CurveTo(
        _as_scalar(c1x), _as_scalar(c1y),
        _as_scalar(c2x), _as_scalar(c2y),
        _as_scalar(x), _as_scalar(y),
    )


def circle(cx: Coord, cy: Coord, radius: Coord) -> Circle:
    return Circle(_as_scalar(cx), _as_scalar(cy), _as_scalar(radius))


def translate(dx: Coord, dy: Coord = 0.0) -> Translate:
    return Translate(_as_scalar(dx), _as_scalar(dy))


@dataclass(frozen=True)
class RenderProgram:
    ops: tuple[Op, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "ops", tuple(self.ops))


class ProgramError(ValueError):
    """Structurally invalid program, reported with the offending op index."""

    def __init__(self, index: "int | None", message: str) -> None:
        self.index = index
        prefix = f"op {index}: " if index is not None else ""
        super().__init__(prefix + message)


@dataclass(frozen=True)
class Drawable:
    """One emitted path with the graphics state snapshotted at its action."""

    outline: tuple[PathOp, ...]
    width: float
    cap: LineCap
    join: LineJoin
    action: Action


Scene = tuple[Drawable, ...]


def evaluate(program: RenderProgram, host_width: float) -> Scene:
    """Run ``program`` with the register initialized to ``host_width``.

    Initial state: register = host_width, butt cap, miter join, solid dash.
    Each action snapshots the state, emits the accumulated path, and clears the
    path; state persists across actions.
    """
    if not host_width > 0:
        raise ValueError(f"stroke width must be positive, got {host_width}")
    register = host_width
    cap = LineCap.BUTT
    join = LineJoin.MITER
    offx = 0.0
    offy = 0.0
    outline: list[PathOp] = []
    pending_since: "int | None" = None
    subpath_open = False
    drawables: list[Drawable] = []

    def resolve(v: Coord) -> float:
        return v.resolve(register) if isinstance(v, Scalar) else float(v)

    for index, op in enumerate(program.ops):
        if isinstance(op, (MoveTo, LineTo, CurveTo, ClosePath, Circle)):
            if pending_since is None:
                pending_since = index
        if isinstance(op, MoveTo):
            outline.append(MoveTo(resolve(op.x) + offx, resolve(op.y) + offy))
            subpath_open = True
        elif isinstance(op, LineTo):
            if not subpath_open:
                raise ProgramError(index, "line op without a current subpath")
            outline.append(LineTo(resolve(op.x) + offx, resolve(op.y) + offy))
        elif isinstance(op, CurveTo):
            if not subpath_open:
                raise ProgramError(index, "curve op without a current subpath")
            outline.append(CurveTo(
                resolve(op.c1x) + offx, resolve(op.c1y) + offy,
                resolve(op.c2x) + offx, resolve(op.c2y) + offy,
                resolve(op.x) + offx, resolve(op.y) + offy,
            ))
        elif isinstance(op, ClosePath):
            if not subpath_open:
                raise ProgramError(index, "close op without a current subpath")
            outline.append(ClosePath())
            subpath_open = False
        elif isinstance(op, Circle):
            radius = resolve(op.radius)
            if not radius > 0:
                raise ProgramError(index, f"circle radius must be positive, got {radius}")
            outline.append(Circle(resolve(op.cx) + offx, resolve(op.cy) + offy, radius))
        elif isinstance(op, SetDashSolid):
            pass
        elif isinstance(op, SetCap):
            cap = op.cap
        elif isinstance(op, SetJoin):
            join = op.join
        elif isinstance(op, SetLineWidthFactor):
            register *= op.factor
        elif isinstance(op, Translate):
            offx += resolve(op.dx)
            offy += resolve(op.dy)
        elif isinstance(op, Action):
            if not outline:
                raise ProgramError(index, "action with no path to draw")
            drawables.append(Drawable(tuple(outline), register, cap, join, op))
            outline.clear()
            pending_since = None
            subpath_open = False
        else:
            raise ProgramError(index, f"unknown op {op!r}")

    if outline:
        raise ProgramError(pending_since, "path ops after the final action are never drawn")
    if not drawables:
        raise ProgramError(None, "program has no drawing action")
    return tuple(drawables)


def _mirror(program: RenderProgram, flip_x: bool) -> RenderProgram:
    ops: list[Op] = []
    for op in program.ops:
        if isinstance(op, MoveTo):
            ops.append(MoveTo(-op.x, op.y) if flip_x else MoveTo(op.x, -op.y))
        elif isinstance(op, LineTo):
            ops.append(LineTo(-op.x, op.y) if flip_x else LineTo(op.x, -op.y))
        elif isinstance(op, CurveTo):
            if flip_x:
                ops.append(CurveTo(-op.c1x, op.c1y, -op.c2x, op.c2y, -op.x, op.y))
            else:
                ops.append(CurveTo(op.c1x, -op.c1y, op.c2x, -op.c2y, op.x, -op.y))
        elif isinstance(op, Circle):
            if flip_x:
                ops.append(Circle(-op.cx, op.cy, op.radius))
            else:
                ops.append(Circle(op.cx, -op.cy, op.radius))
        elif isinstance(op, Translate):
            # The displacement is geometry, so it flips with the axis.
            ops.append(Translate(-op.dx, op.dy) if flip_x else Translate(op.dx, -op.dy))
        else:
            ops.append(op)
    return RenderProgram(tuple(ops))


def mirror_x(program: RenderProgram) -> RenderProgram:
    """Reflect across the y axis (negate every x coordinate)."""
    return _mirror(program, flip_x=True)


def mirror_y(program: RenderProgram) -> RenderProgram:
    """Reflect across the x axis (negate every y coordinate)."""
    return _mirror(program, flip_x=False)


def _map_point(t: AffineTransform, x: Scalar, y: Scalar) -> tuple[Scalar, Scalar]:
    return (
        Scalar(t.a * x.fixed + t.c * y.fixed + t.tx, t.a * x.widths + t.c * y.widths),
        Scalar(t.b * x.fixed + t.d * y.fixed + t.ty, t.b * x.widths + t.d * y.widths),
    )


def _map_vector(t: AffineTransform, x: Scalar, y: Scalar) -> tuple[Scalar, Scalar]:
    return (
        Scalar(t.a * x.fixed + t.c * y.fixed, t.a * x.widths + t.c * y.widths),
        Scalar(t.b * x.fixed + t.d * y.fixed, t.b * x.widths + t.d * y.widths),
    )


def transform_program(program: RenderProgram, t: AffineTransform) -> RenderProgram:
    """Apply a rigid transform to every path op; radii are kept unchanged.

    Translation displacements map through the linear part only.  Intended for
    rotate+translate placements, where circles stay circles.
    """
    ops: list[Op] = []
    for op in program.ops:
        if isinstance(op, MoveTo):
            ops.append(MoveTo(*_map_point(t, _as_scalar(op.x), _as_scalar(op.y))))
        elif isinstance(op, LineTo):
            ops.append(LineTo(*_map_point(t, _as_scalar(op.x), _as_scalar(op.y))))
        elif isinstance(op, CurveTo):
            c1 = _map_point(t, _as_scalar(op.c1x), _as_scalar(op.c1y))
            c2 = _map_point(t, _as_scalar(op.c2x), _as_scalar(op.c2y))
            end = _map_point(t, _as_scalar(op.x), _as_scalar(op.y))
            ops.append(CurveTo(c1[0], c1[1], c2[0], c2[1], end[0], end[1]))
        elif isinstance(op, Circle):
            cx, cy = _map_point(t, _as_scalar(op.cx), _as_scalar(op.cy))
            ops.append(Circle(cx, cy, _as_scalar(op.radius)))
        elif isinstance(op, Translate):
            ops.append(Translate(*_map_vector(t, _as_scalar(op.dx), _as_scalar(op.dy))))
        else:
            ops.append(op)
    return RenderProgram(tuple(ops))
