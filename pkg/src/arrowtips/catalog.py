"""The arrow-tip catalog.

Every tip is a pure function of the host stroke width w: an extents record
(signed reach along the x axis, tip front at the origin pointing +x) and a
render program.  Most tips measure themselves in a private base unit
``a = pt + k * w`` resolved when the program is built; coordinates written
against the line-width register stay symbolic (``wl``) and follow mid-program
register changes.

Reversed forms declared as mirrors of an original satisfy, exactly:
left' = -right, right' = -left, program' = mirror_x(program).  Tips whose
"X reversed" sibling is an independent declaration (the open triangles, the
curved-tail tips, the cap chevrons) do not satisfy those laws and are not
linked; ``reverse_tip`` raises for them.
"""

from __future__ import annotations

import difflib
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Optional

from .geometry import Point, add, polar
from .pathmodel import (
    Action,
    ClosePath,
    LineCap,
    LineJoin,
    RenderProgram,
    SetCap,
    SetDashSolid,
    SetJoin,
    SetLineWidthFactor,
    circle,
    curve_to,
    line_to,
    mirror_x,
    move_to,
    translate,
    wl,
)


class Side(Enum):
    START = "start"
    END = "end"


@dataclass(frozen=True)
class Extents:
    """Signed horizontal reach of a tip whose front sits at the origin.

    ``left`` is where the tip's material starts (nonpositive in practice),
    ``right`` how far it protrudes past the path end.
    """

    left: float
    right: float


@dataclass(frozen=True, eq=False, repr=False)
class TipDefinition:
    """One catalog entry.  Identity equality: entries are registry singletons."""

    start_name: str
    end_name: str
    base_unit: Optional[Callable[[float], float]]
    extents_fn: Callable[[float], Extents]
    program_fn: Callable[[float], RenderProgram]

    def __repr__(self) -> str:
        return f"<TipDefinition {self.start_name!r}/{self.end_name!r}>"


@dataclass(frozen=True)
class TipId:
    """A tip selected for one side of a path."""

    definition: TipDefinition
    side: Side

    @property
    def name(self) -> str:
        return (self.definition.start_name if self.side is Side.START
                else self.definition.end_name)


class UnknownTipError(LookupError):
    def __init__(self, name: str, side: Side, candidates: "list[str] | None" = None) -> None:
        self.name = name
        self.side = side
        message = f"no {side.value} tip named {name!r}"
        if candidates:
            message += "; close matches: " + ", ".join(repr(c) for c in candidates)
        super().__init__(message)


class NoReversalError(LookupError):
    def __init__(self, name: str) -> None:
        self.name = name
        super().__init__(f"tip {name!r} has no declared reversed form")


def _check_width(w: float) -> None:
    if not w > 0:
        raise ValueError(f"stroke width must be positive, got {w}")


def _unit(pt: float, per_width: float) -> Callable[[float], float]:
    def resolve(w: float) -> float:
        return pt + per_width * w
    return resolve


_PAREN_UNIT = _unit(2.0, 1.5)
_ANGLE_UNIT = _unit(0.3, 0.25)
_TRIANGLE_UNIT = _unit(0.5, 0.25)
_DOT_UNIT = _unit(0.4, 0.2)       # filled/open dots and the hook family
_DIAMOND_UNIT = _unit(0.4, 0.275)
_CURVE_UNIT = _unit(0.28, 0.3)    # curved-outline tips
_SERIF_UNIT = _unit(0.4, 0.45)
_BRACKET_UNIT = _unit(1.0, 1.25)


# --- square bracket ---------------------------------------------------------

def _bracket_extents(w: float) -> Extents:
    a = _BRACKET_UNIT(w)
    return Extents(-a, 0.5 * w)


def _bracket_program(w: float) -> RenderProgram:
    # The drawing unit is larger than the extents unit, so the drawn bracket
    # overhangs its declared extents.  Kept as declared.
    a = 2.0 + 1.5 * w
    b = a + w
    return RenderProgram((
        SetDashSolid(), SetJoin(LineJoin.MITER), SetCap(LineCap.BUTT),
        move_to(-0.5 * b, -a),
        line_to(0.0, -a),
        line_to(0.0, a),
        line_to(-0.5 * b, a),
        Action.STROKE,
    ))


# --- round bracket ----------------------------------------------------------

def _paren_extents(w: float) -> Extents:
    a = _PAREN_UNIT(w)
    return Extents(-(0.5 * a + 0.5 * w), 0.0625 * a + 0.5 * w)


def _paren_program(w: float) -> RenderProgram:
    a = _PAREN_UNIT(w)
    return RenderProgram((
        SetDashSolid(), SetCap(LineCap.ROUND),
        move_to(-0.5 * a, -a),
        curve_to(0.25 * a, -0.5 * a, 0.25 * a, 0.5 * a, -0.5 * a, a),
        Action.STROKE,
    ))


# --- open vees and filled/open triangles -------------------------------------

def _vee_arm_ops(a: float, apex_x: float, arm_angle: float, arm_reach: float):
    """Upper arm, apex, lower arm of a symmetric vee opening to the left."""
    apex = Point(apex_x, 0.0)
    upper = add(apex, polar(arm_angle, arm_reach))
    lower = add(apex, polar(-arm_angle, arm_reach))
    return (
        move_to(upper.x, upper.y),
        line_to(apex.x, apex.y),
        line_to(lower.x, lower.y),
    )


def _angle_90_extents(w: float) -> Extents:
    a = _ANGLE_UNIT(w)
    return Extents(-(5.5 * a + 0.5 * w), 0.5 * a + 0.707 * w)


def _angle_90_program(w: float) -> RenderProgram:
    a = _ANGLE_UNIT(w)
    return RenderProgram((
        SetDashSolid(), SetCap(LineCap.ROUND), SetJoin(LineJoin.MITER),
        move_to(-5.5 * a, -6.0 * a),
        line_to(0.5 * a, 0.0),
        line_to(-5.5 * a, 6.0 * a),
        Action.STROKE,
    ))


def _angle_60_extents(w: float) -> Extents:
    a = _ANGLE_UNIT(w)
    return Extents(-(7.29 * a + 0.5 * w), 0.5 * a + w)


def _angle_60_program(w: float) -> RenderProgram:
    a = _ANGLE_UNIT(w)
    return RenderProgram((
        SetDashSolid(), SetCap(LineCap.ROUND), SetJoin(LineJoin.MITER),
        *_vee_arm_ops(a, 0.5 * a, 150.0, 9.0 * a),
        Action.STROKE,
    ))


def _angle_45_extents(w: float) -> Extents:
    a = _ANGLE_UNIT(w)
    return Extents(-(8.705 * a + 0.5 * w), 0.5 * a + 1.28 * w)


def _angle_45_program(w: float) -> RenderProgram:
    a = _ANGLE_UNIT(w)
    return RenderProgram((
        SetDashSolid(), SetCap(LineCap.ROUND), SetJoin(LineJoin.MITER),
        *_vee_arm_ops(a, 0.5 * a, 157.0, 10.0 * a),
        Action.STROKE,
    ))


def _filled_dot_extents(w: float) -> Extents:
    a = _DOT_UNIT(w)
    return Extents(-(5.5 * a + w), 1.5 * a + 0.5 * w)


def _filled_dot_program(w: float) -> RenderProgram:
    a = _DOT_UNIT(w)
    return RenderProgram((
        SetDashSolid(),
        circle(-3.0 * a, 0.0, 4.5 * a),
        Action.FILL_STROKE,
    ))


def _open_dot_extents(w: float) -> Extents:
    a = _DOT_UNIT(w)
    return Extents(-0.5 * w, 9.0 * a + 0.5 * w)


def _open_dot_program(w: float) -> RenderProgram:
    a = _DOT_UNIT(w)
    return RenderProgram((
        SetDashSolid(),
        circle(4.5 * a, 0.0, 4.5 * a),
        Action.STROKE,
    ))


def _diamond_extents(w: float) -> Extents:
    a = _DIAMOND_UNIT(w)
    return Extents(-(13.0 * a + 0.5 * w), a + 0.5 * w)


def _diamond_program(w: float) -> RenderProgram:
    a = _DIAMOND_UNIT(w)
    return RenderProgram((
        SetDashSolid(), SetJoin(LineJoin.ROUND),
        move_to(a, 0.0),
        line_to(-6.0 * a, 4.0 * a),
        line_to(-13.0 * a, 0.0),
        line_to(-6.0 * a, -4.0 * a),
        ClosePath(),
        Action.FILL_STROKE,
    ))


def _open_diamond_extents(w: float) -> Extents:
    a = _DIAMOND_UNIT(w)
    return Extents(-0.5 * w, 14.0 * a + 0.5 * w)


def _open_diamond_program(w: float) -> RenderProgram:
    a = _DIAMOND_UNIT(w)
    return RenderProgram((
        SetDashSolid(), SetJoin(LineJoin.ROUND),
        move_to(14.0 * a, 0.0),
        line_to(7.0 * a, 4.0 * a),
        line_to(0.0, 0.0),
        line_to(7.0 * a, -4.0 * a),
        ClosePath(),
        Action.STROKE,
    ))


def _triangle_90_extents(w: float) -> Extents:
    a = _TRIANGLE_UNIT(w)
    return Extents(-(5.5 * a + 0.5 * w), 0.5 * a + 0.707 * w)


def _triangle_90_program(w: float) -> RenderProgram:
    a = _TRIANGLE_UNIT(w)
    return RenderProgram((
        SetDashSolid(), SetJoin(LineJoin.MITER),
        move_to(-5.5 * a, -6.0 * a),
        line_to(0.5 * a, 0.0),
        line_to(-5.5 * a, 6.0 * a),
        ClosePath(),
        Action.FILL_STROKE,
    ))


def _triangle_60_extents(w: float) -> Extents:
    a = _TRIANGLE_UNIT(w)
    return Extents(-(7.29 * a + 0.5 * w), 0.5 * a + w)


def _triangle_60_program(w: float) -> RenderProgram:
    a = _TRIANGLE_UNIT(w)
    return RenderProgram((
        SetDashSolid(), SetJoin(LineJoin.MITER),
        *_vee_arm_ops(a, 0.5 * a, 150.0, 9.0 * a),
        ClosePath(),
        Action.FILL_STROKE,
    ))


def _triangle_45_extents(w: float) -> Extents:
    a = _TRIANGLE_UNIT(w)
    return Extents(-(8.705 * a + 0.5 * w), 0.5 * a + 1.28 * w)


def _triangle_45_program(w: float) -> RenderProgram:
    a = _TRIANGLE_UNIT(w)
    return RenderProgram((
        SetDashSolid(), SetJoin(LineJoin.MITER),
        *_vee_arm_ops(a, 0.5 * a, 157.0, 10.0 * a),
        ClosePath(),
        Action.FILL_STROKE,
    ))


def _open_triangle_90_extents(w: float) -> Extents:
    a = _TRIANGLE_UNIT(w)
    return Extents(-0.5 * w, 6.0 * a + 0.707 * w)


def _open_triangle_90_program(w: float) -> RenderProgram:
    a = _TRIANGLE_UNIT(w)
    return RenderProgram((
        SetDashSolid(), SetJoin(LineJoin.MITER),
        move_to(0.0, -6.0 * a),
        line_to(6.0 * a, 0.0),
        line_to(0.0, 6.0 * a),
        ClosePath(),
        Action.STROKE,
    ))


def _open_triangle_90_reversed_extents(w: float) -> Extents:
    a = _TRIANGLE_UNIT(w)
    return Extents(-0.707 * w, 6.0 * a + 0.5 * w)


def _open_triangle_90_reversed_program(w: float) -> RenderProgram:
    a = _TRIANGLE_UNIT(w)
    return RenderProgram((
        SetDashSolid(), SetJoin(LineJoin.MITER),
        move_to(6.0 * a, -6.0 * a),
        line_to(0.0, 0.0),
        line_to(6.0 * a, 6.0 * a),
        ClosePath(),
        Action.STROKE,
    ))


def _open_triangle_60_extents(w: float) -> Extents:
    a = _TRIANGLE_UNIT(w)
    return Extents(-0.5 * w, 7.794 * a + w)


def _open_triangle_60_program(w: float) -> RenderProgram:
    a = _TRIANGLE_UNIT(w)
    return RenderProgram((
        SetDashSolid(), SetJoin(LineJoin.MITER),
        *_vee_arm_ops(a, 7.794 * a, 150.0, 9.0 * a),
        ClosePath(),
        Action.STROKE,
    ))


def _open_triangle_60_reversed_extents(w: float) -> Extents:
    a = _TRIANGLE_UNIT(w)
    return Extents(-w, 7.794 * a + 0.5 * w)


def _open_triangle_60_reversed_program(w: float) -> RenderProgram:
    a = _TRIANGLE_UNIT(w)
    return RenderProgram((
        SetDashSolid(), SetJoin(LineJoin.MITER),
        *_vee_arm_ops(a, 0.0, 30.0, 9.0 * a),
        ClosePath(),
        Action.STROKE,
    ))


def _open_triangle_45_extents(w: float) -> Extents:
    a = _TRIANGLE_UNIT(w)
    return Extents(-0.5 * w, 9.205 * a + 1.28 * w)


def _open_triangle_45_program(w: float) -> RenderProgram:
    a = _TRIANGLE_UNIT(w)
    return RenderProgram((
        SetDashSolid(), SetJoin(LineJoin.MITER),
        *_vee_arm_ops(a, 9.205 * a, 157.0, 10.0 * a),
        ClosePath(),
        Action.STROKE,
    ))


def _open_triangle_45_reversed_extents(w: float) -> Extents:
    a = _TRIANGLE_UNIT(w)
    return Extents(-1.28 * w, 9.205 * a + 0.5 * w)


def _open_triangle_45_reversed_program(w: float) -> RenderProgram:
    a = _TRIANGLE_UNIT(w)
    return RenderProgram((
        SetDashSolid(), SetJoin(LineJoin.MITER),
        *_vee_arm_ops(a, 0.0, 23.0, 10.0 * a),
        ClosePath(),
        Action.STROKE,
    ))


# --- curved-outline tips ------------------------------------------------------

def _latex_prime_extents(w: float) -> Extents:
    a = _CURVE_UNIT(w)
    return Extents(-4.0 * a, 6.0 * a)


def _latex_prime_program(w: float) -> RenderProgram:
    a = _CURVE_UNIT(w)
    return RenderProgram((
        move_to(6.0 * a, 0.0),
        curve_to(3.5 * a, 0.5 * a, -a, 1.5 * a, -4.0 * a, 3.75 * a),
        curve_to(-1.5 * a, a, -1.5 * a, -a, -4.0 * a, -3.75 * a),
        curve_to(-a, -1.5 * a, 3.5 * a, -0.5 * a, 6.0 * a, 0.0),
        Action.FILL,
    ))


def _stealth_prime_extents(w: float) -> Extents:
    a = _CURVE_UNIT(w)
    return Extents(-(6.0 * a + 0.5 * w), 2.0 * a + 0.5 * w)


def _stealth_prime_program(w: float) -> RenderProgram:
    a = _CURVE_UNIT(w)
    return RenderProgram((
        SetDashSolid(), SetJoin(LineJoin.ROUND),
        move_to(2.0 * a, 0.0),
        curve_to(-0.5 * a, 0.5 * a, -3.0 * a, 1.5 * a, -6.0 * a, 3.25 * a),
        curve_to(-3.0 * a, a, -3.0 * a, -a, -6.0 * a, -3.25 * a),
        curve_to(-3.0 * a, -1.5 * a, -0.5 * a, -0.5 * a, 2.0 * a, 0.0),
        ClosePath(),
        Action.FILL_STROKE,
    ))


def _to_extents(w: float) -> Extents:
    return Extents(-0.84 - 1.3 * w, 0.21 + 0.625 * w)


def _to_program(w: float, sign: float) -> RenderProgram:
    # The 0.8 width rescale comes first, so every register-relative
    # coordinate below resolves against 0.8 w.  The base unit was fixed
    # against the unscaled width.
    a = _CURVE_UNIT(w)
    return RenderProgram((
        SetLineWidthFactor(0.8),
        SetDashSolid(), SetCap(LineCap.ROUND), SetJoin(LineJoin.ROUND),
        move_to(-3.0 * a, sign * 4.0 * a),
        curve_to(-2.75 * a, sign * 2.5 * a, 0.0, sign * 0.25 * a, 0.75 * a, 0.0),
        curve_to(0.55 * a, wl(-sign * 0.125),
                 0.5 * a, wl(-sign * 0.125),
                 0.5 * a, wl(-sign * 0.125)),
        line_to(0.0, wl(-sign * 0.125)),
        Action.STROKE,
    ))


def _left_to_program(w: float) -> RenderProgram:
    return _to_program(w, 1.0)


def _right_to_program(w: float) -> RenderProgram:
    return _to_program(w, -1.0)


def _to_reversed_extents(w: float) -> Extents:
    a = _CURVE_UNIT(w)
    return Extents(-0.1 * w, 3.75 * a + 0.9 * w)


def _to_reversed_program(w: float, sign: float) -> RenderProgram:
    # Tail stub at full width, then the barb at 0.8 width.  The origin shift
    # of 0.625 registers executes after the rescale, so it lands at 0.5 w.
    # The barb curve is issued twice with differing final y, as declared.
    a = _CURVE_UNIT(w)
    return RenderProgram((
        SetDashSolid(), SetJoin(LineJoin.ROUND), SetCap(LineCap.BUTT),
        move_to(wl(0.5), 0.0),
        line_to(wl(-0.1), 0.0),
        Action.STROKE,
        SetCap(LineCap.ROUND),
        SetLineWidthFactor(0.8),
        translate(wl(0.625)),
        move_to(3.75 * a, sign * 4.0 * a),
        curve_to(3.5 * a, sign * 2.5 * a, 0.75 * a, sign * 0.25 * a, 0.0, wl(sign * 0.125)),
        move_to(3.75 * a, sign * 4.0 * a),
        curve_to(3.5 * a, sign * 2.5 * a, 0.75 * a, sign * 0.25 * a, 0.0, wl(-sign * 0.125)),
        Action.STROKE,
    ))


def _left_to_reversed_program(w: float) -> RenderProgram:
    return _to_reversed_program(w, 1.0)


def _right_to_reversed_program(w: float) -> RenderProgram:
    return _to_reversed_program(w, -1.0)


# --- hooks --------------------------------------------------------------------

def _hook_extents(w: float) -> Extents:
    a = _DOT_UNIT(w)
    return Extents(-0.5 * w, 3.75 * a + 0.5 * w)


def _hook_arc_ops(a: float, sign: float):
    return (
        curve_to(2.415 * a, 0.0, 3.75 * a, sign * 1.665 * a, 3.75 * a, sign * 3.0 * a),
        curve_to(3.75 * a, sign * 4.665 * a, 2.415 * a, sign * 6.0 * a, 0.75 * a, sign * 6.0 * a),
    )


def _left_hook_program(w: float) -> RenderProgram:
    a = _DOT_UNIT(w)
    return RenderProgram((
        SetDashSolid(), SetCap(LineCap.ROUND),
        move_to(0.0, 0.0),
        line_to(0.75 * a, 0.0),
        *_hook_arc_ops(a, 1.0),
        Action.STROKE,
    ))


def _right_hook_program(w: float) -> RenderProgram:
    a = _DOT_UNIT(w)
    return RenderProgram((
        SetDashSolid(), SetCap(LineCap.ROUND),
        move_to(0.0, 0.0),
        line_to(0.75 * a, 0.0),
        *_hook_arc_ops(a, -1.0),
        Action.STROKE,
    ))


def _hooks_program(w: float) -> RenderProgram:
    a = _DOT_UNIT(w)
    return RenderProgram((
        SetDashSolid(), SetCap(LineCap.ROUND),
        move_to(0.0, 0.0),
        line_to(0.75 * a, 0.0),
        *_hook_arc_ops(a, 1.0),
        move_to(0.75 * a, 0.0),
        *_hook_arc_ops(a, -1.0),
        Action.STROKE,
    ))


# --- serif ---------------------------------------------------------------------

def _serif_extents(w: float) -> Extents:
    a = _SERIF_UNIT(w)
    return Extents(-0.75 * a, 0.04 * w)


def _serif_program(w: float) -> RenderProgram:
    a = _SERIF_UNIT(w)
    return RenderProgram((
        translate(wl(0.04)),
        move_to(-0.75 * a, wl(0.5)),
        curve_to(-0.375 * a, wl(0.5), -0.375 * a, wl(0.7), -0.375 * a, 1.95 * a),
        line_to(0.0, 1.95 * a),
        curve_to(wl(-0.04), 0.5 * a, wl(-0.04), -0.5 * a, 0.0, -1.95 * a),
        line_to(-0.375 * a, -1.95 * a),
        curve_to(-0.375 * a, wl(-0.7), -0.375 * a, wl(-0.5), -0.75 * a, wl(-0.5)),
        ClosePath(),
        Action.FILL,
    ))


# --- line caps ------------------------------------------------------------------

def _round_cap_extents(w: float) -> Extents:
    return Extents(0.0, w)


def _round_cap_program(w: float) -> RenderProgram:
    return RenderProgram((
        SetDashSolid(), SetCap(LineCap.ROUND),
        move_to(0.0, 0.0),
        line_to(wl(0.5), 0.0),
        Action.STROKE,
    ))


def _butt_cap_extents(w: float) -> Extents:
    return Extents(-0.1 * w, 0.5 * w)


def _butt_cap_program(w: float) -> RenderProgram:
    return RenderProgram((
        SetDashSolid(), SetCap(LineCap.BUTT),
        move_to(wl(-0.1), 0.0),
        line_to(wl(0.5), 0.0),
        Action.STROKE,
    ))


def _triangle_cap_extents(w: float) -> Extents:
    return Extents(-0.1 * w, w)


def _triangle_cap_program(w: float) -> RenderProgram:
    return RenderProgram((
        move_to(wl(-0.1), wl(0.5)),
        line_to(wl(0.5), wl(0.5)),
        line_to(wl(1.0), 0.0),
        line_to(wl(0.5), wl(-0.5)),
        line_to(wl(-0.1), wl(-0.5)),
        Action.FILL,
    ))


def _triangle_cap_reversed_program(w: float) -> RenderProgram:
    return RenderProgram((
        move_to(wl(1.0), wl(0.5)),
        line_to(wl(-0.1), wl(0.5)),
        line_to(wl(-0.1), wl(-0.5)),
        line_to(wl(1.0), wl(-0.5)),
        line_to(wl(0.5), 0.0),
        Action.FILL,
    ))


def _fast_cap_extents(w: float) -> Extents:
    return Extents(-0.1 * w, 2.0 * w)


def _fast_cap_program(w: float) -> RenderProgram:
    return RenderProgram((
        move_to(wl(-0.1), wl(0.5)),
        line_to(wl(0.5), wl(0.5)),
        line_to(wl(1.0), 0.0),
        line_to(wl(0.5), wl(-0.5)),
        line_to(wl(-0.1), wl(-0.5)),
        ClosePath(),
        move_to(wl(1.0), wl(0.5)),
        line_to(wl(1.5), wl(0.5)),
        line_to(wl(2.0), 0.0),
        line_to(wl(1.5), wl(-0.5)),
        line_to(wl(1.0), wl(-0.5)),
        line_to(wl(1.5), 0.0),
        ClosePath(),
        Action.FILL,
    ))


def _fast_cap_reversed_program(w: float) -> RenderProgram:
    return RenderProgram((
        move_to(wl(-0.1), wl(0.5)),
        line_to(wl(1.0), wl(0.5)),
        line_to(wl(0.5), 0.0),
        line_to(wl(1.0), wl(-0.5)),
        line_to(wl(-0.1), wl(-0.5)),
        ClosePath(),
        move_to(wl(1.5), wl(0.5)),
        line_to(wl(2.0), wl(0.5)),
        line_to(wl(1.5), 0.0),
        line_to(wl(2.0), wl(-0.5)),
        line_to(wl(1.5), wl(-0.5)),
        line_to(wl(1.0), 0.0),
        ClosePath(),
        Action.FILL,
    ))


# --- registry -------------------------------------------------------------------

_REGISTRY: list[TipDefinition] = []
_BY_START: dict[str, TipDefinition] = {}
_BY_END: dict[str, TipDefinition] = {}
_PARTNER: dict[str, str] = {}


def _declare(start: str, end: str, base_unit, extents_fn, program_fn) -> TipDefinition:
    definition = TipDefinition(start, end, base_unit, extents_fn, program_fn)
    _REGISTRY.append(definition)
    _BY_START[start] = definition
    _BY_END[end] = definition
    return definition


def _declare_reversed(start: str, end: str, original_start: str, original_end: str) -> TipDefinition:
    original = _BY_END[original_end]
    assert original.start_name == original_start

    def extents_fn(w: float, _orig=original) -> Extents:
        e = _orig.extents_fn(w)
        return Extents(-e.right, -e.left)

    def program_fn(w: float, _orig=original) -> RenderProgram:
        return mirror_x(_orig.program_fn(w))

    definition = _declare(start, end, original.base_unit, extents_fn, program_fn)
    _PARTNER[end] = original_end
    _PARTNER[original_end] = end
    return definition


_declare("[", "]", _BRACKET_UNIT, _bracket_extents, _bracket_program)
_declare_reversed("]", "[", "[", "]")
_declare("(", ")", _PAREN_UNIT, _paren_extents, _paren_program)
_declare_reversed(")", "(", "(", ")")
_declare("angle 90", "angle 90", _ANGLE_UNIT, _angle_90_extents, _angle_90_program)
_declare_reversed("angle 90 reversed", "angle 90 reversed", "angle 90", "angle 90")
_declare("angle 60", "angle 60", _ANGLE_UNIT, _angle_60_extents, _angle_60_program)
_declare_reversed("angle 60 reversed", "angle 60 reversed", "angle 60", "angle 60")
_declare("angle 45", "angle 45", _ANGLE_UNIT, _angle_45_extents, _angle_45_program)
_declare_reversed("angle 45 reversed", "angle 45 reversed", "angle 45", "angle 45")
_declare("*", "*", _DOT_UNIT, _filled_dot_extents, _filled_dot_program)
_declare("o", "o", _DOT_UNIT, _open_dot_extents, _open_dot_program)
_declare("diamond", "diamond", _DIAMOND_UNIT, _diamond_extents, _diamond_program)
_declare("open diamond", "open diamond", _DIAMOND_UNIT, _open_diamond_extents, _open_diamond_program)
_declare("triangle 90", "triangle 90", _TRIANGLE_UNIT, _triangle_90_extents, _triangle_90_program)
_declare_reversed("triangle 90 reversed", "triangle 90 reversed", "triangle 90", "triangle 90")
_declare("triangle 60", "triangle 60", _TRIANGLE_UNIT, _triangle_60_extents, _triangle_60_program)
_declare_reversed("triangle 60 reversed", "triangle 60 reversed", "triangle 60", "triangle 60")
_declare("triangle 45", "triangle 45", _TRIANGLE_UNIT, _triangle_45_extents, _triangle_45_program)
_declare_reversed("triangle 45 reversed", "triangle 45 reversed", "triangle 45", "triangle 45")
_declare("open triangle 90", "open triangle 90", _TRIANGLE_UNIT,
         _open_triangle_90_extents, _open_triangle_90_program)
_declare("open triangle 90 reversed", "open triangle 90 reversed", _TRIANGLE_UNIT,
         _open_triangle_90_reversed_extents, _open_triangle_90_reversed_program)
_declare("open triangle 60", "open triangle 60", _TRIANGLE_UNIT,
         _open_triangle_60_extents, _open_triangle_60_program)
_declare("open triangle 60 reversed", "open triangle 60 reversed", _TRIANGLE_UNIT,
         _open_triangle_60_reversed_extents, _open_triangle_60_reversed_program)
_declare("open triangle 45", "open triangle 45", _TRIANGLE_UNIT,
         _open_triangle_45_extents, _open_triangle_45_program)
_declare("open triangle 45 reversed", "open triangle 45 reversed", _TRIANGLE_UNIT,
         _open_triangle_45_reversed_extents, _open_triangle_45_reversed_program)
_declare("latex'", "latex'", _CURVE_UNIT, _latex_prime_extents, _latex_prime_program)
_declare_reversed("latex' reversed", "latex' reversed", "latex'", "latex'")
_declare("stealth'", "stealth'", _CURVE_UNIT, _stealth_prime_extents, _stealth_prime_program)
_declare_reversed("stealth' reversed", "stealth' reversed", "stealth'", "stealth'")
_declare("left to", "left to", _CURVE_UNIT, _to_extents, _left_to_program)
_declare("right to", "right to", _CURVE_UNIT, _to_extents, _right_to_program)
_declare("left to reversed", "left to reversed", _CURVE_UNIT,
         _to_reversed_extents, _left_to_reversed_program)
_declare("right to reversed", "right to reversed", _CURVE_UNIT,
         _to_reversed_extents, _right_to_reversed_program)
_declare("left hook", "left hook", _DOT_UNIT, _hook_extents, _left_hook_program)
_declare_reversed("left hook reversed", "left hook reversed", "left hook", "left hook")
_declare("right hook", "right hook", _DOT_UNIT, _hook_extents, _right_hook_program)
_declare_reversed("right hook reversed", "right hook reversed", "right hook", "right hook")
_declare("hooks", "hooks", _DOT_UNIT, _hook_extents, _hooks_program)
_declare_reversed("hooks reversed", "hooks reversed", "hooks", "hooks")
_declare("serif cm", "serif cm", _SERIF_UNIT, _serif_extents, _serif_program)
_declare("round cap", "round cap", None, _round_cap_extents, _round_cap_program)
_declare("butt cap", "butt cap", None, _butt_cap_extents, _butt_cap_program)
_declare("triangle 90 cap", "triangle 90 cap", None, _triangle_cap_extents, _triangle_cap_program)
_declare("triangle 90 cap reversed", "triangle 90 cap reversed", None,
         _triangle_cap_extents, _triangle_cap_reversed_program)
_declare("fast cap", "fast cap", None, _fast_cap_extents, _fast_cap_program)
_declare("fast cap reversed", "fast cap reversed", None,
         _fast_cap_extents, _fast_cap_reversed_program)


# --- public API -------------------------------------------------------------------

def registry() -> tuple[TipDefinition, ...]:
    """All catalog entries in declaration order."""
    return tuple(_REGISTRY)


def start_names() -> tuple[str, ...]:
    return tuple(d.start_name for d in _REGISTRY)


def end_names() -> tuple[str, ...]:
    return tuple(d.end_name for d in _REGISTRY)


def lookup(name: str, side: Side) -> TipId:
    table = _BY_START if side is Side.START else _BY_END
    definition = table.get(name)
    if definition is None:
        candidates = difflib.get_close_matches(name, table.keys(), n=3, cutoff=0.6)
        raise UnknownTipError(name, side, candidates)
    return TipId(definition, side)


def extents(tip: TipId, w: float) -> Extents:
    """Signed horizontal reach of ``tip`` at stroke width ``w``."""
    _check_width(w)
    return tip.definition.extents_fn(w)


def program(tip: TipId, w: float) -> RenderProgram:
    """Render program of ``tip`` at stroke width ``w``, front at the origin."""
    _check_width(w)
    return tip.definition.program_fn(w)


def reverse_tip(tip: TipId) -> TipId:
    """The declared mirror partner of ``tip``, same side.

    Only tips declared as mirrored pairs resolve; independently declared
    "X reversed" siblings do not satisfy the mirror laws and raise.
    """
    partner_end = _PARTNER.get(tip.definition.end_name)
    if partner_end is None:
        raise NoReversalError(tip.name)
    return TipId(_BY_END[partner_end], tip.side)


def declared_reversals() -> dict[str, str]:
    """End-name pairs linked by declared reversal, in both directions."""
    return dict(_PARTNER)


def dump_lines() -> list[str]:
    """Machine-readable extent table: affine coefficients per entry.

    Coefficients are recovered from two evaluations, so they match the
    formulas to rounding error only.
    """
    lines = ["# end name\tstart name\tl0\tl1\tr0\tr1"]
    for definition in _REGISTRY:
        e1 = definition.extents_fn(1.0)
        e2 = definition.extents_fn(2.0)
        l1 = e2.left - e1.left
        r1 = e2.right - e1.right
        l0 = e1.left - l1
        r0 = e1.right - r1
        lines.append(
            f"{definition.end_name}\t{definition.start_name}\t{l0!r}\t{l1!r}\t{r0!r}\t{r1!r}"
        )
    return lines
