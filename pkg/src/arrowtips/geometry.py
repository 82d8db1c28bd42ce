"""Points and affine maps in a y-up plane measured in pt.

Angles are degrees everywhere; conversion to radians happens only inside
``polar`` and ``rotation``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


@dataclass(frozen=True)
class Point:
    """A position or direction vector with finite components."""

    x: float
    y: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError(f"point components must be finite, got ({self.x}, {self.y})")

    def __iter__(self):
        return iter((self.x, self.y))


ORIGIN = Point(0.0, 0.0)


def add(p: Point, q: Point) -> Point:
    return Point(p.x + q.x, p.y + q.y)


def sub(p: Point, q: Point) -> Point:
    return Point(p.x - q.x, p.y - q.y)


def scale(p: Point, factor: float) -> Point:
    return Point(p.x * factor, p.y * factor)


def norm(p: Point) -> float:
    return math.hypot(p.x, p.y)


def polar(angle: float, radius: float) -> Point:
    """Point at distance ``radius`` from the origin in direction ``angle`` (degrees)."""
    if radius < 0:
        raise ValueError(f"polar radius must be nonnegative, got {radius}")
    rad = math.radians(angle)
    return Point(radius * math.cos(rad), radius * math.sin(rad))


@dataclass(frozen=True)
class AffineTransform:
    """Affine map (x, y) -> (a*x + c*y + tx, b*x + d*y + ty)."""

    a: float
    b: float
    c: float
    d: float
    tx: float
    ty: float


IDENTITY = AffineTransform(1.0, 0.0, 0.0, 1.0, 0.0, 0.0)
MIRROR_X = AffineTransform(-1.0, 0.0, 0.0, 1.0, 0.0, 0.0)
MIRROR_Y = AffineTransform(1.0, 0.0, 0.0, -1.0, 0.0, 0.0)


def translation(tx: float, ty: float = 0.0) -> AffineTransform:
    return AffineTransform(1.0, 0.0, 0.0, 1.0, tx, ty)


def xshift(dx: float) -> AffineTransform:
    return translation(dx, 0.0)


def rotation(angle: float) -> AffineTransform:
    """Counterclockwise rotation about the origin by ``angle`` degrees."""
    rad = math.radians(angle)
    c, s = math.cos(rad), math.sin(rad)
    return AffineTransform(c, s, -s, c, 0.0, 0.0)


def rotation_to(direction: Point) -> AffineTransform:
    """Rotation taking the +x axis onto a unit ``direction``.

    Built directly from the vector components, so axis-aligned directions give
    exact matrices with no trigonometry involved.
    """
    return AffineTransform(direction.x, direction.y, -direction.y, direction.x, 0.0, 0.0)


def compose(outer: AffineTransform, inner: AffineTransform) -> AffineTransform:
    """``outer`` after ``inner``: apply(compose(outer, inner), p) == apply(outer, apply(inner, p))."""
    return AffineTransform(
        outer.a * inner.a + outer.c * inner.b,
        outer.b * inner.a + outer.d * inner.b,
        outer.a * inner.c + outer.c * inner.d,
        outer.b * inner.c + outer.d * inner.d,
        outer.a * inner.tx + outer.c * inner.ty + outer.tx,
        outer.b * inner.tx + outer.d * inner.ty + outer.ty,
    )


def apply(t: AffineTransform, p: Point) -> Point:
    return Point(t.a * p.x + t.c * p.y + t.tx, t.b * p.x + t.d * p.y + t.ty)
