"""Planar points and headings shared by the rest of the package.

Angles are radians in (-pi, pi], measured counter-clockwise from +x, in a
fixed global frame. Degrees only appear at the command-line boundary.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

#: Points closer than this (meters) are treated as coincident.
COINCIDENCE_TOL = 1e-12


class DegenerateGeometryError(ValueError):
    """Raised when an angle is requested between coincident points."""


@dataclass(frozen=True)
class Point2:
    """Position in the plane, meters."""

    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError(f"non-finite point ({self.x}, {self.y})")

    def __iter__(self):
        yield self.x
        yield self.y

    def __add__(self, other: Point2) -> Point2:
        return Point2(self.x + other.x, self.y + other.y)

    def __sub__(self, other: Point2) -> Point2:
        return Point2(self.x - other.x, self.y - other.y)

    def __mul__(self, k: float) -> Point2:
        return Point2(self.x * k, self.y * k)

    __rmul__ = __mul__

    def norm(self) -> float:
        return math.hypot(self.x, self.y)

    @classmethod
    def of(cls, value) -> Point2:
        """Coerce a Point2 or any two-element sequence."""
        if isinstance(value, Point2):
            return value
        x, y = value
        return cls(float(x), float(y))


def wrap_angle(angle: float) -> float:
    """Map any angle to (-pi, pi]."""
    wrapped = math.remainder(angle, 2.0 * math.pi)
    if wrapped <= -math.pi:
        wrapped += 2.0 * math.pi
    return wrapped


def angle_diff(a: float, b: float) -> float:
    """Wrapped difference a - b, with magnitude at most pi."""
    return wrap_angle(a - b)


def distance(a: Point2, b: Point2) -> float:
    return math.hypot(b.x - a.x, b.y - a.y)


def los_angle(start: Point2, end: Point2) -> float:
    """Line-of-sight angle of the vector ``end - start``.

    Raises DegenerateGeometryError if the points coincide.
    """
    dx, dy = end.x - start.x, end.y - start.y
    if math.hypot(dx, dy) < COINCIDENCE_TOL:
        raise DegenerateGeometryError(f"no line of sight between coincident points {start}")
    return wrap_angle(math.atan2(dy, dx))


def unit(heading: float) -> Point2:
    return Point2(math.cos(heading), math.sin(heading))


def point_along(origin: Point2, heading: float, dist: float) -> Point2:
    """Point reached from ``origin`` after moving ``dist`` along ``heading``."""
    if dist < 0:
        raise ValueError(f"distance must be non-negative, got {dist}")
    return Point2(origin.x + dist * math.cos(heading), origin.y + dist * math.sin(heading))
