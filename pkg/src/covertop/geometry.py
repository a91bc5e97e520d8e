"""Planar geometric primitives: distances, small enclosing balls, annulus tests.

All predicates compare squared distances against squared thresholds so that
no square root enters a comparison. Boundary ties count as inside/connected
(<=) everywhere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Sequence


@dataclass(frozen=True)
class Point2:
    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError(f"non-finite coordinates: ({self.x}, {self.y})")


@dataclass(frozen=True)
class Ball2:
    center: Point2
    radius: float

    def __post_init__(self):
        if not (math.isfinite(self.radius) and self.radius >= 0):
            raise ValueError(f"invalid radius: {self.radius}")

    def contains(self, p: Point2, slack: float = 0.0) -> bool:
        return dist_sq(self.center, p) <= (self.radius + slack) ** 2


class RegionClass(Enum):
    INSIDE = "inside"
    ANNULUS = "annulus"
    OUTSIDE = "outside"


def dist_sq(a: Point2, b: Point2) -> float:
    dx = a.x - b.x
    dy = a.y - b.y
    return dx * dx + dy * dy


def distance(a: Point2, b: Point2) -> float:
    return math.hypot(a.x - b.x, a.y - b.y)


def _circumcircle(a: Point2, b: Point2, c: Point2) -> Ball2 | None:
    """Circumscribed ball of a non-degenerate triangle, or None if collinear."""
    d = 2.0 * (a.x * (b.y - c.y) + b.x * (c.y - a.y) + c.x * (a.y - b.y))
    if d == 0.0:
        return None
    a2 = a.x * a.x + a.y * a.y
    b2 = b.x * b.x + b.y * b.y
    c2 = c.x * c.x + c.y * c.y
    ux = (a2 * (b.y - c.y) + b2 * (c.y - a.y) + c2 * (a.y - b.y)) / d
    uy = (a2 * (c.x - b.x) + b2 * (a.x - c.x) + c2 * (b.x - a.x)) / d
    center = Point2(ux, uy)
    r = max(distance(center, a), distance(center, b), distance(center, c))
    return Ball2(center, r)


def _diametral(a: Point2, b: Point2) -> Ball2:
    center = Point2((a.x + b.x) / 2.0, (a.y + b.y) / 2.0)
    return Ball2(center, distance(a, b) / 2.0)


def min_enclosing_ball(points: Sequence[Point2]) -> Ball2:
    """Smallest ball containing 1 to 3 points.

    For three points: the diametral ball of the longest side when the
    triangle is obtuse, right or degenerate; the circumscribed ball when
    acute. The obtuse test is exact on squared side lengths.
    """
    if len(points) == 0:
        raise ValueError("min_enclosing_ball requires 1 to 3 points")
    if len(points) == 1:
        return Ball2(points[0], 0.0)
    if len(points) == 2:
        return _diametral(points[0], points[1])
    if len(points) > 3:
        raise ValueError("min_enclosing_ball supports at most 3 points")

    a, b, c = points
    dab = dist_sq(a, b)
    dbc = dist_sq(b, c)
    dca = dist_sq(c, a)
    longest = max(dab, dbc, dca)
    if longest >= dab + dbc + dca - longest:
        # obtuse, right, or degenerate: diametral ball of the farthest pair
        if longest == dab:
            return _diametral(a, b)
        if longest == dbc:
            return _diametral(b, c)
        return _diametral(c, a)
    ball = _circumcircle(a, b, c)
    if ball is None:  # collinear fallthrough; longest-side ball covers all
        if longest == dab:
            return _diametral(a, b)
        if longest == dbc:
            return _diametral(b, c)
        return _diametral(c, a)
    return ball


def min_enclosing_radius_sq_leq(a: Point2, b: Point2, c: Point2, r: float) -> bool:
    """True iff the smallest ball around {a, b, c} has radius <= r."""
    ball = min_enclosing_ball([a, b, c])
    return ball.radius * ball.radius <= r * r


def annulus_class(anchor: Point2, query: Point2, r_c: float, eps: float) -> RegionClass:
    """Classify a query point against a node's annulus of uncertainty.

    INSIDE forces coverage probability 1, OUTSIDE forces 0, ANNULUS means
    the indecisive locations must be enumerated.
    """
    if r_c <= 0:
        raise ValueError(f"r_c must be positive, got {r_c}")
    if eps < 0 or eps > r_c:
        raise ValueError(f"eps must satisfy 0 <= eps <= r_c, got eps={eps}, r_c={r_c}")
    d2 = dist_sq(anchor, query)
    inner = r_c - eps
    if d2 <= inner * inner:
        return RegionClass.INSIDE
    outer = r_c + eps
    if d2 > outer * outer:
        return RegionClass.OUTSIDE
    return RegionClass.ANNULUS
