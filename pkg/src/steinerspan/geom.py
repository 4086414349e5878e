"""Planar geometric primitives: points, segments, directions, projections.

Directions live in the half-open space [0, pi); the distance between two
directions is the cyclic distance min(|t1-t2|, pi-|t1-t2|), which is a metric
with maximum pi/2. Angle membership tests carry a documented tolerance of
1e-12 for boundary cases.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

ANGLE_TOL = 1e-12


@dataclass(frozen=True)
class Point:
    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError(f"non-finite coordinates: ({self.x}, {self.y})")

    def dist(self, other: "Point") -> float:
        return math.hypot(self.x - other.x, self.y - other.y)


@dataclass(frozen=True)
class Segment:
    p: Point
    q: Point

    @property
    def length(self) -> float:
        return self.p.dist(self.q)

    @property
    def is_degenerate(self) -> bool:
        return self.p.x == self.q.x and self.p.y == self.q.y


@dataclass(frozen=True)
class DirectionInterval:
    """Half-open interval [lo, hi) of directions, wrap-around allowed."""

    lo: float
    hi: float

    def __post_init__(self):
        if not (0.0 <= self.lo < math.pi and 0.0 <= self.hi < math.pi):
            raise ValueError("interval bounds must lie in [0, pi)")

    @property
    def width(self) -> float:
        w = self.hi - self.lo
        return w if w >= 0 else w + math.pi

    def contains(self, theta: float, tol: float = 0.0) -> bool:
        """Membership of a direction, optionally padded by tol on both ends."""
        if self.width + 2 * tol >= math.pi:
            return True
        theta = normalize_direction(theta)
        d = math.fmod(theta - (self.lo - tol), math.pi)
        if d < 0:
            d += math.pi
        return d < self.width + 2 * tol


def normalize_direction(theta: float) -> float:
    """Reduce an angle to the direction space [0, pi)."""
    theta = math.fmod(theta, math.pi)
    if theta < 0:
        theta += math.pi
    if theta >= math.pi:  # fmod rounding can land exactly on pi
        theta -= math.pi
    return theta


def direction_of(s: Segment) -> float:
    """Direction in [0, pi) of the supporting line; endpoint-order invariant."""
    if s.is_degenerate:
        raise ValueError("undefined direction: degenerate segment")
    theta = math.atan2(s.q.y - s.p.y, s.q.x - s.p.x)
    if theta < 0:
        theta += math.pi
    if theta >= math.pi:
        theta -= math.pi
    return theta


def direction_distance(t1: float, t2: float) -> float:
    """Cyclic distance between directions, in [0, pi/2]."""
    d = abs(t1 - t2)
    return min(d, math.pi - d)


def edge_angle(e1: Segment, e2: Segment) -> float:
    """Undirected angle between two edges, arccos|u1.u2|, in [0, pi/2]."""
    v1x, v1y = e1.q.x - e1.p.x, e1.q.y - e1.p.y
    v2x, v2y = e2.q.x - e2.p.x, e2.q.y - e2.p.y
    n1 = math.hypot(v1x, v1y)
    n2 = math.hypot(v2x, v2y)
    if n1 == 0 or n2 == 0:
        raise ValueError("undefined angle: degenerate edge")
    c = abs(v1x * v2x + v1y * v2y) / (n1 * n2)
    return math.acos(min(1.0, c))


def projected_length(e: Segment, ab: Segment) -> float:
    """Length of the orthogonal projection of e onto the line of ab.

    Equals len(e) * cos(angle(ab, e)) with the undirected-edge angle; a
    degenerate e projects to 0.
    """
    if ab.is_degenerate:
        raise ValueError("projection onto degenerate segment")
    ux, uy = ab.q.x - ab.p.x, ab.q.y - ab.p.y
    n = math.hypot(ux, uy)
    vx, vy = e.q.x - e.p.x, e.q.y - e.p.y
    return abs(vx * ux + vy * uy) / n


def in_detour_ellipse(a: Point, b: Point, eps: float, c: Point) -> bool:
    """True iff |ac| + |cb| <= (1+eps)|ab| (c inside the detour ellipse)."""
    if a.x == b.x and a.y == b.y:
        raise ValueError("detour ellipse undefined for coincident foci")
    if eps <= 0:
        raise ValueError("eps must be positive")
    return a.dist(c) + c.dist(b) <= (1.0 + eps) * a.dist(b)


def rotate(points: list[Point], theta: float, center: Point) -> list[Point]:
    """Rigid rotation of points by theta about center."""
    if not math.isfinite(theta):
        raise ValueError("non-finite rotation angle")
    ct, st = math.cos(theta), math.sin(theta)
    cx, cy = center.x, center.y
    out = []
    for p in points:
        dx, dy = p.x - cx, p.y - cy
        out.append(Point(cx + ct * dx - st * dy, cy + st * dx + ct * dy))
    return out


def rotate_xy(xs, ys, theta: float, cx: float, cy: float):
    """Array variant of rotate for (xs, ys) sequences; returns two lists."""
    ct, st = math.cos(theta), math.sin(theta)
    rx = [cx + ct * (x - cx) - st * (y - cy) for x, y in zip(xs, ys)]
    ry = [cy + st * (x - cx) + ct * (y - cy) for x, y in zip(xs, ys)]
    return rx, ry
