"""Euclidean and rectilinear minimum spanning trees, bounding boxes.

Exact O(n^2) Prim construction, deterministic tie-breaking by (weight,
smaller index pair) so downstream artifacts are byte-reproducible. The
rectilinear tree is realized with every edge drawn as an L-shape, horizontal
piece first, corner at (x_target, y_source).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .geom import Point, Segment


@dataclass(frozen=True)
class Rect:
    xmin: float
    xmax: float
    ymin: float
    ymax: float

    def __post_init__(self):
        if self.xmin > self.xmax or self.ymin > self.ymax:
            raise ValueError("inverted rectangle")

    @property
    def width(self) -> float:
        return self.xmax - self.xmin

    @property
    def height(self) -> float:
        return self.ymax - self.ymin

    @property
    def aratio(self) -> float:
        if self.height == 0:
            raise ValueError("aspect ratio undefined for zero height")
        return self.width / self.height

    @property
    def per(self) -> float:
        return 2.0 * (self.width + self.height)

    @property
    def area(self) -> float:
        return self.width * self.height

    @property
    def is_degenerate(self) -> bool:
        return self.width == 0.0 or self.height == 0.0

    def contains(self, x: float, y: float, tol: float = 0.0) -> bool:
        return (self.xmin - tol <= x <= self.xmax + tol
                and self.ymin - tol <= y <= self.ymax + tol)


@dataclass
class RealizedTree:
    """L1 spanning tree with every edge realized as an axis-parallel L-shape."""

    edges: list[tuple[Point, Point]]
    segments: list[Segment]
    weight: float


def _prim(xs: np.ndarray, ys: np.ndarray, metric: str) -> tuple[list[tuple[int, int]], float]:
    """Exact Prim MST over all pairs; ties broken by smaller index pair."""
    n = len(xs)
    if n == 0:
        raise ValueError("MST of empty point set")
    if n == 1:
        return [], 0.0
    in_tree = np.zeros(n, dtype=bool)
    best = np.full(n, np.inf)
    parent = np.full(n, -1, dtype=np.int64)
    in_tree[0] = True
    best[0] = 0.0

    def dists_from(i):
        dx = xs - xs[i]
        dy = ys - ys[i]
        if metric == "l2":
            return np.hypot(dx, dy)
        return np.abs(dx) + np.abs(dy)

    d0 = dists_from(0)
    upd = d0 < best
    best[upd] = d0[upd]
    parent[upd] = 0
    parent[0] = -1

    edges: list[tuple[int, int]] = []
    total = 0.0
    for _ in range(n - 1):
        cand = np.where(~in_tree, best, np.inf)
        j = int(np.argmin(cand))  # argmin returns the first (smallest index) tie
        in_tree[j] = True
        total += float(best[j])
        pi = int(parent[j])
        edges.append((min(pi, j), max(pi, j)))
        dj = dists_from(j)
        # strict improvement only, so earlier (smaller-index) parents win ties
        upd = (~in_tree) & (dj < best)
        best[upd] = dj[upd]
        parent[upd] = j
    return edges, total


def emst(points: list[Point]) -> tuple[list[tuple[int, int]], float]:
    """Exact Euclidean MST; returns (edge index pairs, total weight)."""
    if not points:
        raise ValueError("MST of empty point set")
    xs = np.array([p.x for p in points], dtype=float)
    ys = np.array([p.y for p in points], dtype=float)
    return _prim(xs, ys, "l2")


def rmst_lshape(points: list[Point]) -> RealizedTree:
    """L1 MST with each edge drawn horizontal-then-vertical.

    The corner sits at (x_target, y_source) with the lexicographically
    smaller endpoint as source, so face extraction downstream is
    deterministic. Realized weight equals the L1 tree weight and is at most
    sqrt(2) times the Euclidean MST weight.
    """
    if not points:
        raise ValueError("MST of empty point set")
    xs = np.array([p.x for p in points], dtype=float)
    ys = np.array([p.y for p in points], dtype=float)
    idx_edges, total = _prim(xs, ys, "l1")
    edges = []
    segments = []
    for i, j in idx_edges:
        p, q = points[i], points[j]
        if (q.x, q.y) < (p.x, p.y):
            p, q = q, p
        edges.append((p, q))
        corner = Point(q.x, p.y)
        if corner != p:
            segments.append(Segment(p, corner))
        if corner != q:
            segments.append(Segment(corner, q))
    return RealizedTree(edges=edges, segments=segments, weight=total)


def bbox(points: list[Point]) -> Rect:
    """Minimal axis-aligned bounding rectangle (degenerate allowed)."""
    if not points:
        raise ValueError("bounding box of empty point set")
    xs = [p.x for p in points]
    ys = [p.y for p in points]
    return Rect(min(xs), max(xs), min(ys), max(ys))
