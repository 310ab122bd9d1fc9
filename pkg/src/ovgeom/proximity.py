"""Bichromatic closest pair and exact nearest-neighbor structures.

Everything here is exact: the kd-tree prunes with rational arithmetic
against the squared best radius, so its answers (distance *and* index)
are bit-identical to a linear scan.  Ties are broken toward the smallest
0-based index, and toward the lexicographically smallest (index_p,
index_q) pair for closest-pair scans.

Curve collections use the discrete Fréchet distance via linear scan only;
there is no spatial index for curves.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Curve2, PointD, Rat, SqDist, curve, point, squared_euclidean
from .frechet import frechet_sq_value

__all__ = [
    "BcpResult",
    "NnIndex",
    "LinearScanIndex",
    "KdTreeIndex",
    "bcp_euclid",
    "bcp_frechet",
    "nn_build",
    "nn_query",
    "NN_METRICS",
]

NN_METRICS = ("euclid-linear", "euclid-kdtree", "frechet-linear")


@dataclass(frozen=True)
class BcpResult:
    """Closest bichromatic pair: 0-based indices plus squared distance."""

    index_p: int
    index_q: int
    sq_value: SqDist


def bcp_euclid(points_p, points_q) -> BcpResult:
    """Exact pairwise scan over two point families."""
    p_side = [point(p) for p in points_p]
    q_side = [point(q) for q in points_q]
    if not p_side or not q_side:
        raise ValueError("both point families must be non-empty")
    dim = len(p_side[0])
    for pt in p_side + q_side:
        if len(pt) != dim:
            raise ValueError("all points must share one dimension")
    best: tuple[SqDist, int, int] | None = None
    for i, p in enumerate(p_side):
        for j, q in enumerate(q_side):
            d = squared_euclidean(p, q)
            if best is None or (d, i, j) < best:
                best = (d, i, j)
    return BcpResult(best[1], best[2], best[0])


def bcp_frechet(curves_p, curves_q) -> BcpResult:
    """Exact pairwise scan over two curve families (squared Fréchet)."""
    p_side = [curve(c) for c in curves_p]
    q_side = [curve(c) for c in curves_q]
    if not p_side or not q_side:
        raise ValueError("both curve families must be non-empty")
    best: tuple[SqDist, int, int] | None = None
    for i, p in enumerate(p_side):
        for j, q in enumerate(q_side):
            d = frechet_sq_value(p, q)
            if best is None or (d, i, j) < best:
                best = (d, i, j)
    return BcpResult(best[1], best[2], best[0])


class LinearScanIndex:
    """Baseline index: store everything, scan on query."""

    def __init__(self, items, metric, dim: int | None):
        self.items = items
        self.metric = metric
        self.dim = dim

    def query(self, q) -> tuple[int, SqDist]:
        best_i, best_d = 0, self.metric(self.items[0], q)
        for i in range(1, len(self.items)):
            d = self.metric(self.items[i], q)
            if d < best_d:
                best_i, best_d = i, d
        return best_i, best_d


class _KdNode:
    __slots__ = ("axis", "split", "left", "right", "bucket")

    def __init__(self, axis=None, split=None, left=None, right=None, bucket=None):
        self.axis = axis
        self.split = split
        self.left = left
        self.right = right
        self.bucket = bucket


_LEAF_SIZE = 8


class KdTreeIndex:
    """Exact kd-tree over rational points.

    Splitting axis cycles with depth; the split value is the lower median
    coordinate and points on the splitting plane go left.  Queries prune a
    subtree only when the squared distance to its separating plane
    strictly exceeds the current best squared radius, so results
    (including smallest-index tie-breaking) match a linear scan exactly.
    """

    def __init__(self, points: list[PointD], dim: int):
        self.points = points
        self.dim = dim
        self.root = self._build(list(range(len(points))), 0)

    def _build(self, idxs: list[int], depth: int) -> _KdNode:
        if len(idxs) <= _LEAF_SIZE:
            return _KdNode(bucket=sorted(idxs))
        axis = depth % self.dim
        coords = sorted(self.points[i][axis] for i in idxs)
        split = coords[(len(coords) - 1) // 2]  # lower median
        left = [i for i in idxs if self.points[i][axis] <= split]
        right = [i for i in idxs if self.points[i][axis] > split]
        if not right:  # all coordinates on this axis coincide with the median
            return _KdNode(bucket=sorted(idxs))
        return _KdNode(
            axis=axis,
            split=split,
            left=self._build(left, depth + 1),
            right=self._build(right, depth + 1),
        )

    def query(self, q: PointD) -> tuple[int, SqDist]:
        best: list = [None, None]  # best[0] = sq dist, best[1] = index

        def scan_bucket(node):
            for i in node.bucket:
                d = squared_euclidean(self.points[i], q)
                if best[0] is None or (d, i) < (best[0], best[1]):
                    best[0], best[1] = d, i

        def visit(node):
            if node.bucket is not None:
                scan_bucket(node)
                return
            gap = q[node.axis] - node.split
            near, far = (node.left, node.right) if gap <= 0 else (node.right, node.left)
            visit(near)
            if best[0] is None or gap * gap <= best[0]:
                visit(far)

        visit(self.root)
        return best[1], best[0]


NnIndex = LinearScanIndex | KdTreeIndex


def nn_build(items, metric: str) -> NnIndex:
    """Build a nearest-neighbor structure over points or curves.

    metric: 'euclid-linear' | 'euclid-kdtree' (point collections) or
    'frechet-linear' (curve collections).
    """
    if metric not in NN_METRICS:
        raise ValueError(f"unknown metric {metric!r}, expected one of {NN_METRICS}")
    items = list(items)
    if not items:
        raise ValueError("cannot build an index over an empty collection")
    if metric == "frechet-linear":
        try:
            curves = [curve(c) for c in items]
        except TypeError as exc:
            raise ValueError(f"metric {metric!r} indexes curves, not points") from exc
        return LinearScanIndex(curves, frechet_sq_value, dim=None)
    try:
        pts = [point(p) for p in items]
    except TypeError as exc:
        raise ValueError(f"metric {metric!r} indexes points, not curves") from exc
    dim = len(pts[0])
    for p in pts:
        if len(p) != dim:
            raise ValueError("all indexed points must share one dimension")
    if metric == "euclid-linear":
        return LinearScanIndex(pts, squared_euclidean, dim=dim)
    return KdTreeIndex(pts, dim)


def nn_query(index: NnIndex, q) -> tuple[int, SqDist]:
    """Smallest-index exact nearest neighbor of q: (position, squared dist)."""
    try:
        if index.dim is None:
            q = curve(q)
        else:
            q = point(q)
    except TypeError as exc:
        kind = "a curve" if index.dim is None else "a point"
        raise ValueError(f"this index expects {kind} query") from exc
    if index.dim is not None and len(q) != index.dim:
        raise ValueError(f"query dimension {len(q)} != index dimension {index.dim}")
    return index.query(q)
