"""Shared exact-arithmetic model: bit vectors, rational points, curves.

Everything downstream (solvers, embeddings, proximity structures) compares
squared distances, never square roots, so all geometry here is carried out
in exact rational arithmetic.  ``Rat`` is the single number type; it is the
standard-library ``fractions.Fraction``, which already guarantees lowest
terms and a positive denominator.

Conventions
-----------
* Bit vectors are tuples of 0/1 ints, all of one instance sharing length d.
* Points are tuples of ``Rat``; planar curves are non-empty tuples of
  2-d points.
* All containers are immutable, so every type here is safe to share
  between threads.
* Indices are 0-based throughout the API.  Command-line output and the
  on-disk formats describe positions 1-based; the boundary code translates.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as Rat

__all__ = [
    "Rat",
    "SqDist",
    "BitVector",
    "PointD",
    "Point2",
    "Curve2",
    "OvInstance",
    "ov_instance",
    "bit_vector",
    "point",
    "curve",
    "inner_product",
    "squared_euclidean",
    "sq_dist",
    "as_integer_grid",
]

# Type aliases.  SqDist marks values that are squared distances (>= 0 by
# construction); it is not a distinct runtime type.
SqDist = Rat
BitVector = tuple[int, ...]
PointD = tuple[Rat, ...]
Point2 = tuple[Rat, Rat]
Curve2 = tuple[Point2, ...]


def bit_vector(bits) -> BitVector:
    """Validate and freeze a 0/1 sequence of length >= 1."""
    vec = tuple(bits)
    if not vec:
        raise ValueError("bit vector must have length >= 1")
    for b in vec:
        if b not in (0, 1):
            raise ValueError(f"bit vector entries must be 0 or 1, got {b!r}")
    return vec


def point(coords) -> PointD:
    """Freeze a coordinate sequence into a point of exact rationals."""
    pt = tuple(Rat(c) for c in coords)
    if not pt:
        raise ValueError("point must have dimension >= 1")
    return pt


def curve(points) -> Curve2:
    """Freeze a sequence of planar points into a curve (length >= 1)."""
    vertices = tuple(point(p) for p in points)
    if not vertices:
        raise ValueError("curve must have at least one vertex")
    for v in vertices:
        if len(v) != 2:
            raise ValueError("curve vertices must be 2-dimensional")
    return vertices


def sq_dist(value) -> SqDist:
    """Coerce to an exact nonnegative rational (used at parse boundaries)."""
    r = Rat(value)
    if r < 0:
        raise ValueError(f"squared distance must be >= 0, got {r}")
    return r


@dataclass(frozen=True)
class OvInstance:
    """Two families of bit vectors over a common dimension.

    The existential question asked of an instance is always the same:
    is there a pair (a, b) in A x B with inner product zero?
    """

    a_side: tuple[BitVector, ...]
    b_side: tuple[BitVector, ...]
    d: int

    def __post_init__(self):
        if not self.a_side or not self.b_side:
            raise ValueError("both vector families must be non-empty")
        if self.d < 1:
            raise ValueError("dimension must be >= 1")
        for fam in (self.a_side, self.b_side):
            for vec in fam:
                if len(vec) != self.d:
                    raise ValueError(
                        f"vector length {len(vec)} != instance dimension {self.d}"
                    )
                for b in vec:
                    if b not in (0, 1):
                        raise ValueError("vector entries must be 0 or 1")

    @property
    def n_a(self) -> int:
        return len(self.a_side)

    @property
    def n_b(self) -> int:
        return len(self.b_side)


def ov_instance(a_side, b_side) -> OvInstance:
    """Build an instance from raw bit sequences, inferring the dimension."""
    a = tuple(bit_vector(v) for v in a_side)
    if not a:
        raise ValueError("A side must be non-empty")
    return OvInstance(a, tuple(bit_vector(v) for v in b_side), len(a[0]))


def inner_product(a: BitVector, b: BitVector) -> int:
    """Number of coordinates where both vectors are 1."""
    if len(a) != len(b):
        raise ValueError(f"length mismatch: {len(a)} vs {len(b)}")
    return sum(x * y for x, y in zip(a, b))


def squared_euclidean(p: PointD, q: PointD) -> SqDist:
    """Exact squared Euclidean distance between equal-dimension points."""
    if len(p) != len(q):
        raise ValueError(f"dimension mismatch: {len(p)} vs {len(q)}")
    total = Rat(0)
    for x, y in zip(p, q):
        diff = x - y
        total += diff * diff
    return total


def as_integer_grid(curves: list[Curve2]) -> tuple[list[list[tuple[int, int]]], int]:
    """Rescale rational curves onto a common integer grid.

    Returns integer vertex lists plus the scale factor L such that original
    coordinate = int coordinate / L.  Squared distances on the grid are the
    original squared distances times L**2, exactly.  This keeps the dynamic
    programs on machine ints without leaving exact arithmetic.
    """
    from math import lcm

    denom = 1
    for c in curves:
        for x, y in c:
            denom = lcm(denom, x.denominator, y.denominator)
    scaled = [
        [(int(x * denom), int(y * denom)) for x, y in c]
        for c in curves
    ]
    return scaled, denom
