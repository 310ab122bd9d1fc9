"""Brute-force orthogonal-pair solvers and the unbalanced block plan.

The quadratic pair scan is the reference oracle for every reduction in this
package, so it is kept deliberately simple: enumerate pairs in index order,
report the first orthogonal one.  Vectors are packed into int bitmasks so
the scan stays usable at benchmark sizes; orthogonality of a pair is then
``mask_a & mask_b == 0``, which is the same predicate as a zero inner
product.

``plan_unbalanced`` splits the B side into consecutive blocks of size
ceil(n**alpha) so that one lopsided scan per block answers the balanced
question.  The block size is computed by integer root extraction; no
floating point is involved anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as Rat

from .core import BitVector, OvInstance

__all__ = [
    "OvWitness",
    "UnbalancedPlan",
    "ov_decide",
    "ov_count",
    "plan_unbalanced",
    "ov_decide_blocked",
    "nth_root_ceil",
]


@dataclass(frozen=True)
class OvWitness:
    """0-based indices of an orthogonal pair (a_side, b_side)."""

    index_a: int
    index_b: int


def _masks(vectors: tuple[BitVector, ...]) -> list[int]:
    out = []
    for vec in vectors:
        m = 0
        for i, bit in enumerate(vec):
            if bit:
                m |= 1 << i
        out.append(m)
    return out


def ov_decide(inst: OvInstance) -> OvWitness | None:
    """Return the lexicographically smallest orthogonal pair, or None."""
    masks_b = _masks(inst.b_side)
    for ia, vec_a in enumerate(inst.a_side):
        mask_a = 0
        for i, bit in enumerate(vec_a):
            if bit:
                mask_a |= 1 << i
        for ib, mask_b in enumerate(masks_b):
            if mask_a & mask_b == 0:
                return OvWitness(ia, ib)
    return None


def ov_count(inst: OvInstance) -> int:
    """Exact number of orthogonal pairs (used to cross-check generators)."""
    masks_a = _masks(inst.a_side)
    masks_b = _masks(inst.b_side)
    return sum(
        1 for ma in masks_a for mb in masks_b if ma & mb == 0
    )


def nth_root_ceil(x: int, q: int) -> int:
    """Smallest integer r >= 0 with r**q >= x, by integer bisection."""
    if x < 0 or q < 1:
        raise ValueError("need x >= 0 and q >= 1")
    if x <= 1:
        return x
    lo, hi = 1, 1 << ((x.bit_length() + q - 1) // q)
    while hi ** q < x:
        hi <<= 1
    while lo < hi:
        mid = (lo + hi) // 2
        if mid ** q >= x:
            hi = mid
        else:
            lo = mid + 1
    return lo


@dataclass(frozen=True)
class UnbalancedPlan:
    """Partition of the B-side index range into consecutive blocks.

    Blocks are half-open index ranges (start, stop), each of size at most
    ``block_size``; only the last block may be smaller.
    """

    alpha: Rat
    block_size: int
    blocks: tuple[tuple[int, int], ...]


def plan_unbalanced(n: int, alpha: Rat) -> UnbalancedPlan:
    """Split n B-indices into ceil(n / ceil(n**alpha)) consecutive blocks."""
    if n < 1:
        raise ValueError("n must be >= 1")
    alpha = Rat(alpha)
    if not 0 < alpha < 1:
        raise ValueError(f"alpha must be strictly between 0 and 1, got {alpha}")
    block_size = nth_root_ceil(n ** alpha.numerator, alpha.denominator)
    blocks = tuple(
        (start, min(start + block_size, n)) for start in range(0, n, block_size)
    )
    return UnbalancedPlan(alpha, block_size, blocks)


def _check_plan(plan: UnbalancedPlan, n: int) -> None:
    expected_start = 0
    for start, stop in plan.blocks:
        if start != expected_start or stop <= start:
            raise ValueError("plan blocks must be consecutive and non-empty")
        if stop - start > plan.block_size:
            raise ValueError("plan block exceeds block_size")
        expected_start = stop
    if expected_start != n:
        raise ValueError(f"plan covers {expected_start} indices, instance has {n}")


def ov_decide_blocked(inst: OvInstance, plan: UnbalancedPlan) -> OvWitness | None:
    """Decide orthogonality block by block, matching ov_decide exactly.

    Each block is solved independently (A against one B-slice), so the
    per-block results can be computed in any order or concurrently; the
    final answer is the lexicographic minimum over blocks and does not
    depend on evaluation order.
    """
    _check_plan(plan, inst.n_b)
    masks_a = _masks(inst.a_side)
    masks_b = _masks(inst.b_side)
    best: tuple[int, int] | None = None
    for start, stop in plan.blocks:
        for ia, ma in enumerate(masks_a):
            for ib in range(start, stop):
                if ma & masks_b[ib] == 0:
                    if best is None or (ia, ib) < best:
                        best = (ia, ib)
                    break  # smallest ib for this (block, ia) found
    if best is None:
        return None
    return OvWitness(*best)
