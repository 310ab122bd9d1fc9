"""Discrete Fréchet distance on planar rational curves.

All entry points work on exact rationals.  Internally each curve pair is
rescaled once onto a common integer grid (multiply by the lcm of all
coordinate denominators), after which the dynamic programs run on machine
ints; results are mapped back to rationals exactly.

The distance is handled squared end to end.  Three routes are provided:

* ``frechet_sq``        -- full table, returns the value and one optimal
                           traversal (deterministic tie-breaking),
* ``frechet_sq_value``  -- two-row table, value only, O(min memory),
* ``frechet_decide``    -- threshold decision as pure reachability over
                           the cells whose squared distance is within the
                           threshold (no min/max bookkeeping).

``brute_force_frechet_sq`` enumerates every monotone traversal and is the
reference oracle for the dynamic programs; it is exponential and refuses
inputs beyond a configurable total vertex count.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Curve2, Rat, SqDist, as_integer_grid, curve, sq_dist

__all__ = [
    "Traversal",
    "FrechetResult",
    "frechet_sq",
    "frechet_sq_value",
    "frechet_decide",
    "brute_force_frechet_sq",
    "traversal_is_valid",
]

Traversal = tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class FrechetResult:
    """Squared distance plus one optimal traversal achieving it.

    The traversal is a tuple of 0-based (i, j) vertex pairs starting at
    (0, 0), ending at (len-1, len-1), each step advancing one or both
    indices by exactly one.
    """

    sq_value: SqDist
    traversal: Traversal


def traversal_is_valid(steps: Traversal, n: int, m: int) -> bool:
    """Check the monotone-walk invariants for curves of length n and m."""
    if not steps or steps[0] != (0, 0) or steps[-1] != (n - 1, m - 1):
        return False
    for (i0, j0), (i1, j1) in zip(steps, steps[1:]):
        di, dj = i1 - i0, j1 - j0
        if di not in (0, 1) or dj not in (0, 1) or (di, dj) == (0, 0):
            return False
    return True


def _int_grid_pair(p: Curve2, q: Curve2) -> tuple[list, list, int]:
    (ip, iq), scale = as_integer_grid([p, q])
    return ip, iq, scale


def _dist_row(pv: tuple[int, int], qs: list[tuple[int, int]]) -> list[int]:
    px, py = pv
    return [(px - qx) ** 2 + (py - qy) ** 2 for qx, qy in qs]


def frechet_sq(p, q) -> FrechetResult:
    """Full dynamic program with traversal recovery.

    The table entry for (i, j) is the smallest achievable maximum squared
    step distance over monotone walks from (0, 0) to (i, j).  Backtracking
    prefers the diagonal predecessor, then (i-1, j), then (i, j-1), which
    pins down one deterministic optimal traversal among ties.
    """
    p, q = curve(p), curve(q)
    ip, iq, scale = _int_grid_pair(p, q)
    n, m = len(ip), len(iq)
    dist = [_dist_row(pv, iq) for pv in ip]

    table: list[list[int]] = [[0] * m for _ in range(n)]
    row0 = table[0]
    row0[0] = dist[0][0]
    for j in range(1, m):
        row0[j] = max(row0[j - 1], dist[0][j])
    for i in range(1, n):
        prev, cur, drow = table[i - 1], table[i], dist[i]
        cur[0] = max(prev[0], drow[0])
        for j in range(1, m):
            reach = prev[j - 1]
            if prev[j] < reach:
                reach = prev[j]
            if cur[j - 1] < reach:
                reach = cur[j - 1]
            dv = drow[j]
            cur[j] = dv if dv > reach else reach

    steps = [(n - 1, m - 1)]
    i, j = n - 1, m - 1
    while (i, j) != (0, 0):
        if i == 0:
            i, j = 0, j - 1
        elif j == 0:
            i, j = i - 1, 0
        else:
            # prefer diagonal, then the (i-1, j) predecessor, then (i, j-1)
            best = table[i - 1][j - 1]
            pick = (i - 1, j - 1)
            if table[i - 1][j] < best:
                best, pick = table[i - 1][j], (i - 1, j)
            if table[i][j - 1] < best:
                pick = (i, j - 1)
            i, j = pick
        steps.append((i, j))
    steps.reverse()
    return FrechetResult(Rat(table[n - 1][m - 1], scale * scale), tuple(steps))


def frechet_sq_value(p, q) -> SqDist:
    """Value-only dynamic program keeping two table rows."""
    p, q = curve(p), curve(q)
    ip, iq, scale = _int_grid_pair(p, q)
    if len(ip) < len(iq):  # fewer rows outside, shorter row inside
        ip, iq = iq, ip
    m = len(iq)
    prev = _dist_row(ip[0], iq)
    for j in range(1, m):
        if prev[j - 1] > prev[j]:
            prev[j] = prev[j - 1]
    for pv in ip[1:]:
        drow = _dist_row(pv, iq)
        cur = [0] * m
        cur[0] = prev[0] if prev[0] > drow[0] else drow[0]
        for j in range(1, m):
            reach = prev[j - 1]
            if prev[j] < reach:
                reach = prev[j]
            if cur[j - 1] < reach:
                reach = cur[j - 1]
            dv = drow[j]
            cur[j] = dv if dv > reach else reach
        prev = cur
    return Rat(prev[m - 1], scale * scale)


def frechet_decide(p, q, tau_sq) -> bool:
    """Is the squared discrete Fréchet distance at most tau_sq?

    Implemented as reachability over the grid cells whose squared vertex
    distance is within the threshold; a row with no reachable cell ends
    the walk early.
    """
    p, q = curve(p), curve(q)
    tau_sq = sq_dist(tau_sq)
    ip, iq, scale = _int_grid_pair(p, q)
    # integer threshold test: dist * den <= num  <=>  dist <= tau_sq * scale^2
    thr = tau_sq * scale * scale
    num, den = thr.numerator, thr.denominator
    n, m = len(ip), len(iq)

    drow = _dist_row(ip[0], iq)
    reach = [False] * m
    ok = drow[0] * den <= num
    reach[0] = ok
    for j in range(1, m):
        ok = ok and drow[j] * den <= num
        reach[j] = ok
    for i in range(1, n):
        drow = _dist_row(ip[i], iq)
        prev = reach
        reach = [False] * m
        reach[0] = prev[0] and drow[0] * den <= num
        any_reach = reach[0]
        for j in range(1, m):
            if (prev[j - 1] or prev[j] or reach[j - 1]) and drow[j] * den <= num:
                reach[j] = True
                any_reach = True
        if not any_reach:
            return False
    return reach[m - 1]


def brute_force_frechet_sq(p, q, max_total: int = 16) -> SqDist:
    """Reference oracle: minimize over all monotone traversals explicitly.

    Walks the full traversal tree without memoization, so it shares no
    machinery with the dynamic programs above.  Refuses curve pairs with
    more than ``max_total`` vertices combined.
    """
    p, q = curve(p), curve(q)
    if len(p) + len(q) > max_total:
        raise ValueError(
            f"oracle cap exceeded: {len(p)} + {len(q)} > {max_total} vertices"
        )
    ip, iq, scale = _int_grid_pair(p, q)
    n, m = len(ip), len(iq)
    dist = [_dist_row(pv, iq) for pv in ip]
    last_i, last_j = n - 1, m - 1

    def walk(i: int, j: int) -> int:
        here = dist[i][j]
        if i == last_i and j == last_j:
            return here
        if i == last_i:
            tail = walk(i, j + 1)
        elif j == last_j:
            tail = walk(i + 1, j)
        else:
            tail = walk(i + 1, j + 1)
            t = walk(i + 1, j)
            if t < tail:
                tail = t
            t = walk(i, j + 1)
            if t < tail:
                tail = t
        return here if here > tail else tail

    return Rat(walk(0, 0), scale * scale)
