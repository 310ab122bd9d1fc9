"""Plain-text on-disk formats: instances, curves, curve sets, point sets.

All formats are line-oriented ASCII.  Lines starting with '#' and blank
lines are comments and are skipped by every parser; writers may put
reproducibility notes there.  Rationals are serialized as ``num/den`` in
lowest terms (parsers also accept bare integers).  Counts on header lines
describe how many rows follow; positions within files are 1-based when a
human needs to point at them, but nothing in the formats stores indices.

Instance file:      line 1: ``n_a n_b d``; then n_a rows of d space
                    separated bits, then n_b rows.
Curve file:         line 1: vertex count; then one ``x y`` vertex per line.
Curve-set file:     line 1: curve count; then each curve in curve format.
Point-set file:     line 1: ``count dim``; then one point per line.
"""

from __future__ import annotations

from fractions import Fraction

from .core import Curve2, OvInstance, PointD, Rat, curve, ov_instance, point

__all__ = [
    "FormatError",
    "format_rat",
    "parse_rat",
    "format_instance",
    "parse_instance",
    "format_curve",
    "parse_curve",
    "format_curve_set",
    "parse_curve_set",
    "format_point_set",
    "parse_point_set",
    "read_text",
    "write_text",
]


class FormatError(ValueError):
    """Malformed on-disk content."""


def format_rat(r: Rat) -> str:
    r = Fraction(r)
    return f"{r.numerator}/{r.denominator}"


def parse_rat(token: str) -> Rat:
    try:
        return Fraction(token)
    except (ValueError, ZeroDivisionError) as exc:
        raise FormatError(f"bad rational token {token!r}") from exc


def _data_lines(text: str) -> list[list[str]]:
    rows = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        rows.append(line.split())
    return rows


def _ints(row: list[str], n: int | None = None) -> list[int]:
    try:
        vals = [int(tok) for tok in row]
    except ValueError as exc:
        raise FormatError(f"expected integers, got {row!r}") from exc
    if n is not None and len(vals) != n:
        raise FormatError(f"expected {n} fields, got {len(vals)}: {row!r}")
    return vals


def format_instance(inst: OvInstance, header: str | None = None) -> str:
    lines = []
    if header:
        lines.extend(f"# {h}" for h in header.splitlines())
    lines.append(f"{inst.n_a} {inst.n_b} {inst.d}")
    for vec in inst.a_side + inst.b_side:
        lines.append(" ".join(str(b) for b in vec))
    return "\n".join(lines) + "\n"


def parse_instance(text: str) -> OvInstance:
    rows = _data_lines(text)
    if not rows:
        raise FormatError("empty instance file")
    n_a, n_b, d = _ints(rows[0], 3)
    if n_a < 1 or n_b < 1 or d < 1:
        raise FormatError(f"bad instance header {rows[0]!r}")
    if len(rows) != 1 + n_a + n_b:
        raise FormatError(
            f"instance header promises {n_a}+{n_b} rows, file has {len(rows) - 1}"
        )
    vecs = [_ints(row, d) for row in rows[1:]]
    for row in vecs:
        for b in row:
            if b not in (0, 1):
                raise FormatError(f"instance entries must be bits, got {b}")
    return ov_instance(vecs[:n_a], vecs[n_a:])


def _format_curve_lines(c: Curve2) -> list[str]:
    lines = [str(len(c))]
    lines.extend(f"{format_rat(x)} {format_rat(y)}" for x, y in c)
    return lines


def format_curve(c: Curve2, header: str | None = None) -> str:
    lines = [f"# {h}" for h in header.splitlines()] if header else []
    return "\n".join(lines + _format_curve_lines(curve(c))) + "\n"


def _parse_curve_rows(rows: list[list[str]], at: int) -> tuple[Curve2, int]:
    if at >= len(rows):
        raise FormatError("file promises more curves than it contains")
    count = _ints(rows[at], 1)[0]
    if count < 1:
        raise FormatError("curve vertex count must be >= 1")
    if at + 1 + count > len(rows):
        raise FormatError(f"curve promises {count} vertices, file is short")
    verts = []
    for row in rows[at + 1 : at + 1 + count]:
        if len(row) != 2:
            raise FormatError(f"curve vertex needs 2 coordinates, got {row!r}")
        verts.append((parse_rat(row[0]), parse_rat(row[1])))
    return curve(verts), at + 1 + count


def parse_curve(text: str) -> Curve2:
    rows = _data_lines(text)
    if not rows:
        raise FormatError("empty curve file")
    c, end = _parse_curve_rows(rows, 0)
    if end != len(rows):
        raise FormatError("trailing rows after curve")
    return c


def format_curve_set(curves, header: str | None = None) -> str:
    curves = [curve(c) for c in curves]
    lines = [f"# {h}" for h in header.splitlines()] if header else []
    lines.append(str(len(curves)))
    for c in curves:
        lines.extend(_format_curve_lines(c))
    return "\n".join(lines) + "\n"


def parse_curve_set(text: str) -> tuple[Curve2, ...]:
    rows = _data_lines(text)
    if not rows:
        raise FormatError("empty curve-set file")
    count = _ints(rows[0], 1)[0]
    if count < 1:
        raise FormatError("curve-set count must be >= 1")
    out, at = [], 1
    for _ in range(count):
        c, at = _parse_curve_rows(rows, at)
        out.append(c)
    if at != len(rows):
        raise FormatError("trailing rows after curve set")
    return tuple(out)


def format_point_set(points, header: str | None = None) -> str:
    pts = [point(p) for p in points]
    if not pts:
        raise FormatError("point set must be non-empty")
    dim = len(pts[0])
    lines = [f"# {h}" for h in header.splitlines()] if header else []
    lines.append(f"{len(pts)} {dim}")
    for p in pts:
        if len(p) != dim:
            raise FormatError("point set rows must share one dimension")
        lines.append(" ".join(format_rat(c) for c in p))
    return "\n".join(lines) + "\n"


def parse_point_set(text: str) -> tuple[PointD, ...]:
    rows = _data_lines(text)
    if not rows:
        raise FormatError("empty point-set file")
    count, dim = _ints(rows[0], 2)
    if count < 1 or dim < 1:
        raise FormatError(f"bad point-set header {rows[0]!r}")
    if len(rows) != 1 + count:
        raise FormatError(f"point set promises {count} rows, has {len(rows) - 1}")
    pts = []
    for row in rows[1:]:
        if len(row) != dim:
            raise FormatError(f"point row needs {dim} coordinates, got {row!r}")
        pts.append(tuple(parse_rat(tok) for tok in row))
    return tuple(pts)


def read_text(path) -> str:
    from pathlib import Path

    try:
        return Path(path).read_text()
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc}") from exc


def write_text(path, text: str) -> None:
    from pathlib import Path

    try:
        Path(path).write_text(text)
    except OSError as exc:
        raise FormatError(f"cannot write {path}: {exc}") from exc
