"""Plain-text points files.

Format: any number of ``#`` comment lines and blank lines, then a line with
the point count n, then n lines ``X Y`` where each coordinate is a decimal
integer or a fraction ``p/q``. Reading and writing round-trips exactly.
"""

from __future__ import annotations

from pathlib import Path
from typing import Iterable

from .geometry import GeometryError, PointConfig, format_scalar, parse_scalar


class PointsFileError(ValueError):
    pass


def parse_points(text: str) -> PointConfig:
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        rows.append((lineno, line))
    if not rows:
        raise PointsFileError("empty points file")
    lineno, head = rows[0]
    try:
        n = int(head)
    except ValueError:
        raise PointsFileError(f"line {lineno}: expected the point count, got {head!r}") from None
    if n < 0:
        raise PointsFileError(f"line {lineno}: negative point count")
    body = rows[1:]
    if len(body) != n:
        raise PointsFileError(f"expected {n} coordinate lines, found {len(body)}")
    coords = []
    for lineno, line in body:
        parts = line.split()
        if len(parts) != 2:
            raise PointsFileError(f"line {lineno}: expected 'X Y', got {line!r}")
        try:
            coords.append((parse_scalar(parts[0]), parse_scalar(parts[1])))
        except GeometryError as exc:
            raise PointsFileError(f"line {lineno}: {exc}") from None
    try:
        return PointConfig.from_coords(coords)
    except GeometryError as exc:
        raise PointsFileError(str(exc)) from None


def format_points(cfg: PointConfig, comments: Iterable[str] = ()) -> str:
    lines = [f"# {c}" for c in comments]
    lines.append(str(cfg.n))
    lines += [f"{format_scalar(p.x)} {format_scalar(p.y)}" for p in cfg]
    return "\n".join(lines) + "\n"


def read_points(path) -> PointConfig:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise PointsFileError(f"cannot read {path}: {exc.strerror}") from None
    return parse_points(text)


def write_points(path, cfg: PointConfig, comments: Iterable[str] = ()) -> None:
    Path(path).write_text(format_points(cfg, comments))


__all__ = ["PointsFileError", "parse_points", "format_points", "read_points", "write_points", "format_scalar"]
