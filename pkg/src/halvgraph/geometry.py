"""Exact planar geometry: rational points, orientation predicates, affine maps.

Every predicate here is evaluated with integer or :class:`fractions.Fraction`
arithmetic. Floating point is never used to decide anything.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from enum import IntEnum
from fractions import Fraction
from functools import cached_property, cmp_to_key
from itertools import combinations
from typing import Iterable, NamedTuple, Sequence

import numpy as np

Scalar = Fraction

# |coordinate| below this keeps every 2x2 determinant inside int64.
_INT64_SAFE = 1 << 29


class GeometryError(ValueError):
    pass


class GeneralPositionError(GeometryError):
    pass


class SingularMap(GeometryError):
    pass


def scalar(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise TypeError("floats are not accepted as exact coordinates")
    return Fraction(value)


class Point(NamedTuple):
    x: Fraction
    y: Fraction

    @classmethod
    def of(cls, x, y) -> "Point":
        return cls(scalar(x), scalar(y))

    def __sub__(self, other: "Point") -> tuple[Fraction, Fraction]:  # type: ignore[override]
        return (self.x - other.x, self.y - other.y)


class Orientation(IntEnum):
    CW = -1
    COLLINEAR = 0
    CCW = 1


def cross(ax, ay, bx, by):
    return ax * by - ay * bx


def _sign(v) -> int:
    return (v > 0) - (v < 0)


def orientation(p: Point, q: Point, r: Point) -> Orientation:
    """Sign of (q - p) x (r - p)."""
    return Orientation(_sign(cross(q.x - p.x, q.y - p.y, r.x - p.x, r.y - p.y)))


@dataclass(frozen=True)
class Direction:
    """A direction in the plane, stored as a primitive integer vector.

    Two directions compare equal iff they are positive multiples of each other.
    """

    dx: int
    dy: int

    def __post_init__(self):
        if self.dx == 0 and self.dy == 0:
            raise GeometryError("zero direction")
        g = math.gcd(self.dx, self.dy)
        if g != 1:
            object.__setattr__(self, "dx", self.dx // g)
            object.__setattr__(self, "dy", self.dy // g)

    @classmethod
    def of(cls, dx, dy) -> "Direction":
        dx, dy = scalar(dx), scalar(dy)
        if dx == 0 and dy == 0:
            raise GeometryError("zero direction")
        den = math.lcm(dx.denominator, dy.denominator)
        ix, iy = int(dx * den), int(dy * den)
        g = math.gcd(ix, iy)
        return cls(ix // g, iy // g)

    def __neg__(self) -> "Direction":
        return Direction(-self.dx, -self.dy)

    def perp(self) -> "Direction":
        """Counterclockwise quarter turn."""
        return Direction(-self.dy, self.dx)

    def __str__(self) -> str:
        return f"{self.dx},{self.dy}"

    @classmethod
    def parse(cls, text: str) -> "Direction":
        parts = text.replace(" ", "").split(",")
        if len(parts) != 2:
            raise GeometryError(f"bad direction {text!r}")
        return cls.of(parse_scalar(parts[0]), parse_scalar(parts[1]))


def parse_scalar(text: str) -> Fraction:
    text = text.strip()
    num, _, den = text.partition("/")
    if not _is_int_literal(num) or (den and not _is_int_literal(den)):
        raise GeometryError(f"not an integer or fraction: {text!r}")
    if den and int(den) == 0:
        raise GeometryError(f"zero denominator: {text!r}")
    return Fraction(int(num), int(den) if den else 1)


def _is_int_literal(s: str) -> bool:
    s = s[1:] if s[:1] in "+-" else s
    return s.isdigit() and s.isascii()


def format_scalar(v: Fraction) -> str:
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


@dataclass(frozen=True)
class GPViolation:
    kind: str  # "duplicate" or "collinear"
    indices: tuple[int, ...]

    def __str__(self) -> str:
        return f"{self.kind} {self.indices}"


def validate_general_position(points: Sequence[Point]) -> GPViolation | None:
    """Return ``None`` when the points are in general position.

    Otherwise the first offending pair (duplicates) or triple (collinear) in
    index order is reported; duplicates are looked for first.
    """
    pts = [Point.of(*p) for p in points]
    bad = _duplicate(pts)
    if bad is not None or len(pts) < 3:
        return bad
    return _first_collinear(orientation_signs(_integerize(pts)))


def _duplicate(pts: Sequence[Point]) -> GPViolation | None:
    seen: dict[Point, int] = {}
    for j, p in enumerate(pts):
        if p in seen:
            return GPViolation("duplicate", (seen[p], j))
        seen[p] = j
    return None


def _first_collinear(sign: np.ndarray) -> GPViolation | None:
    i, j, k = np.nonzero(sign == 0)
    mask = (i < j) & (j < k)
    if not mask.any():
        return None
    first = min(zip(i[mask].tolist(), j[mask].tolist(), k[mask].tolist()))
    return GPViolation("collinear", first)


def _integerize(points: Sequence[Point]) -> list[tuple[int, int]]:
    den = 1
    for p in points:
        den = math.lcm(den, p.x.denominator, p.y.denominator)
    return [(int(p.x * den), int(p.y * den)) for p in points]


def orientation_signs(coords: Sequence[tuple[int, int]]) -> np.ndarray:
    """All orientation signs at once: ``out[i, j, k] = sign((pj-pi) x (pk-pi))``."""
    big = any(abs(c) >= _INT64_SAFE for xy in coords for c in xy)
    arr = np.array(coords, dtype=object if big else np.int64)
    if len(coords) == 0:
        return np.zeros((0, 0, 0), dtype=np.int8)
    x, y = arr[:, 0], arr[:, 1]
    dx = x[None, :] - x[:, None]
    dy = y[None, :] - y[:, None]
    det = dx[:, :, None] * dy[:, None, :] - dy[:, :, None] * dx[:, None, :]
    return np.sign(det).astype(np.int8)


@dataclass(frozen=True)
class PointConfig:
    """An ordered set of an even number of points in general position."""

    points: tuple[Point, ...]

    def __post_init__(self):
        pts = tuple(Point.of(*p) for p in self.points)
        object.__setattr__(self, "points", pts)
        n = len(pts)
        if n < 2 or n % 2:
            raise GeneralPositionError(f"need an even number of points >= 2, got {n}")
        bad = _duplicate(pts)
        if bad is None:
            # the sign table doubles as the collinearity test; keep it
            ints = tuple(_integerize(pts))
            sign = orientation_signs(ints)
            bad = _first_collinear(sign)
            self.__dict__["int_coords"] = ints
            self.__dict__["signs"] = sign
        if bad is not None:
            raise GeneralPositionError(f"points not in general position: {bad}")

    @classmethod
    def from_coords(cls, coords: Iterable[tuple]) -> "PointConfig":
        return cls(tuple(Point.of(x, y) for x, y in coords))

    @property
    def n(self) -> int:
        return len(self.points)

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __getitem__(self, i: int) -> Point:
        return self.points[i]

    @cached_property
    def int_coords(self) -> tuple[tuple[int, int], ...]:
        """Coordinates scaled by the common denominator.

        Positive scaling leaves every orientation sign unchanged.
        """
        return tuple(_integerize(self.points))

    @cached_property
    def denominator(self) -> int:
        den = 1
        for p in self.points:
            den = math.lcm(den, p.x.denominator, p.y.denominator)
        return den

    @cached_property
    def signs(self) -> np.ndarray:
        return orientation_signs(self.int_coords)


@dataclass(frozen=True)
class AffineMap:
    """``p -> M p + t`` with ``M = [[a, b], [c, d]]``."""

    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction
    tx: Fraction = Fraction(0)
    ty: Fraction = Fraction(0)

    def __post_init__(self):
        for f in ("a", "b", "c", "d", "tx", "ty"):
            object.__setattr__(self, f, scalar(getattr(self, f)))

    @classmethod
    def identity(cls) -> "AffineMap":
        return cls(1, 0, 0, 1)

    @property
    def determinant(self) -> Fraction:
        return self.a * self.d - self.b * self.c

    def __call__(self, p: Point) -> Point:
        return Point(self.a * p.x + self.b * p.y + self.tx, self.c * p.x + self.d * p.y + self.ty)

    def then(self, other: "AffineMap") -> "AffineMap":
        """Composite map: apply ``self`` first, then ``other``."""
        o = other
        return AffineMap(
            o.a * self.a + o.b * self.c,
            o.a * self.b + o.b * self.d,
            o.c * self.a + o.d * self.c,
            o.c * self.b + o.d * self.d,
            o.a * self.tx + o.b * self.ty + o.tx,
            o.c * self.tx + o.d * self.ty + o.ty,
        )


def apply_affine(cfg: PointConfig, m: AffineMap) -> PointConfig:
    if m.determinant == 0:
        raise SingularMap("affine map is not invertible")
    return PointConfig(tuple(m(p) for p in cfg.points))


# ---------------------------------------------------------------------------
# directions modulo a half turn
# ---------------------------------------------------------------------------


def half_turn_rep(dx, dy) -> tuple:
    """Representative of the line direction in the half-open upper half plane."""
    if dy < 0 or (dy == 0 and dx < 0):
        return (-dx, -dy)
    return (dx, dy)


def _angle_cmp(u, v) -> int:
    # both in the upper half plane representation: smaller angle first
    c = cross(u[0], u[1], v[0], v[1])
    return -1 if c > 0 else (1 if c < 0 else 0)


angle_key = cmp_to_key(_angle_cmp)


def approx_norm(dx: Fraction, dy: Fraction, bits: int = 40) -> Fraction:
    """A rational within 2**-bits (relative) of the Euclidean norm."""
    dx, dy = scalar(dx), scalar(dy)
    den = math.lcm(dx.denominator, dy.denominator)
    ix, iy = int(dx * den), int(dy * den)
    scale = 1 << bits
    return Fraction(math.isqrt((ix * ix + iy * iy) * scale * scale), scale * den)


def bisect_directions(u: tuple, v: tuple, bits: int = 40) -> tuple[Fraction, Fraction]:
    """Approximate the angle bisector of u and v as u*|v| + v*|u|.

    Any positive combination stays strictly inside the angle, so the
    approximation never leaves it.
    """
    nu = approx_norm(*u, bits=bits)
    nv = approx_norm(*v, bits=bits)
    return (u[0] * nv + v[0] * nu, u[1] * nv + v[1] * nu)


def rotated_frame(cfg: PointConfig, up: Direction) -> list[tuple[int, int]]:
    """Integer coordinates in the frame where ``up`` points along +y.

    The frame map ``[[uy, -ux], [ux, uy]]`` is a rotation times a positive
    scale, so orientations are preserved.
    """
    ux, uy = up.dx, up.dy
    return [(x * uy - y * ux, x * ux + y * uy) for x, y in cfg.int_coords]


def frame_x(p: Point, up: Direction, denominator: int) -> Fraction:
    """x-coordinate of an arbitrary rational point in :func:`rotated_frame` units."""
    return denominator * (p.x * up.dy - p.y * up.dx)


def is_generic_direction(cfg: PointConfig, up: Direction) -> bool:
    xs = [x for x, _ in rotated_frame(cfg, up)]
    return len(set(xs)) == len(xs)


def generic_up_direction(cfg: PointConfig) -> Direction:
    """Deterministic direction with no two points sharing a rotated x-coordinate.

    Forbidden up directions are those parallel to a difference vector of two
    points (modulo a half turn). The result bisects the widest angular gap
    between consecutive forbidden directions.
    """
    pts = cfg.int_coords
    reps = set()
    for (ax, ay), (bx, by) in combinations(pts, 2):
        dx, dy = bx - ax, by - ay
        g = math.gcd(dx, dy)
        reps.add(half_turn_rep(dx // g, dy // g))
    ordered = sorted(reps, key=angle_key)
    best = None
    m = len(ordered)
    for i, a in enumerate(ordered):
        b = ordered[i + 1] if i + 1 < m else (-ordered[0][0], -ordered[0][1])
        gap = _angle_of(b) - _angle_of(a)
        if i + 1 == m:
            gap = math.pi - (_angle_of(a) - _angle_of(ordered[0]))
        # float only ranks the gaps; the chosen bisector is checked exactly below
        if best is None or gap > best[0] + 1e-15:
            best = (gap, a, b)
    _, a, b = best
    if cross(a[0], a[1], b[0], b[1]) == 0:
        d = (-a[1], a[0])
    else:
        d = bisect_directions(a, b)
    up = Direction.of(*d)
    assert is_generic_direction(cfg, up)
    return up


def _angle_of(v) -> float:
    return math.atan2(v[1], v[0])


def perturb_direction(d: Direction, ok, region=None) -> Direction:
    """Smallest tried rotation of ``d`` that satisfies ``ok``.

    ``region`` is an optional pair of bounding vectors (lo, hi); the result
    must stay strictly inside the counterclockwise angle from lo to hi.
    """
    if ok(d):
        return d
    for bits in range(48, 4, -4):
        for s in (1, -1):
            t = Fraction(s, 1 << bits)
            cand = Direction.of(d.dx - t * d.dy, d.dy + t * d.dx)
            if region is not None:
                lo, hi = region
                if not (cross(lo[0], lo[1], cand.dx, cand.dy) > 0 and cross(cand.dx, cand.dy, hi[0], hi[1]) > 0):
                    continue
            if ok(cand):
                return cand
    raise GeometryError(f"no generic perturbation of {d}")


def random_config(n: int, rng: random.Random, bound: int = 1000) -> PointConfig:
    """Uniform integer points in [-bound, bound]^2, resampled until generic."""
    while True:
        pts = [(rng.randint(-bound, bound), rng.randint(-bound, bound)) for _ in range(n)]
        if validate_general_position([Point.of(*p) for p in pts]) is None:
            return PointConfig.from_coords(pts)


def convex_hull(coords: Sequence[tuple[int, int]]) -> list[int]:
    """Indices of hull vertices, counterclockwise, starting from the lowest-leftmost."""
    idx = sorted(range(len(coords)), key=lambda i: coords[i])
    if len(idx) <= 2:
        return idx

    def half(seq):
        out: list[int] = []
        for i in seq:
            while len(out) >= 2:
                (ax, ay), (bx, by), (cx, cy) = coords[out[-2]], coords[out[-1]], coords[i]
                if cross(bx - ax, by - ay, cx - ax, cy - ay) <= 0:
                    out.pop()
                else:
                    break
            out.append(i)
        return out

    lower = half(idx)
    upper = half(reversed(idx))
    return lower[:-1] + upper[:-1]


def segments_cross(a, b, c, d) -> bool:
    """Proper intersection of open segments ab and cd (integer coords)."""
    def o(p, q, r):
        return _sign(cross(q[0] - p[0], q[1] - p[1], r[0] - p[0], r[1] - p[1]))

    return o(a, b, c) * o(a, b, d) < 0 and o(c, d, a) * o(c, d, b) < 0


def line_intersection(p1: Point, p2: Point, p3: Point, p4: Point) -> Point:
    d1 = p2 - p1
    d2 = p4 - p3
    den = cross(d1[0], d1[1], d2[0], d2[1])
    if den == 0:
        raise GeometryError("parallel lines")
    t = cross(p3.x - p1.x, p3.y - p1.y, d2[0], d2[1]) / den
    return Point(p1.x + t * d1[0], p1.y + t * d1[1])
