"""Generators for configurations with prescribed underlying-graph features.

Every generator validates its output by recomputing the underlying geograph
from scratch. Whenever a geometric ingredient has to be approximated by
rationals (regular polygons, nearly parallel line pencils, squeeze factors)
the generator refines the approximation until validation succeeds, or gives
up after a bounded number of rounds with :class:`ConstructionFailed`.
"""

from __future__ import annotations

import json
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

import networkx as nx

from .geometry import (
    Direction,
    GeometryError,
    Point,
    PointConfig,
    SingularMap,
    apply_affine,
    AffineMap,
    bisect_directions,
    convex_hull,
    cross as _det,
    generic_up_direction,
    line_intersection,
    perturb_direction,
    scalar,
)
from .halving import UnderlyingGeograph, has_cycle, has_path, underlying_geograph

SQUEEZE_START = 1 << 16
SQUEEZE_RETRIES = 8
REFINE_ROUNDS = 10


class BadSize(ValueError):
    pass


class SizeMismatch(ValueError):
    pass


class NotHullNeighbors(ValueError):
    pass


class NoValidLine(ValueError):
    pass


class ConstructionFailed(RuntimeError):
    pass


def _squeeze_schedule():
    f = Fraction(SQUEEZE_START)
    for _ in range(SQUEEZE_RETRIES + 1):
        yield f
        f = f * f


def _even_at_least(n: int, lo: int, what: str = "n") -> None:
    if not isinstance(n, int) or n < lo or n % 2:
        raise BadSize(f"{what} must be an even integer >= {lo}, got {n!r}")


def _try_config(coords) -> PointConfig | None:
    try:
        return PointConfig.from_coords(coords)
    except GeometryError:
        return None


# ---------------------------------------------------------------------------
# certificates
# ---------------------------------------------------------------------------


@dataclass
class ConstructionCert:
    """What a generator promises about the underlying graph of its output.

    Only the promises that are set get checked. ``edges`` is the exact edge
    set; ``edge_count`` just the count; ``path``/``cycle``/``clique`` are
    vertex lists that must span the named subgraph; ``induced`` maps a list
    of marked vertices to the edge list (in marked-local indices) that the
    induced subgraph must equal.
    """

    kind: str
    n: int
    params: dict = field(default_factory=dict)
    edges: list | None = None
    edge_count: int | None = None
    degrees: list | None = None
    components: int | None = None
    path: list | None = None
    cycle: list | None = None
    clique: list | None = None
    marked: list | None = None
    induced_edges: list | None = None
    max_points: int | None = None

    def check(self, cfg: PointConfig, g: UnderlyingGeograph | None = None) -> list[str]:
        """Failed promises as readable strings; empty when all hold."""
        g = g if g is not None else underlying_geograph(cfg)
        bad = []
        if cfg.n != self.n:
            bad.append(f"n: expected {self.n}, got {cfg.n}")
        if self.max_points is not None and cfg.n > self.max_points:
            bad.append(f"size {cfg.n} above bound {self.max_points}")
        if self.edges is not None:
            want = sorted(tuple(sorted(e)) for e in self.edges)
            if want != list(g.edges):
                missing = sorted(set(want) - g.edge_set)
                extra = sorted(g.edge_set - set(want))
                bad.append(f"edges differ: missing {missing[:5]}, extra {extra[:5]}")
        if self.edge_count is not None and g.E != self.edge_count:
            bad.append(f"edge count: expected {self.edge_count}, got {g.E}")
        if self.degrees is not None and sorted(g.degrees, reverse=True) != sorted(self.degrees, reverse=True):
            bad.append(f"degree sequence differs: {sorted(g.degrees, reverse=True)}")
        if self.components is not None:
            c = nx.number_connected_components(g.to_networkx())
            if c != self.components:
                bad.append(f"components: expected {self.components}, got {c}")
        if self.path is not None and not has_path(g, self.path):
            bad.append(f"path {self.path} missing")
        if self.cycle is not None and not has_cycle(g, self.cycle):
            bad.append(f"cycle {self.cycle} missing")
        if self.clique is not None:
            for a, b in combinations(self.clique, 2):
                if not g.has_edge(a, b):
                    bad.append(f"clique edge ({a}, {b}) missing")
                    break
        if self.marked is not None and self.induced_edges is not None:
            got = induced_edges(g, self.marked)
            want = sorted(tuple(sorted(e)) for e in self.induced_edges)
            if got != want:
                bad.append(f"induced subgraph {got} differs from {want}")
        return bad

    def to_json(self) -> str:
        data = {k: v for k, v in self.__dict__.items() if v is not None}
        return json.dumps(data, indent=2, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "ConstructionCert":
        data = json.loads(text)
        for key in ("edges", "induced_edges"):
            if data.get(key) is not None:
                data[key] = [list(e) for e in data[key]]
        return cls(**data)


def induced_edges(g: UnderlyingGeograph, marked: Sequence[int]) -> list[tuple[int, int]]:
    """Edges among ``marked``, relabelled by position in ``marked``."""
    out = []
    for a, b in combinations(range(len(marked)), 2):
        if g.has_edge(marked[a], marked[b]):
            out.append((a, b))
    return out


def check_cert(cfg: PointConfig, cert: ConstructionCert) -> list[str]:
    return cert.check(cfg)


# ---------------------------------------------------------------------------
# rational circle points, polygon, star
# ---------------------------------------------------------------------------


def circle_point(theta: float, bits: int) -> tuple[Fraction, Fraction]:
    """A rational point exactly on the unit circle near angle ``theta``.

    Uses the parametrization by ``t = tan(theta/2)``, rounded to ``bits``
    binary digits, so the point is exact even though theta is only a guide.
    """
    t = Fraction(round(math.tan(theta / 2) * (1 << bits)), 1 << bits)
    d = 1 + t * t
    return ((1 - t * t) / d, 2 * t / d)


def _polygon_angles(n: int) -> list[float]:
    # distinct, non-symmetric angles strictly inside (-pi, pi)
    return [-math.pi + 2 * math.pi * (i + 0.25 + 0.15 * ((7 * i) % 5) / 5) / n for i in range(n)]


def convex_polygon(n: int) -> PointConfig:
    _even_at_least(n, 4)
    for bits in range(12, 12 + 4 * REFINE_ROUNDS, 4):
        pts = {circle_point(a, bits) for a in _polygon_angles(n)}
        if len(pts) == n:
            cfg = _try_config([circle_point(a, bits) for a in _polygon_angles(n)])
            if cfg is not None:
                return cfg
    raise ConstructionFailed(f"convex_polygon({n})")


def _two_points() -> PointConfig:
    return PointConfig.from_coords([(0, 0), (1, 0)])


def star(n: int) -> PointConfig:
    """Odd (n-1)-gon on the unit circle plus the origin (the last point)."""
    _even_at_least(n, 4)
    m = n - 1
    angles = [-math.pi + 2 * math.pi * (i + 0.5) / m for i in range(m)]
    for bits in range(12, 12 + 4 * REFINE_ROUNDS, 4):
        cfg = _try_config([circle_point(a, bits) for a in angles] + [(0, 0)])
        if cfg is None:
            continue
        g = underlying_geograph(cfg)
        if g.E == m and g.degrees[m] == m:
            return cfg
    raise ConstructionFailed(f"star({n})")


# ---------------------------------------------------------------------------
# segmentarizing
# ---------------------------------------------------------------------------


def squeeze_map(point, line_dir: Direction, factor, squeeze_dir: Direction | None = None) -> AffineMap:
    """Affine map fixing the line through ``point`` along ``line_dir`` and
    shrinking offsets measured along ``squeeze_dir`` by ``factor``."""
    factor = scalar(factor)
    if factor <= 0:
        raise ValueError("squeeze factor must be positive")
    s = squeeze_dir if squeeze_dir is not None else line_dir.perp()
    d = line_dir
    det = _det(d.dx, d.dy, s.dx, s.dy)
    if det == 0:
        raise SingularMap("squeeze direction parallel to the target line")
    px, py = scalar(point[0]), scalar(point[1])
    # coefficients of p - P in the basis (d, s), then shrink the s-part
    inv = Fraction(1, det)
    # M = B diag(1, 1/f) B^-1, with B = [d s]
    b00, b01, b10, b11 = d.dx, s.dx, d.dy, s.dy
    i00, i01, i10, i11 = b11 * inv, -b01 * inv, -b10 * inv, b00 * inv
    k = 1 / factor
    a = b00 * i00 + b01 * k * i10
    b = b00 * i01 + b01 * k * i11
    c = b10 * i00 + b11 * k * i10
    dd = b10 * i01 + b11 * k * i11
    tx = px - (a * px + b * py)
    ty = py - (c * px + dd * py)
    return AffineMap(a, b, c, dd, tx, ty)


def segmentarize(cfg: PointConfig, target_line: tuple, factor, squeeze_dir: Direction | None = None) -> PointConfig:
    """Squeeze ``cfg`` toward ``target_line = (point, Direction)`` by ``1/factor``.

    The map has positive determinant, so every orientation and therefore the
    edge set is unchanged.
    """
    point, line_dir = target_line
    return apply_affine(cfg, squeeze_map(point, line_dir, factor, squeeze_dir))


def _full_angle_cmp(u, v) -> int:
    hu = 0 if (u[1] > 0 or (u[1] == 0 and u[0] > 0)) else 1
    hv = 0 if (v[1] > 0 or (v[1] == 0 and v[0] > 0)) else 1
    if hu != hv:
        return hu - hv
    c = _det(u[0], u[1], v[0], v[1])
    return -1 if c > 0 else (1 if c < 0 else 0)


def projection_cells(cfg: PointConfig) -> list[Direction]:
    """One direction from each open arc of directions with distinct projections.

    Projection order onto a direction only changes when the direction becomes
    perpendicular to a difference vector, so these samples see every order.
    """
    import functools

    crit = set()
    for (ax, ay), (bx, by) in combinations(cfg.int_coords, 2):
        dx, dy = bx - ax, by - ay
        g = math.gcd(dx, dy)
        crit.add((-dy // g, dx // g))
        crit.add((dy // g, -dx // g))
    ordered = sorted(crit, key=functools.cmp_to_key(_full_angle_cmp))
    out = []
    for i, a in enumerate(ordered):
        b = ordered[(i + 1) % len(ordered)]
        out.append((Direction.of(*bisect_directions(a, b)), a, b))
    return out


def projection_order(cfg: PointConfig, nu: Direction) -> list[int]:
    vals = [nu.dx * x + nu.dy * y for x, y in cfg.int_coords]
    if len(set(vals)) != len(vals):
        raise NoValidLine(f"direction {nu} has tied projections")
    return sorted(range(cfg.n), key=vals.__getitem__)


def ordering_direction(cfg: PointConfig, a: int, b: int, k: int) -> Direction:
    """A direction whose projection order starts at ``a`` and puts ``b`` at position ``k``."""
    pa, pb = cfg.int_coords[a], cfg.int_coords[b]
    ab = (pb[0] - pa[0], pb[1] - pa[1])
    for nu, lo, hi in projection_cells(cfg):
        order = projection_order(cfg, nu)
        if order[0] == a and order[k - 1] == b:
            # the segment line through A should miss B
            return perturb_direction(nu, lambda v: _det(v.dx, v.dy, ab[0], ab[1]) != 0, region=(lo, hi))
    raise NoValidLine(f"no direction puts vertex {a} first and vertex {b} at position {k}")


def segment_order(cfg: PointConfig, first: int) -> list[int]:
    """Order along a squeezed segment that starts at ``first`` (by distance)."""
    p = cfg[first]
    return sorted(range(cfg.n), key=lambda i: (cfg[i].x - p.x) ** 2 + (cfg[i].y - p.y) ** 2)


def segmentarize_ordered(cfg: PointConfig, a: int, b: int, k: int) -> PointConfig:
    """Squeeze so that, along the resulting segment, ``a`` is first and ``b`` is ``k``-th.

    The segment lies on a line through ``a``; the squeeze runs parallel to
    the level lines of the ordering functional so the order is kept.
    """
    n = cfg.n
    if not 1 < k <= n:
        raise ValueError(f"k must satisfy 1 < k <= n, got {k}")
    hull = convex_hull(cfg.int_coords)
    h = len(hull)
    if a not in hull or b not in hull or (hull.index(a) - hull.index(b)) % h not in (1, h - 1):
        raise NotHullNeighbors(f"{a} and {b} are not neighbours on the hull")
    nu = ordering_direction(cfg, a, b, k)
    want = projection_order(cfg, nu)
    for f in _squeeze_schedule():
        out = segmentarize(cfg, (cfg[a], nu), f, nu.perp())
        if segment_order(out, a) == want:
            return out
    raise ConstructionFailed("segmentarize_ordered did not converge")


def _order_direction(cfg: PointConfig) -> Direction:
    # projections onto (uy, -ux) are the rotated-frame x values, all distinct
    u = generic_up_direction(cfg)
    return Direction(u.dy, -u.dx)


def _segment_coords(cfg: PointConfig, nu: Direction) -> list[tuple[Fraction, Fraction]]:
    """(along, across) coordinates w.r.t. ``nu``; a rotation times |nu|."""
    return [(nu.dx * p.x + nu.dy * p.y, -nu.dy * p.x + nu.dx * p.y) for p in cfg]


# ---------------------------------------------------------------------------
# cross, Y-shape, pad
# ---------------------------------------------------------------------------


def _cross_attempt(c1: PointConfig, c2: PointConfig, f: Fraction):
    out = []
    for cfg, vertical in ((c1, False), (c2, True)):
        coords = _segment_coords(cfg, _order_direction(cfg))
        along = sorted(a for a, _ in coords)
        mid = (along[cfg.n // 2 - 1] + along[cfg.n // 2]) / 2
        across_mid = (max(b for _, b in coords) + min(b for _, b in coords)) / 2
        for a, b in coords:
            u, v = a - mid, (b - across_mid) / f
            # (u, v) -> (-v, u) is a quarter turn, orientation preserving
            out.append((-v, u) if vertical else (u, v))
    return out


def cross_configs(c1: PointConfig, c2: PointConfig) -> tuple[PointConfig, list[tuple[int, int]]]:
    """The cross of two configurations and its expected edge set."""
    g1, g2 = underlying_geograph(c1), underlying_geograph(c2)
    want = sorted(list(g1.edges) + [(i + c1.n, j + c1.n) for i, j in g2.edges])
    for f in _squeeze_schedule():
        cfg = _try_config(_cross_attempt(c1, c2, f))
        if cfg is not None and list(underlying_geograph(cfg).edges) == want:
            return cfg, want
    raise ConstructionFailed("cross did not validate")


def cross(c1: PointConfig, c2: PointConfig) -> PointConfig:
    return cross_configs(c1, c2)[0]


# Unit rays with pairwise separations of about 127, 106 and 127 degrees.
Y_RAYS = ((Fraction(1), Fraction(0)), (Fraction(-3, 5), Fraction(4, 5)), (Fraction(-3, 5), Fraction(-4, 5)))


def _y_attempt(branches, orders, f):
    out = []
    ranks = []
    for cfg, nu, (rx, ry) in zip(branches, orders, Y_RAYS):
        coords = _segment_coords(cfg, nu)
        al = [a for a, _ in coords]
        lo, span = min(al), max(al) - min(al)
        bs = [b for _, b in coords]
        bmid = (max(bs) + min(bs)) / 2
        for a, b in coords:
            s = 1 + (a - lo) / span
            t = (b - bmid) / span / f
            out.append((s * rx - t * ry, s * ry + t * rx))
        ranks.append(sorted(range(cfg.n), key=al.__getitem__))
    return out, ranks


def y_shape_configs(c1: PointConfig, c2: PointConfig, c3: PointConfig, orders: Sequence[Direction] | None = None):
    """Y-shape of three equal-size configurations.

    Returns the configuration, the expected edge set, and for each branch the
    vertex indices ordered from the centre outwards.
    """
    branches = (c1, c2, c3)
    nb = c1.n
    if c2.n != nb or c3.n != nb:
        raise SizeMismatch(f"branch sizes differ: {c1.n}, {c2.n}, {c3.n}")
    if orders is None:
        orders = [_order_direction(c) for c in branches]
    for c, nu in zip(branches, orders):
        projection_order(c, nu)  # rejects tied projections
    want = set()
    for x, c in enumerate(branches):
        want.update((i + x * nb, j + x * nb) for i, j in underlying_geograph(c).edges)
    for f in _squeeze_schedule():
        coords, ranks = _y_attempt(branches, orders, f)
        ranks = [[v + x * nb for v in r] for x, r in enumerate(ranks)]
        expected = set(want)
        for x in range(3):
            y = (x + 1) % 3
            for i in range(1, nb // 2 + 1):
                a, b = ranks[x][i - 1], ranks[y][nb // 2 - i]
                expected.add((min(a, b), max(a, b)))
        expected = sorted(expected)
        cfg = _try_config(coords)
        if cfg is not None and list(underlying_geograph(cfg).edges) == expected:
            return cfg, expected, ranks
    raise ConstructionFailed("y_shape did not validate")


def y_shape(c1: PointConfig, c2: PointConfig, c3: PointConfig) -> PointConfig:
    return y_shape_configs(c1, c2, c3)[0]


def pad(cfg: PointConfig, target_n: int) -> PointConfig:
    """Cross with a convex polygon so the result has ``target_n`` points."""
    if not isinstance(target_n, int) or target_n % 2 or target_n < cfg.n:
        raise BadSize(f"target_n must be even and >= {cfg.n}, got {target_n!r}")
    extra = target_n - cfg.n
    if extra == 0:
        return cfg
    filler = _two_points() if extra == 2 else convex_polygon(extra)
    return cross(cfg, filler)


# ---------------------------------------------------------------------------
# paths and cycles
# ---------------------------------------------------------------------------


def _v_shape(n: int, delta: Fraction, four_leaves: bool):
    m = (n - 2) // 2
    left, right = [], []
    for t in range(m):
        u, v = Fraction(1 + t), delta * t * (m - 1 - t)
        right.append((u - v, u + v))
        left.append((-u + v, u + v))
    if four_leaves:
        lo1, lo2 = (Fraction(-1, 4), Fraction(-1)), (Fraction(1, 4), Fraction(-1))
    else:
        lo1, lo2 = (Fraction(0), Fraction(-1)), (Fraction(0), Fraction(-2))
    return list(reversed(left)) + [lo1] + right + [lo2]


def path_construction(n: int, four_leaves: bool = False):
    """V-shaped configuration whose graph has a path through n-1 vertices.

    Two slightly concave arcs along y = x and y = -x carry n-2 points; the
    remaining two sit below the apex. The path visits the points in index
    order 0..n-2. With ``four_leaves`` the two bottom points are split
    sideways, giving four leaves and all other degrees 3; no path is
    promised then and ``None`` is returned in its place.
    """
    _even_at_least(n, 4)
    path = list(range(n - 1))
    delta = Fraction(1, 8)
    for _ in range(REFINE_ROUNDS):
        cfg = _try_config(_v_shape(n, delta, four_leaves))
        delta /= 8
        if cfg is None:
            continue
        g = underlying_geograph(cfg)
        if four_leaves:
            if sorted(g.degrees) == [1] * 4 + [3] * (n - 4):
                return cfg, None
        elif has_path(g, path):
            return cfg, path
    raise ConstructionFailed(f"path_construction({n})")


def cycle_construction(n: int):
    """Y-shape of three ordered path constructions; cycle through n-3 vertices."""
    if not isinstance(n, int) or n < 6 or n % 6:
        raise BadSize(f"n must be a positive multiple of 6, got {n!r}")
    b = n // 3
    if b == 2:
        branch = _two_points()
        cfg, _, ranks = y_shape_configs(branch, branch, branch)
        return cfg, [r[0] for r in ranks]
    base, path = path_construction(b)
    nu = ordering_direction(base, path[0], path[-1], b // 2)
    cfg, _, ranks = y_shape_configs(base, base, base, orders=[nu] * 3)
    cycle = [v + x * b for x in range(3) for v in path]
    return cfg, cycle


# ---------------------------------------------------------------------------
# cliques
# ---------------------------------------------------------------------------


def _add(p, q):
    return (p[0] + q[0], p[1] + q[1])


def _scale(s, p):
    return (s * p[0], s * p[1])


def _snap(p, bits: int):
    """Round to the dyadic grid of step 2**-bits; keeps common denominators small."""
    s = 1 << bits
    return (Fraction(round(p[0] * s), s), Fraction(round(p[1] * s), s))


def _transversal_param(p, q, base, w, wp):
    """u such that base + u*wp lies on the line pq (base already includes s*w)."""
    d = (q[0] - p[0], q[1] - p[1])
    return -_det(d[0], d[1], base[0] - p[0], base[1] - p[1]) / _det(d[0], d[1], wp[0], wp[1])


def _clique_attempt(k: int, bits: int, lam: Fraction, rng: random.Random):
    theta0 = math.pi / (2 * k)
    base = []
    for i in range(k):
        x, y = circle_point(-math.pi + theta0 + 2 * math.pi * i / k, bits)
        den = 1 + lam * y
        base.append(_snap((x / den, y / den), bits))
    O = (sum(p[0] for p in base) / k, sum(p[1] for p in base) / k)
    pts = list(base)
    for c in range(k):
        lines = [(i, j) for i, j in combinations(range(k), 2) if (i + j) % k == c]
        m = len(lines)
        if m < 2:
            continue
        P = [Point(*p) for p in base]
        inter = [line_intersection(P[a], P[b], P[cc], P[d]) for (a, b), (cc, d) in combinations(lines, 2)]
        X = (sum(q.x for q in inter) / len(inter), sum(q.y for q in inter) / len(inter))
        w = (X[0] - O[0], X[1] - O[1])
        wp = (-w[1], w[0])
        ww = w[0] * w[0] + w[1] * w[1]
        s_far = max(((q.x - O[0]) * w[0] + (q.y - O[1]) * w[1]) / ww for q in inter)
        if s_far <= 0:
            return None

        def params(s):
            at = _add(O, _scale(s, w))
            us = sorted(_transversal_param(base[a], base[b], at, w, wp) for a, b in lines)
            return at, us

        # two points in each wedge beyond every pairwise intersection
        for g in range(m - 1):
            for h, frac in enumerate((Fraction(1, 3), Fraction(2, 3))):
                s = 2 * s_far * (1 + Fraction(rng.randint(1, 1 << 20), 1 << 24))
                at, us = params(s)
                u = us[g] + frac * (us[g + 1] - us[g])
                pts.append(_snap(_add(at, _scale(u, wp)), bits))
        # compensation groups behind the polygon, above and below the band
        for side in (1, -1):
            for j in range(m - 1):
                s = -s_far * (1 + Fraction(rng.randint(1, 1 << 20), 1 << 24))
                at, us = params(s)
                width = us[-1] - us[0]
                off = width * (Fraction(1, 2) + Fraction(j + 1, 2 * m) + Fraction(rng.randint(1, 1 << 16), 1 << 22))
                u = us[-1] + off if side > 0 else us[0] - off
                pts.append(_snap(_add(at, _scale(u, wp)), bits))
    return pts


def clique_construction(k: int):
    """Projectively distorted k-gon plus balancing points; vertices 0..k-1 form K_k."""
    _even_at_least(k, 2, "k")
    clique = list(range(k))
    if k == 2:
        return _two_points(), clique
    for r in range(REFINE_ROUNDS):
        rng = random.Random(1000 * k + r)
        pts = _clique_attempt(k, 24 + 8 * r, Fraction(1, 8 * k), rng)
        if pts is None:
            continue
        cfg = _try_config(pts)
        if cfg is None:
            continue
        g = underlying_geograph(cfg)
        if all(g.has_edge(a, b) for a, b in combinations(clique, 2)):
            return cfg, clique
    raise ConstructionFailed(f"clique_construction({k})")


# ---------------------------------------------------------------------------
# induced subgraphs
# ---------------------------------------------------------------------------


def induced_bound(k2: int, e: int) -> int:
    """Size bound for embedding a graph with ``k2`` (even) vertices and ``e`` edges."""
    k = k2 // 2
    return 2 * k + 2 * e * k - 4 * e + 2 * math.comb(2 * k, 2)


def _signed_difference(pts, i, j) -> int:
    (ax, ay), (bx, by) = pts[i], pts[j]
    left = right = 0
    for t, (x, y) in enumerate(pts):
        if t == i or t == j:
            continue
        s = _det(bx - ax, by - ay, x - ax, y - ay)
        if s > 0:
            left += 1
        elif s < 0:
            right += 1
    return left - right


def _as_graph(g) -> tuple[int, list[tuple[int, int]]]:
    if isinstance(g, nx.Graph):
        nodes = sorted(g.nodes)
        pos = {v: i for i, v in enumerate(nodes)}
        return len(nodes), sorted((min(pos[a], pos[b]), max(pos[a], pos[b])) for a, b in g.edges)
    nv, edges = g
    return nv, sorted((min(a, b), max(a, b)) for a, b in edges)


def induced_embedding(g):
    """Configuration whose graph restricted to the marked vertices equals ``g``.

    ``g`` is a networkx graph or a pair ``(vertex_count, edges)``. Graphs with
    an odd number of vertices get one extra isolated marked vertex whose
    pairs are left unconstrained; it is not reported among the marked ones.
    Returns ``(config, marked)``.
    """
    nv, edges = _as_graph(g)
    if nv < 1:
        raise BadSize("graph needs at least one vertex")
    total = nv + (nv % 2)
    eset = set(edges)
    # on the parabola with x = 2^i: convex position and all chord slopes distinct
    marked_pts = [(Fraction(2**i), Fraction(4**i)) for i in range(total)]
    pairs = [(i, j) for i, j in combinations(range(total), 2) if j < nv]
    pairs.sort(key=lambda p: -(2 ** p[0] + 2 ** p[1]))  # decreasing slope

    def attempt(R: Fraction, eps: Fraction):
        pts = list(marked_pts)
        for i, j in pairs:
            d = _signed_difference(pts, i, j)
            if (i, j) in eset:
                need = abs(d) // 2
                side = 1 if d < 0 else -1
            elif d == 0:
                need, side = 1, 1
            else:
                continue
            if need == 0:
                continue
            (ax, ay), (bx, by) = pts[i], pts[j]
            mid = ((ax + bx) / 2, (ay + by) / 2)
            dv = (bx - ax, by - ay)
            nu = (-dv[1] * side, dv[0] * side)  # left normal times side
            for sgn in (1, -1):
                for t in range(need):
                    along = sgn * (R + t)
                    off = eps * (1 + t) ** 2
                    pts.append((mid[0] + along * dv[0] + off * nu[0], mid[1] + along * dv[1] + off * nu[1]))
            if _signed_difference(pts, i, j) != (0 if (i, j) in eset else 2 * side):
                return None
        return pts

    R, eps = Fraction(16), Fraction(1, 16)
    for _ in range(4 * REFINE_ROUNDS):
        pts = attempt(R, eps)
        if pts is not None:
            cfg = _try_config(pts)
            if cfg is not None:
                gg = underlying_geograph(cfg)
                marked = list(range(nv))
                if induced_edges(gg, marked) == edges:
                    return cfg, marked
        R, eps = R * 4, eps / 4
    raise ConstructionFailed("induced_embedding did not validate")


# ---------------------------------------------------------------------------
# registry used by the command line
# ---------------------------------------------------------------------------


def _edges_of(cfg):
    return [list(e) for e in underlying_geograph(cfg).edges]


def build(kind: str, n: int | None = None, k: int | None = None, four_leaves: bool = False,
          graph: tuple[int, list] | None = None) -> tuple[PointConfig, ConstructionCert]:
    """Run a named generator and return its output with a certificate."""
    if kind == "polygon":
        cfg = convex_polygon(n)
        cert = ConstructionCert(kind, cfg.n, {"n": n}, edge_count=n // 2, degrees=[1] * n, components=n // 2)
    elif kind == "star":
        cfg = star(n)
        cert = ConstructionCert(kind, cfg.n, {"n": n}, edge_count=n - 1,
                                degrees=[n - 1] + [1] * (n - 1), components=1)
    elif kind == "path":
        cfg, path = path_construction(n, four_leaves)
        cert = ConstructionCert(kind, cfg.n, {"n": n, "four_leaves": four_leaves}, path=path)
        if four_leaves:
            cert.degrees = [3] * (n - 4) + [1] * 4
    elif kind == "cycle":
        cfg, cyc = cycle_construction(n)
        cert = ConstructionCert(kind, cfg.n, {"n": n}, cycle=cyc)
    elif kind == "clique":
        cfg, cl = clique_construction(k)
        cert = ConstructionCert(kind, cfg.n, {"k": k}, clique=cl,
                                max_points=k + (2 * k * k - 6 * k if k >= 4 else 0))
    elif kind == "induced":
        nv, edges = graph
        cfg, marked = induced_embedding((nv, edges))
        total = nv + nv % 2
        cert = ConstructionCert(kind, cfg.n, {"vertices": nv, "edges": [list(e) for e in edges]},
                                marked=marked, induced_edges=[list(e) for e in sorted(edges)],
                                max_points=induced_bound(total, len(edges)))
    elif kind == "y":
        base = convex_polygon(n) if n >= 4 else _two_points()
        cfg, expected, _ = y_shape_configs(base, base, base)
        cert = ConstructionCert(kind, cfg.n, {"n": n}, edges=[list(e) for e in expected])
    elif kind == "cross-star":
        # star(k) crossed with a convex polygon on the remaining points
        cfg = pad(star(k), n)
        cert = ConstructionCert(kind, cfg.n, {"n": n, "k": k}, edges=_edges_of(cfg),
                                components=1 + (n - k) // 2)
    else:
        raise ValueError(f"unknown construction {kind!r}")
    bad = cert.check(cfg)
    if bad:
        raise ConstructionFailed(f"{kind}: " + "; ".join(bad))
    return cfg, cert


KINDS = ("polygon", "star", "path", "cycle", "clique", "induced", "y", "cross-star")
