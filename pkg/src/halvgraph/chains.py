"""Chain decomposition of halving edges, wings, straddling span and charging.

All work happens in an integer "frame" where the chosen up direction points
along +y (see :func:`halvgraph.geometry.rotated_frame`). The frame is a
rotation times a positive scale, so clockwise stays clockwise.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from math import comb, gcd

import numpy as np

from .geometry import (
    Direction,
    Point,
    PointConfig,
    bisect_directions,
    cross,
    frame_x,
    generic_up_direction,
    half_turn_rep,
    line_intersection,
    perturb_direction,
    rotated_frame,
)
from .halving import UnderlyingGeograph


class NonGenericDirection(ValueError):
    pass


class NoTangent(RuntimeError):
    pass


class ChainError(RuntimeError):
    pass


@dataclass(frozen=True)
class Chain:
    vertices: tuple[int, ...]

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return tuple((min(a, b), max(a, b)) for a, b in zip(self.vertices, self.vertices[1:]))

    def __len__(self) -> int:
        return len(self.vertices) - 1


@dataclass(frozen=True)
class ChainDecomposition:
    graph: UnderlyingGeograph
    up: Direction
    chains: tuple[Chain, ...]
    order: tuple[int, ...]
    frame: tuple[tuple[int, int], ...] = field(repr=False)

    @cached_property
    def chain_of_edge(self) -> dict[tuple[int, int], int]:
        out: dict[tuple[int, int], int] = {}
        for ci, ch in enumerate(self.chains):
            for e in ch.edges:
                out.setdefault(e, ci)
        return out

    @cached_property
    def rank(self) -> dict[int, int]:
        return {v: r for r, v in enumerate(self.order)}

    def chain_vertex_sets(self) -> list[frozenset[int]]:
        return [frozenset(c.vertices) for c in self.chains]


def _frame_or_raise(g: UnderlyingGeograph, up: Direction) -> list[tuple[int, int]]:
    frame = rotated_frame(g.config, up)
    xs = [x for x, _ in frame]
    if len(set(xs)) != len(xs):
        raise NonGenericDirection(f"direction {up} puts two points on one vertical line")
    return frame


def _trace(frame, adj, start: int) -> list[int]:
    """Follow one chain by rotating a vertical line clockwise from ``start``.

    The rotating line hits the halving edges at the pivot in order of
    decreasing slope; the first one hit extends the chain and the line keeps
    turning about the chain's rightmost vertex. Slopes are taken with the
    edge direction normalised to point right, so they are finite.
    """
    verts = [start]
    pivot = start
    current = None  # slope of the rotating line; None = vertical
    while True:
        px, py = frame[pivot]
        best = None
        for q in adj[pivot]:
            qx, qy = frame[q]
            dx, dy = (qx - px, qy - py) if qx > px else (px - qx, py - qy)
            s = Fraction(dy, dx)
            if (current is None or s < current) and (best is None or s > best[0]):
                best = (s, q)
        if best is None:
            return verts
        current, q = best
        if frame[q][0] < px:
            raise ChainError(f"rotation about {pivot} met edge to {q} on its left ray")
        verts.append(q)
        pivot = q


def decompose_chains(g: UnderlyingGeograph, up: Direction | None = None) -> ChainDecomposition:
    if up is None:
        up = generic_up_direction(g.config)
    frame = _frame_or_raise(g, up)
    order = sorted(range(g.n), key=lambda v: frame[v][0])
    adj = g.adjacency
    chains = tuple(Chain(tuple(_trace(frame, adj, v))) for v in order[: g.n // 2])
    return ChainDecomposition(g, up, chains, tuple(order), tuple(frame))


def reverse_chains(g: UnderlyingGeograph, up: Direction) -> list[Chain]:
    """Chains traced from the right half rotating counterclockwise.

    Mirroring x turns counterclockwise into clockwise, so the forward tracer
    is reused on the mirrored frame.
    """
    frame = _frame_or_raise(g, up)
    mirror = [(-x, y) for x, y in frame]
    order = sorted(range(g.n), key=lambda v: mirror[v][0])
    return [Chain(tuple(reversed(_trace(mirror, g.adjacency, v)))) for v in order[: g.n // 2]]


def reverse_check(g: UnderlyingGeograph, up: Direction) -> bool:
    fwd = {c.vertices for c in decompose_chains(g, up).chains}
    return fwd == {c.vertices for c in reverse_chains(g, up)}


# ---------------------------------------------------------------------------
# wings
# ---------------------------------------------------------------------------


def _line_rep(dx, dy) -> tuple[int, int]:
    g = gcd(dx, dy)
    return half_turn_rep(dx // g, dy // g)


def _angle_lt(u, v) -> bool:
    return cross(u[0], u[1], v[0], v[1]) > 0


def _in_cw_arc(a, b, d) -> bool:
    """Is line direction d strictly inside the clockwise sweep from a to b?"""
    if d == a or d == b:
        return False
    if _angle_lt(b, a):
        return _angle_lt(b, d) and _angle_lt(d, a)
    return _angle_lt(d, a) or _angle_lt(b, d)


@dataclass(frozen=True)
class Wing:
    """Double sector swept clockwise at ``vertex`` from line ``start`` to ``end``.

    Lines are given as half-turn representatives of integer direction
    vectors in the configuration's own (unrotated) integer coordinates.
    """

    vertex: int
    chain: int
    kind: str  # "start", "middle" or "end"
    start: tuple[int, int]
    end: tuple[int, int]

    def contains(self, direction) -> bool:
        return _in_cw_arc(self.start, self.end, _line_rep(*direction))

    def overlaps(self, other: "Wing") -> bool:
        if self.start == other.start:
            return True
        return _in_cw_arc(self.start, self.end, other.start) or _in_cw_arc(other.start, other.end, self.start)


def wings(d: ChainDecomposition) -> list[Wing]:
    pts = d.graph.config.int_coords
    up = _line_rep(d.up.dx, d.up.dy)

    def line(a, b):
        return _line_rep(pts[b][0] - pts[a][0], pts[b][1] - pts[a][1])

    out = []
    for ci, ch in enumerate(d.chains):
        vs = ch.vertices
        for k, v in enumerate(vs):
            start = up if k == 0 else line(vs[k - 1], v)
            end = up if k == len(vs) - 1 else line(v, vs[k + 1])
            kind = "start" if k == 0 else ("end" if k == len(vs) - 1 else "middle")
            out.append(Wing(v, ci, kind, start, end))
    return out


def classify_wings(w1: Wing, w2: Wing) -> str:
    """'coincide', 'share_side', 'disjoint' or 'overlap' (the last is never legal)."""
    if (w1.start, w1.end) == (w2.start, w2.end):
        return "coincide"
    if w1.overlaps(w2):
        return "overlap"
    if w1.end == w2.start or w2.end == w1.start:
        return "share_side"
    return "disjoint"


# ---------------------------------------------------------------------------
# straddling span
# ---------------------------------------------------------------------------

# side assigned to (i, j) for each infinitesimal move of the line i -> j;
# +1 means left of the directed line
PERTURBATIONS = {
    "shift_left": (-1, -1),
    "shift_right": (1, 1),
    "turn_ccw": (1, -1),
    "turn_cw": (-1, 1),
}


@dataclass(frozen=True)
class StraddlingSpan:
    span: int
    pair: tuple[int, int] | None
    kind: str | None
    line_point: Point | None
    line_direction: tuple[Fraction, Fraction] | None
    crossed: tuple[tuple[int, int], ...] = ()


def straddling_span(g: UnderlyingGeograph) -> StraddlingSpan:
    """Maximum number of edges crossed by one line avoiding all vertices.

    Every side-partition realisable by such a line is realised by some line
    through two points nudged by one of the four infinitesimal moves in
    :data:`PERTURBATIONS`, so enumerating those is exhaustive.
    """
    n = g.n
    if not g.edges:
        return StraddlingSpan(0, None, None, None, None)
    signs = g.config.signs
    ea = np.array([a for a, _ in g.edges])
    eb = np.array([b for _, b in g.edges])
    best = (-1, None, None)
    for i, j in combinations(range(n), 2):
        row = signs[i, j].astype(np.int64)
        for kind, (si, sj) in PERTURBATIONS.items():
            row[i], row[j] = si, sj
            count = int((row[ea] * row[eb] < 0).sum())
            if count > best[0]:
                best = (count, (i, j), kind)
    span, (i, j), kind = best
    point, direction, sides = _realise_line(g.config, i, j, kind)
    crossed = tuple(e for e in g.edges if sides[e[0]] * sides[e[1]] < 0)
    assert len(crossed) == span
    return StraddlingSpan(span, (i, j), kind, point, direction, crossed)


def _realise_line(cfg: PointConfig, i: int, j: int, kind: str):
    """Concrete rational line for a symbolic perturbation, with its side vector."""
    pi, pj = cfg[i], cfg[j]
    dx, dy = pj.x - pi.x, pj.y - pi.y
    nx, ny = -dy, dx
    want = cfg.signs[i, j].astype(int).tolist()
    want[i], want[j] = PERTURBATIONS[kind]
    eps = Fraction(1, 2)
    while True:
        if kind.startswith("shift"):
            s = eps if kind == "shift_left" else -eps
            base, d = Point(pi.x + s * nx, pi.y + s * ny), (dx, dy)
        else:
            s = eps if kind == "turn_ccw" else -eps
            base = Point((pi.x + pj.x) / 2, (pi.y + pj.y) / 2)
            d = (dx + s * nx, dy + s * ny)
        sides = []
        for p in cfg:
            c = cross(d[0], d[1], p.x - base.x, p.y - base.y)
            sides.append((c > 0) - (c < 0))
        if sides == want:
            return base, d, sides
        eps /= 2


def straddling_chains_distinct(g: UnderlyingGeograph, span: StraddlingSpan) -> bool:
    """With up along the witness line, straddling edges land in distinct chains."""
    if span.span == 0:
        return True
    base = Direction.of(*span.line_direction)
    up = perturb_direction(base, lambda u: _generic(g.config, u), region=None)
    d = decompose_chains(g, up)
    owners = [d.chain_of_edge[e] for e in span.crossed]
    return len(set(owners)) == len(owners)


# ---------------------------------------------------------------------------
# crossings and charging
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Crossing:
    e1: tuple[int, int]
    e2: tuple[int, int]
    point: Point


def edge_crossings(g: UnderlyingGeograph) -> list[Crossing]:
    """Proper crossings between halving edges with four distinct endpoints."""
    s = g.config.signs
    pts = g.config.points
    out = []
    for (a, b), (c, d) in combinations(g.edges, 2):
        if len({a, b, c, d}) < 4:
            continue
        if s[a, b, c] * s[a, b, d] < 0 and s[c, d, a] * s[c, d, b] < 0:
            out.append(Crossing((a, b), (c, d), line_intersection(pts[a], pts[b], pts[c], pts[d])))
    return out


def geometric_crossings(d: ChainDecomposition) -> list[Crossing]:
    owner = d.chain_of_edge
    return [c for c in edge_crossings(d.graph) if owner[c.e1] != owner[c.e2]]


@dataclass(frozen=True)
class ChargedTangent:
    pair: tuple[int, int]
    crossing: Crossing
    up: Direction


def _upper_hull(frame, verts: list[int]) -> list[int]:
    hull: list[int] = []
    for v in sorted(verts, key=lambda u: frame[u][0]):
        while len(hull) >= 2:
            (ax, ay), (bx, by), (cx, cy) = frame[hull[-2]], frame[hull[-1]], frame[v]
            if cross(bx - ax, by - ay, cx - ax, cy - ay) >= 0:
                hull.pop()
            else:
                break
        hull.append(v)
    return hull


def charged_tangent(d: ChainDecomposition, c: Crossing) -> ChargedTangent:
    """Common upper tangent of the two crossing chains above the crossing."""
    owner = d.chain_of_edge
    si, ti = owner[c.e1], owner[c.e2]
    if si == ti:
        raise NoTangent(f"edges {c.e1} and {c.e2} lie in one chain")
    S, T = set(d.chains[si].vertices), set(d.chains[ti].vertices)
    hull = _upper_hull(d.frame, list(S | T))
    X = frame_x(c.point, d.up, d.graph.config.denominator)
    for a, b in zip(hull, hull[1:]):
        xa, xb = d.frame[a][0], d.frame[b][0]
        if X == xa or X == xb:
            raise NonGenericDirection("crossing shares a vertical line with a vertex")
        if xa < X < xb:
            if (a in S and b in T) or (a in T and b in S):
                return ChargedTangent((min(a, b), max(a, b)), c, d.up)
            raise NoTangent(f"hull edge {(a, b)} above crossing joins a single chain")
    raise NoTangent("no hull edge spans the crossing")


def _generic(cfg: PointConfig, up: Direction, points=()) -> bool:
    frame = rotated_frame(cfg, up)
    xs = {x for x, _ in frame}
    if len(xs) != len(frame):
        return False
    den = cfg.denominator
    return all(frame_x(p, up, den) not in xs for p in points)


def bisector_orientations(cfg: PointConfig, c: Crossing, avoid=()) -> list[Direction]:
    """Four up directions bisecting the angles formed by the crossing edges.

    Each is nudged if necessary so that it is generic for ``cfg`` (and puts
    no point of ``avoid`` on a vertex's vertical), staying inside its angle.
    """
    p = cfg.points
    u = (p[c.e1[1]].x - p[c.e1[0]].x, p[c.e1[1]].y - p[c.e1[0]].y)
    v = (p[c.e2[1]].x - p[c.e2[0]].x, p[c.e2[1]].y - p[c.e2[0]].y)
    if cross(u[0], u[1], v[0], v[1]) < 0:
        u, v = v, u
    neg = lambda w: (-w[0], -w[1])  # noqa: E731
    rays = [u, v, neg(u), neg(v)]
    avoid = tuple(avoid) or (c.point,)
    out = []
    for k in range(4):
        lo, hi = rays[k], rays[(k + 1) % 4]
        b = Direction.of(*bisect_directions(lo, hi))
        region = (_int_vec(lo), _int_vec(hi))
        out.append(perturb_direction(b, lambda w: _generic(cfg, w, avoid), region=region))
    return out


def _int_vec(v) -> tuple[int, int]:
    d = Direction.of(*v)
    return (d.dx, d.dy)


@dataclass
class ChargingReport:
    crossings: int
    orientations: int
    charges: dict[int, set[tuple[int, int]]]
    violations: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def random_generic_direction(cfg: PointConfig, rng: random.Random, avoid=()) -> Direction:
    while True:
        dx, dy = rng.randint(-10**6, 10**6), rng.randint(-10**6, 10**6)
        if (dx, dy) == (0, 0):
            continue
        d = Direction.of(dx, dy)
        if _generic(cfg, d, avoid):
            return d


def verify_charging(g: UnderlyingGeograph, extra_orientations: int = 16, seed: int = 0) -> ChargingReport:
    """Check tangent charging over sampled orientations.

    Every sampled orientation (the four bisectors of every crossing plus
    ``extra_orientations`` random ones) charges every crossing. Checked:
    injectivity within one orientation, four distinct bisector charges per
    crossing, disjoint charge sets for distinct crossings, and
    ``4 * crossings <= C(n, 2)``.
    """
    cfg = g.config
    crossings = edge_crossings(g)
    avoid = tuple(c.point for c in crossings)
    orients: list[tuple[str, Direction]] = []
    bis: dict[int, list[Direction]] = {}
    for ci, c in enumerate(crossings):
        bis[ci] = bisector_orientations(cfg, c, avoid)
        orients += [(f"bisector[{ci}][{k}]", b) for k, b in enumerate(bis[ci])]
    rng = random.Random(seed)
    for r in range(extra_orientations if crossings else 0):
        orients.append((f"random[{r}]", random_generic_direction(cfg, rng, avoid)))

    report = ChargingReport(len(crossings), len(orients), {ci: set() for ci in range(len(crossings))})
    if 4 * len(crossings) > comb(g.n, 2):
        report.violations.append({"check": "crossing_count", "witness": len(crossings)})

    per_dir: dict[Direction, list[tuple[int, int]]] = {}
    for label, up in orients:
        if up in per_dir:
            continue
        d = decompose_chains(g, up)
        pairs = []
        for ci, c in enumerate(crossings):
            try:
                pairs.append(charged_tangent(d, c).pair)
            except (NoTangent, NonGenericDirection) as exc:
                report.violations.append({"check": "tangent", "witness": f"{label}: crossing {ci}: {exc}"})
                pairs.append(None)
        per_dir[up] = pairs
        seen: dict[tuple[int, int], int] = {}
        for ci, pr in enumerate(pairs):
            if pr is None:
                continue
            report.charges[ci].add(pr)
            if pr in seen:
                report.violations.append(
                    {"check": "injective", "witness": f"{label}: crossings {seen[pr]} and {ci} both charge {pr}"}
                )
            seen[pr] = ci

    for ci, dirs in bis.items():
        got = [per_dir[u][ci] for u in dirs]
        if None not in got and len(set(got)) != 4:
            report.violations.append({"check": "four_bisectors", "witness": f"crossing {ci}: {got}"})

    for c1, c2 in combinations(range(len(crossings)), 2):
        common = report.charges[c1] & report.charges[c2]
        if common:
            report.violations.append(
                {"check": "disjoint", "witness": f"crossings {c1} and {c2} share {sorted(common)}"}
            )
    return report


# ---------------------------------------------------------------------------
# structural checks
# ---------------------------------------------------------------------------


def chain_violations(d: ChainDecomposition) -> list[tuple[str, str]]:
    """Every chain property that fails for ``d`` as (name, witness) pairs."""
    g = d.graph
    n = g.n
    frame = d.frame
    bad: list[tuple[str, str]] = []
    if len(d.chains) != n // 2:
        bad.append(("chain_count", f"{len(d.chains)} chains for n={n}"))
    seen: dict[tuple[int, int], int] = {}
    for ci, ch in enumerate(d.chains):
        for e in ch.edges:
            if e in seen:
                bad.append(("chain_partition", f"edge {e} in chains {seen[e]} and {ci}"))
            seen[e] = ci
    missing = set(g.edges) - set(seen)
    extra = set(seen) - set(g.edges)
    if missing or extra:
        bad.append(("chain_partition", f"missing {sorted(missing)} extra {sorted(extra)}"))
    left = set(d.order[: n // 2])
    for ci, ch in enumerate(d.chains):
        vs = ch.vertices
        if len(ch) > n // 2:
            bad.append(("chain_length", f"chain {ci} has {len(ch)} edges"))
        if len(ch) < 1:
            bad.append(("chain_length", f"chain {ci} is empty"))
        if any(frame[a][0] >= frame[b][0] for a, b in zip(vs, vs[1:])):
            bad.append(("chain_monotone", f"chain {ci} {vs}"))
        for a, b, c in zip(vs, vs[1:], vs[2:]):
            (ax, ay), (bx, by), (cx, cy) = frame[a], frame[b], frame[c]
            if cross(bx - ax, by - ay, cx - bx, cy - by) >= 0:
                bad.append(("chain_concave", f"chain {ci} at {b}"))
        if vs[0] not in left or vs[-1] in left:
            bad.append(("chain_endpoints", f"chain {ci} runs {vs[0]} -> {vs[-1]}"))
    ends = sorted(v for ch in d.chains for v in (ch.vertices[0], ch.vertices[-1]))
    if ends != list(range(n)):
        bad.append(("chain_endpoints", "not every vertex ends exactly one chain"))

    ws = wings(d)
    pts = g.config.int_coords
    by_vertex: dict[int, list[Wing]] = {}
    for w in ws:
        by_vertex.setdefault(w.vertex, []).append(w)
        for q in g.adjacency[w.vertex]:
            if w.contains((pts[q][0] - pts[w.vertex][0], pts[q][1] - pts[w.vertex][1])):
                bad.append(("wing_empty", f"edge {w.vertex}-{q} inside wing of chain {w.chain}"))
    for v, group in by_vertex.items():
        for w1, w2 in combinations(group, 2):
            if w1.overlaps(w2):
                bad.append(("windmill", f"wings of chains {w1.chain},{w2.chain} overlap at {v}"))

    degs = g.degrees
    for i, v in enumerate(d.order[: n // 2], start=1):
        if degs[v] > 2 * i - 1:
            bad.append(("positional_degree", f"{i}-th from left (vertex {v}) has degree {degs[v]}"))
    for i, v in enumerate(reversed(d.order[n // 2:]), start=1):
        if degs[v] > 2 * i - 1:
            bad.append(("positional_degree", f"{i}-th from right (vertex {v}) has degree {degs[v]}"))

    if {c.vertices for c in d.chains} != {c.vertices for c in reverse_chains(g, d.up)}:
        bad.append(("reverse_check", f"up={d.up}"))
    return bad


def cross_orientation_violations(d1: ChainDecomposition, d2: ChainDecomposition) -> list[tuple[str, str]]:
    """Relations between chains built under two orientations.

    Chains sharing an edge traversed the same way agree on their common
    stretch; traversed opposite ways they lie on opposite sides of it.
    Middle wings at a common vertex coincide, share a side or are disjoint.
    """
    pts = d1.graph.config.int_coords
    bad: list[tuple[str, str]] = []
    where2: dict[tuple[int, int], tuple[int, int]] = {}
    for ci, ch in enumerate(d2.chains):
        for k in range(len(ch)):
            where2[(ch.vertices[k], ch.vertices[k + 1])] = (ci, k)
    for c1, ch1 in enumerate(d1.chains):
        v1 = ch1.vertices
        for k in range(len(ch1)):
            a, b = v1[k], v1[k + 1]
            if (a, b) in where2:
                c2, k2 = where2[(a, b)]
                v2 = d2.chains[c2].vertices
                off = k2 - k
                for t in range(len(v1)):
                    if 0 <= t + off < len(v2) and v1[t] != v2[t + off]:
                        bad.append(("shared_edge_same", f"chains {c1}/{c2} split at {v1[t]} vs {v2[t + off]}"))
                        break
            elif (b, a) in where2:
                c2, _ = where2[(b, a)]
                v2 = d2.chains[c2].vertices
                (ax, ay), (bx, by) = pts[a], pts[b]

                def side(w):
                    c = cross(bx - ax, by - ay, pts[w][0] - ax, pts[w][1] - ay)
                    return (c > 0) - (c < 0)

                s1 = {side(w) for w in v1 if w not in (a, b)}
                s2 = {side(w) for w in v2 if w not in (a, b)}
                if len(s1) > 1 or len(s2) > 1 or (s1 and s2 and s1 == s2):
                    bad.append(("shared_edge_opposite", f"edge {a}-{b}: sides {s1} and {s2}"))
    m1 = {(w.vertex, w.chain): w for w in wings(d1) if w.kind == "middle"}
    m2 = [w for w in wings(d2) if w.kind == "middle"]
    by_v: dict[int, list[Wing]] = {}
    for w in m1.values():
        by_v.setdefault(w.vertex, []).append(w)
    for w2 in m2:
        for w1 in by_v.get(w2.vertex, []):
            if classify_wings(w1, w2) == "overlap":
                bad.append(("middle_wings", f"vertex {w2.vertex}: chains {w1.chain}/{w2.chain}"))
    return bad
