"""Searching for configurations with many halving lines, and moving one
configuration into another one point at a time."""

from __future__ import annotations

import json
import math
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, islice

import numpy as np

from .geometry import GeometryError, Point, PointConfig, cross, orientation_signs, random_config
from .halving import underlying_geograph
from .verification import reference_max


class BadSize(ValueError):
    pass


class Unreachable(RuntimeError):
    pass


@dataclass
class SearchResult:
    best: int
    witness: PointConfig | None
    examined: int
    params: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        from .pointsfile import format_points

        return {
            "best": self.best,
            "examined": self.examined,
            "params": self.params,
            "witness": format_points(self.witness) if self.witness is not None else None,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)


# ---------------------------------------------------------------------------
# exhaustive grid search
# ---------------------------------------------------------------------------


def _grid(grid_size: int) -> list[tuple[int, int]]:
    return [(x, y) for x in range(grid_size) for y in range(grid_size)]


def _subset_edges(signs: np.ndarray, subset: tuple[int, ...]) -> int | None:
    """Halving-line count of the subset, or None when it is not in general position."""
    idx = np.array(subset)
    s = signs[np.ix_(idx, idx, idx)]
    m = len(subset)
    if m >= 3:
        zeros = (s == 0).sum()
        # only the 3m^2 - 2m entries with a repeated index are allowed to vanish
        if zeros != 3 * m * m - 2 * m:
            return None
    diff = (s > 0).sum(axis=2) - (s < 0).sum(axis=2)
    iu = np.triu_indices(m, 1)
    return int((diff[iu] == 0).sum())


def _scan(args) -> tuple[int, tuple[int, ...] | None, int]:
    n, grid_size, lo, hi = args
    pts = _grid(grid_size)
    signs = orientation_signs(pts)
    best, wit, seen = -1, None, 0
    for sub in islice(combinations(range(len(pts)), n), lo, hi):
        e = _subset_edges(signs, sub)
        if e is None:
            continue
        seen += 1
        if e > best:
            best, wit = e, sub
    return best, wit, seen


def _merge(parts):
    # max count first, then the lexicographically least witness
    best, wit, seen = -1, None, 0
    for b, w, s in parts:
        seen += s
        if w is None:
            continue
        if b > best or (b == best and w < wit):
            best, wit = b, w
    return best, wit, seen


def grid_exhaustive(n: int, grid_size: int, workers: int = 1, chunks: int | None = None) -> SearchResult:
    """Best halving-line count over all general-position n-subsets of a grid.

    Subsets are enumerated in lexicographic order of grid index, so the
    witness is the lexicographically least subset achieving the maximum.
    With ``workers > 1`` the rank range is split across processes; the merge
    makes the result identical to a serial run.
    """
    if n < 2 or n % 2 or grid_size < 1 or grid_size * grid_size < n:
        raise BadSize(f"need even n >= 2 and grid_size^2 >= n, got n={n}, grid={grid_size}")
    total = math.comb(grid_size * grid_size, n)
    chunks = chunks or max(1, workers * 4)
    bounds = [total * i // chunks for i in range(chunks + 1)]
    tasks = [(n, grid_size, bounds[i], bounds[i + 1]) for i in range(chunks)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_scan, tasks))
    else:
        parts = [_scan(t) for t in tasks]
    best, wit, seen = _merge(parts)
    pts = _grid(grid_size)
    witness = PointConfig.from_coords([pts[i] for i in wit]) if wit is not None else None
    result = SearchResult(max(best, 0), witness, seen, {"n": n, "grid_size": grid_size, "mode": "exhaustive"})
    _check_result(result, n)
    return result


def _check_result(result: SearchResult, n: int) -> None:
    if result.witness is not None:
        got = underlying_geograph(result.witness).E
        if got != result.best:
            raise AssertionError(f"witness has {got} halving lines, reported {result.best}")
    ref = reference_max(n)
    if ref is not None and result.best > ref:
        raise AssertionError(f"search found {result.best} > published maximum {ref}")


# ---------------------------------------------------------------------------
# randomized hill climbing
# ---------------------------------------------------------------------------


def random_search(n: int, trials: int, seed: int, bound: int = 64, restart: int = 500) -> SearchResult:
    """Hill-climb on integer configurations by moving one point at a time.

    A move is accepted when the count does not drop. After ``restart``
    trials without improvement the walk restarts from a fresh sample.
    Deterministic for a given seed.
    """
    if n < 2 or n % 2:
        raise BadSize(f"n must be even and >= 2, got {n}")
    rng = random.Random(seed)
    pts = list(random_config(n, rng, bound).int_coords)
    cur = underlying_geograph(PointConfig.from_coords(pts)).E
    best, witness = cur, list(pts)
    stale = 0
    for _ in range(trials):
        i = rng.randrange(n)
        if rng.random() < 0.5:
            step = max(1, bound // 8)
            cand = (pts[i][0] + rng.randint(-step, step), pts[i][1] + rng.randint(-step, step))
        else:
            cand = (rng.randint(-bound, bound), rng.randint(-bound, bound))
        trial = pts[:i] + [cand] + pts[i + 1:]
        try:
            e = underlying_geograph(PointConfig.from_coords(trial)).E
        except GeometryError:
            continue
        if e >= cur:
            pts, cur = trial, e
        if e > best:
            best, witness, stale = e, list(trial), 0
        else:
            stale += 1
        if stale >= restart:
            pts = list(random_config(n, rng, bound).int_coords)
            cur = underlying_geograph(PointConfig.from_coords(pts)).E
            stale = 0
            if cur > best:
                best, witness = cur, list(pts)
    result = SearchResult(best, PointConfig.from_coords(witness), trials,
                          {"n": n, "trials": trials, "seed": seed, "mode": "random"})
    _check_result(result, n)
    return result


# ---------------------------------------------------------------------------
# interpolation
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MotionEvent:
    leg: int
    t: Fraction
    pair: tuple[int, int]  # the two fixed points the mover becomes collinear with


@dataclass
class MotionTrace:
    vertex: int
    waypoints: list[Point]
    events: list[MotionEvent]
    counts: list[int]  # counts[0] before moving, counts[k] just after event k

    def to_dict(self) -> dict:
        from .pointsfile import format_scalar

        return {
            "vertex": self.vertex,
            "waypoints": [[format_scalar(p.x), format_scalar(p.y)] for p in self.waypoints],
            "events": [{"leg": e.leg, "t": format_scalar(e.t), "pair": list(e.pair)} for e in self.events],
            "counts": self.counts,
        }


def _leg_events(pts: list[Point], i: int, a: Point, b: Point) -> list[tuple[Fraction, tuple[int, int]]]:
    """Parameters t in (0, 1] where a + t(b - a) is collinear with two fixed points."""
    out = []
    others = [j for j in range(len(pts)) if j != i]
    dx, dy = b.x - a.x, b.y - a.y
    for j, k in combinations(others, 2):
        pj, pk = pts[j], pts[k]
        ex, ey = pk.x - pj.x, pk.y - pj.y
        c0 = cross(ex, ey, a.x - pj.x, a.y - pj.y)
        c1 = cross(ex, ey, dx, dy)
        if c1 == 0:
            if c0 == 0:
                out.append((Fraction(0), (j, k)))
            continue
        t = -c0 / c1
        if 0 <= t <= 1:
            out.append((t, (j, k)))
    return sorted(out)


def _count(pts: list[Point]) -> int:
    return underlying_geograph(PointConfig(tuple(pts))).E


def _plan(pts: list[Point], i: int, start: Point, target: Point, rng: random.Random, budget: int):
    """Waypoints from start to target whose legs meet collinearities one at a time."""
    def clean(path):
        evs = []
        for leg, (a, b) in enumerate(zip(path, path[1:])):
            e = _leg_events(pts, i, a, b)
            ts = [t for t, _ in e]
            if any(t == 0 for t in ts) or len(set(ts)) != len(ts):
                return None
            if any(t == 1 for t in ts):
                return None
            evs.append(e)
        return evs

    path = [start, target]
    evs = clean(path)
    tries = 0
    while evs is None:
        tries += 1
        if tries > budget:
            raise Unreachable(f"no generic path for vertex {i}")
        mid = Point((start.x + target.x) / 2, (start.y + target.y) / 2)
        dx, dy = target.x - start.x, target.y - start.y
        s = Fraction(rng.randint(1, 1 << 12), 1 << 14) * rng.choice((-1, 1))
        path = [start, Point(mid.x - s * dy, mid.y + s * dx), target]
        evs = clean(path)
    return path, evs


def _point_at(a: Point, b: Point, t: Fraction) -> Point:
    return Point(a.x + t * (b.x - a.x), a.y + t * (b.y - a.y))


def interpolate(c1: PointConfig, c2: PointConfig, seed: int = 0, budget: int = 64) -> list[MotionTrace]:
    """Move the points of ``c1`` to those of ``c2`` in index order.

    Each move follows a straight segment, or a two-leg detour when the segment
    would be collinear with two pairs at once or would end on a line through
    two fixed points. Counts are recomputed exactly between consecutive events.
    """
    if c1.n != c2.n:
        raise ValueError("configurations differ in size")
    rng = random.Random(seed)
    pts = list(c1.points)
    traces = []
    for i in range(c1.n):
        start, target = pts[i], c2[i]
        if start == target:
            continue
        probe = pts[:i] + [target] + pts[i + 1:]
        try:
            PointConfig(tuple(probe))
        except GeometryError as exc:
            raise Unreachable(f"intermediate configuration after moving {i} is degenerate: {exc}") from exc
        path, evs = _plan(pts, i, start, target, rng, budget)
        trace = MotionTrace(i, path[1:-1], [], [_count(pts)])
        for leg, (a, b) in enumerate(zip(path, path[1:])):
            ts = [t for t, _ in evs[leg]] + [Fraction(1)]
            for k, (t, pair) in enumerate(evs[leg]):
                probe_t = (t + ts[k + 1]) / 2
                pts[i] = _point_at(a, b, probe_t)
                trace.events.append(MotionEvent(leg, t, pair))
                trace.counts.append(_count(pts))
            pts[i] = b
        traces.append(trace)
    return traces


def counts_realised(traces: list[MotionTrace]) -> set[int]:
    return {c for tr in traces for c in tr.counts}
