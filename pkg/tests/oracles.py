"""Slow, independent reference implementations used to cross-check the package.

None of these import production algorithms beyond the data types, so a bug
in a shared helper cannot hide in both places.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction
from itertools import combinations


def _coords(cfg):
    return [(Fraction(p.x), Fraction(p.y)) for p in cfg]


def _orient(a, b, c):
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


def halving_edges(cfg):
    pts = _coords(cfg)
    n = len(pts)
    out = []
    for i, j in combinations(range(n), 2):
        left = sum(1 for k in range(n) if k not in (i, j) and _orient(pts[i], pts[j], pts[k]) > 0)
        if 2 * left == n - 2:
            out.append((i, j))
    return out


def proper_crossings(cfg, edges):
    pts = _coords(cfg)
    count = 0
    for (a, b), (c, d) in combinations(edges, 2):
        if len({a, b, c, d}) < 4:
            continue
        p, q, r, s = pts[a], pts[b], pts[c], pts[d]
        if _orient(p, q, r) * _orient(p, q, s) < 0 and _orient(r, s, p) * _orient(r, s, q) < 0:
            count += 1
    return count


def hull_indices(cfg):
    """Vertices of the convex hull, by testing every point against every triangle."""
    pts = _coords(cfg)
    n = len(pts)
    inside = set()
    for a, b, c in combinations(range(n), 3):
        o = _orient(pts[a], pts[b], pts[c])
        for k in range(n):
            if k in (a, b, c):
                continue
            s = [_orient(pts[a], pts[b], pts[k]), _orient(pts[b], pts[c], pts[k]), _orient(pts[c], pts[a], pts[k])]
            if all(v * o > 0 for v in s):
                inside.add(k)
    return sorted(set(range(n)) - inside)


# -- chains ------------------------------------------------------------------


def float_chains(cfg, edges, up):
    """Rotating-line chains traced with floating slopes in the rotated frame."""
    ux, uy = float(up.dx), float(up.dy)
    frame = [(float(p.x) * uy - float(p.y) * ux, float(p.x) * ux + float(p.y) * uy) for p in cfg]
    n = len(frame)
    adj = {v: set() for v in range(n)}
    for a, b in edges:
        adj[a].add(b)
        adj[b].add(a)
    order = sorted(range(n), key=lambda v: frame[v][0])
    chains = []
    for start in order[: n // 2]:
        v, slope, path = start, math.inf, [start]
        while True:
            best = None
            for w in adj[v]:
                dx = frame[w][0] - frame[v][0]
                if dx <= 0:
                    continue
                s = (frame[w][1] - frame[v][1]) / dx
                if s < slope and (best is None or s > best[0]):
                    best = (s, w)
            if best is None:
                break
            slope, v = best
            path.append(v)
        chains.append(tuple(path))
    return chains


# -- straddling span ---------------------------------------------------------


def _angle_cells(cfg):
    """One float direction inside every cell of the projection-order arrangement."""
    pts = [(float(p.x), float(p.y)) for p in cfg]
    crit = set()
    for (ax, ay), (bx, by) in combinations(pts, 2):
        # projections of a and b tie when nu is perpendicular to b - a
        t = math.atan2(bx - ax, -(by - ay))
        for s in (t, t + math.pi):
            crit.add(round(s % (2 * math.pi), 12))
    crit = sorted(crit)
    mids = [(a + b) / 2 for a, b in zip(crit, crit[1:])]
    mids.append(((crit[-1] + crit[0] + 2 * math.pi) / 2) % (2 * math.pi))
    return [(math.cos(t), math.sin(t)) for t in mids]


def _cut_counts(pts, edges, nu):
    proj = [x * nu[0] + y * nu[1] for x, y in pts]
    order = sorted(range(len(pts)), key=proj.__getitem__)
    rank = {v: r for r, v in enumerate(order)}
    best = 0
    for cut in range(1, len(pts)):
        best = max(best, sum(1 for a, b in edges if (rank[a] < cut) != (rank[b] < cut)))
    return best


def span_oracle(cfg, edges, random_lines=400, seed=0):
    """Largest number of edges separated by one vertex-avoiding line.

    Every cell of the direction arrangement is visited, then random lines are
    thrown on top so the sweep is also checked by blind sampling.
    """
    pts = [(float(p.x), float(p.y)) for p in cfg]
    best = max(_cut_counts(pts, edges, nu) for nu in _angle_cells(cfg))
    rng = random.Random(seed)
    xs = [x for x, _ in pts]
    ys = [y for _, y in pts]
    for _ in range(random_lines):
        t = rng.uniform(0, 2 * math.pi)
        nu = (math.cos(t), math.sin(t))
        proj = [x * nu[0] + y * nu[1] for x, y in pts]
        c = rng.uniform(min(proj), max(proj))
        side = [v > c for v in proj]
        best = max(best, sum(1 for a, b in edges if side[a] != side[b]))
    del xs, ys
    return best


def ordered_feasible(cfg, a, b, k):
    """Is there a direction with a strictly first and b in position k (1-based)?"""
    pts = [(float(p.x), float(p.y)) for p in cfg]
    for nu in _angle_cells(cfg):
        proj = [x * nu[0] + y * nu[1] for x, y in pts]
        order = sorted(range(len(pts)), key=proj.__getitem__)
        if order[0] == a and order.index(b) == k - 1:
            return True
    return False


# -- degree sequences ---------------------------------------------------------


def graphical_bruteforce(seq):
    n = len(seq)
    pairs = list(combinations(range(n), 2))
    target = list(seq)
    for mask in range(1 << len(pairs)):
        deg = [0] * n
        for bit, (i, j) in enumerate(pairs):
            if mask >> bit & 1:
                deg[i] += 1
                deg[j] += 1
        if deg == target:
            return True
    return False


def upper_bound_float(n):
    return (135 / 16 * n * n * n * (n - 1) / 2) ** (1 / 3)
