"""Halving lines of a point configuration and its underlying geograph."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, cmp_to_key
from typing import Iterable

import networkx as nx
import numpy as np

from .geometry import PointConfig, convex_hull, cross

EXACT_SEARCH_CAP = 20
CLIQUE_SEARCH_CAP = 128


class SameVertex(ValueError):
    pass


class TooLarge(ValueError):
    pass


@dataclass(frozen=True)
class UnderlyingGeograph:
    """A configuration together with the index pairs of its halving lines.

    Edges are sorted pairs ``(i, j)`` with ``i < j``. The constructor does
    not check that the edges really are halving lines; use
    :func:`underlying_geograph` for that.
    """

    config: PointConfig
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        norm = sorted({(min(i, j), max(i, j)) for i, j in self.edges})
        if any(i == j for i, j in norm):
            raise ValueError("self-loop in edge set")
        object.__setattr__(self, "edges", tuple(norm))

    @property
    def n(self) -> int:
        return self.config.n

    @property
    def E(self) -> int:
        return len(self.edges)

    @cached_property
    def edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.edges)

    def has_edge(self, i: int, j: int) -> bool:
        return (min(i, j), max(i, j)) in self.edge_set

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for i, j in self.edges:
            adj[i].append(j)
            adj[j].append(i)
        return tuple(tuple(sorted(a)) for a in adj)

    @property
    def degrees(self) -> list[int]:
        return [len(a) for a in self.adjacency]

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges)
        return g


def halving_difference(cfg: PointConfig, i: int, j: int) -> int:
    if i == j:
        raise SameVertex(f"vertex {i} given twice")
    row = cfg.signs[i, j]
    return abs(int((row > 0).sum()) - int((row < 0).sum()))


def halving_differences(cfg: PointConfig) -> np.ndarray:
    """Matrix of halving differences for every ordered pair (diagonal = -1)."""
    s = cfg.signs
    diff = np.abs((s > 0).sum(axis=2) - (s < 0).sum(axis=2))
    np.fill_diagonal(diff, -1)
    return diff


def halving_edges_bruteforce(cfg: PointConfig) -> list[tuple[int, int]]:
    """All pairs whose line splits the rest evenly; O(n^3) side counting."""
    diff = halving_differences(cfg)
    ii, jj = np.nonzero(np.triu(diff == 0, k=1))
    return sorted(zip(ii.tolist(), jj.tolist()))


def _half(v) -> int:
    return 0 if (v[1] > 0 or (v[1] == 0 and v[0] > 0)) else 1


def _polar_cmp(u, v) -> int:
    hu, hv = _half(u), _half(v)
    if hu != hv:
        return hu - hv
    c = cross(u[0], u[1], v[0], v[1])
    return -1 if c > 0 else (1 if c < 0 else 0)


_polar_key = cmp_to_key(_polar_cmp)


def halving_edges_sweep(cfg: PointConfig) -> list[tuple[int, int]]:
    """Rotational sweep around each vertex; O(n^2 log n).

    Around vertex i the other points are sorted by polar angle. For the
    directed line i -> j, the points strictly to its left are exactly those
    whose angle lies in the open half turn after j's; a two-pointer pass
    counts them for every j.
    """
    pts = cfg.int_coords
    n = len(pts)
    half = (n - 2) // 2
    edges = set()
    for i in range(n):
        px, py = pts[i]
        vecs = sorted(
            ((pts[j][0] - px, pts[j][1] - py, j) for j in range(n) if j != i),
            key=lambda t: _polar_key(t[:2]),
        )
        m = len(vecs)
        k = 1
        for a in range(m):
            ax, ay, ja = vecs[a]
            k = max(k, a + 1)
            while k < a + m and cross(ax, ay, vecs[k % m][0], vecs[k % m][1]) > 0:
                k += 1
            if k - a - 1 == half:
                edges.add((min(i, ja), max(i, ja)))
    return sorted(edges)


def underlying_geograph(cfg: PointConfig, method: str = "brute") -> UnderlyingGeograph:
    if method == "brute":
        edges = halving_edges_bruteforce(cfg)
    elif method == "sweep":
        edges = halving_edges_sweep(cfg)
    else:
        raise ValueError(f"unknown method {method!r}")
    return UnderlyingGeograph(cfg, tuple(edges))


def degree_sequence(g: UnderlyingGeograph) -> list[int]:
    return sorted(g.degrees, reverse=True)


# ---------------------------------------------------------------------------
# subgraph statistics
# ---------------------------------------------------------------------------


def max_clique(g: UnderlyingGeograph, cap: int = CLIQUE_SEARCH_CAP) -> list[int]:
    if g.n > cap:
        raise TooLarge(f"exact clique search capped at n={cap}")
    best: list[int] = []
    for c in nx.find_cliques(g.to_networkx()):
        c = sorted(c)
        if len(c) > len(best) or (len(c) == len(best) and c < best):
            best = c
    return best


def _longest_cycle_from(adj, start: int) -> list[int]:
    # only cycles whose smallest vertex is ``start``
    best: list[int] = []
    path = [start]
    on = {start}

    def rec(v):
        nonlocal best
        if len(path) >= 3 and start in adj[v] and len(path) > len(best):
            best = list(path)
        for w in adj[v]:
            if w not in on and w > start:
                on.add(w)
                path.append(w)
                rec(w)
                path.pop()
                on.discard(w)

    rec(start)
    return best


def longest_path(g: UnderlyingGeograph, cap: int = EXACT_SEARCH_CAP) -> list[int]:
    """Vertices of a longest simple path (exhaustive, exponential)."""
    if g.n > cap:
        raise TooLarge(f"exact path search capped at n={cap}")
    adj = g.adjacency
    best: list[int] = []
    path: list[int] = []
    on: set[int] = set()

    def rec(v):
        nonlocal best
        path.append(v)
        on.add(v)
        if len(path) > len(best):
            best = list(path)
        for w in adj[v]:
            if w not in on and len(best) < g.n:
                rec(w)
        path.pop()
        on.discard(v)

    for s in range(g.n):
        rec(s)
    return best


def longest_cycle(g: UnderlyingGeograph, cap: int = EXACT_SEARCH_CAP) -> list[int]:
    if g.n > cap:
        raise TooLarge(f"exact cycle search capped at n={cap}")
    best: list[int] = []
    for s in range(g.n):
        c = _longest_cycle_from(g.adjacency, s)
        if len(c) > len(best):
            best = c
    return best


def has_path(g: UnderlyingGeograph, vertices: Iterable[int]) -> bool:
    vs = list(vertices)
    return len(set(vs)) == len(vs) and all(g.has_edge(a, b) for a, b in zip(vs, vs[1:]))


def has_cycle(g: UnderlyingGeograph, vertices: Iterable[int]) -> bool:
    vs = list(vertices)
    return len(vs) >= 3 and has_path(g, vs) and g.has_edge(vs[-1], vs[0])


@dataclass
class GraphStats:
    leaves: int
    components: int
    hull: list[int]
    max_clique: int | None = None
    longest_path: int | None = None
    longest_cycle: int | None = None
    exact: bool = True
    notes: list[str] = field(default_factory=list)


def hull_vertices(cfg: PointConfig) -> list[int]:
    return convex_hull(cfg.int_coords)


def graph_stats(g: UnderlyingGeograph, exact_cap: int = EXACT_SEARCH_CAP) -> GraphStats:
    """Leaf/component/hull counts plus exact clique, path and cycle sizes.

    Above ``exact_cap`` vertices, path and cycle lengths are greedy lower
    bounds and ``exact`` is False.
    """
    degs = g.degrees
    stats = GraphStats(
        leaves=sum(1 for d in degs if d == 1),
        components=nx.number_connected_components(g.to_networkx()),
        hull=hull_vertices(g.config),
    )
    try:
        stats.max_clique = len(max_clique(g))
    except TooLarge as exc:
        stats.notes.append(str(exc))
    if g.n <= exact_cap:
        stats.longest_path = len(longest_path(g, cap=exact_cap))
        cyc = longest_cycle(g, cap=exact_cap)
        stats.longest_cycle = len(cyc)
    else:
        stats.exact = False
        stats.longest_path = len(_greedy_path(g))
        stats.longest_cycle = None
        stats.notes.append(f"n={g.n} above exact cap {exact_cap}: longest_path is a greedy lower bound")
    return stats


def _greedy_path(g: UnderlyingGeograph) -> list[int]:
    best: list[int] = []
    adj = g.adjacency
    for s in range(g.n):
        path, on = [s], {s}
        while True:
            nxt = [w for w in adj[path[-1]] if w not in on]
            if not nxt:
                break
            w = max(nxt, key=lambda u: (sum(1 for x in adj[u] if x not in on), -u))
            path.append(w)
            on.add(w)
        if len(path) > len(best):
            best = path
    return best
