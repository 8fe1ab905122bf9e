"""Acceptance criteria 1-13.

Each criterion prints one PASS/FAIL line (collected into the pytest terminal
summary). Run directly with ``python tests/test_acceptance.py`` for the same
lines without pytest.
"""

from __future__ import annotations

import functools
import random
import sys
import time
from itertools import combinations
from math import comb
from pathlib import Path

import networkx as nx

sys.path.insert(0, str(Path(__file__).parent))
import oracles  # noqa: E402

from halvgraph.chains import (  # noqa: E402
    chain_violations,
    decompose_chains,
    straddling_span,
    verify_charging,
)
from halvgraph.constructions import (  # noqa: E402
    build,
    clique_construction,
    convex_polygon,
    cycle_construction,
    induced_bound,
    induced_edges,
    induced_embedding,
    path_construction,
    star,
    y_shape_configs,
)
from halvgraph.geometry import Direction, PointConfig, generic_up_direction, is_generic_direction, random_config  # noqa: E402
from halvgraph.halving import UnderlyingGeograph, has_cycle, has_path, underlying_geograph  # noqa: E402
from halvgraph.search import counts_realised, grid_exhaustive, interpolate, random_search  # noqa: E402
from halvgraph.verification import edge_bound_holds, new_upper_bound, reference_max, verify_all, verify_geograph  # noqa: E402

RESULTS: list[str] = []
# every (n, E) seen by any criterion; criterion 11 checks the bound on all of them
SEEN: set[tuple[int, int]] = set()


def _graph(cfg):
    g = underlying_geograph(cfg)
    SEEN.add((g.n, g.E))
    return g


def criterion(number: int, limit: float):
    def wrap(fn):
        @functools.wraps(fn)
        def inner():
            t0 = time.perf_counter()
            failures = fn()
            dt = time.perf_counter() - t0
            if dt > limit:
                failures.append(f"took {dt:.1f}s > {limit:g}s")
            status = "PASS" if not failures else "FAIL"
            detail = "; ".join(failures[:3])
            line = f"criterion {number:2d}: {status} ({dt:.2f}s){'  ' + detail if detail else ''}"
            RESULTS.append(line)
            print(line)
            assert not failures, detail
        inner.number = number
        return inner
    return wrap


@functools.lru_cache(maxsize=None)
def generator_corpus() -> tuple[tuple[str, PointConfig], ...]:
    out = []
    for n in range(4, 21, 2):
        out += [(f"polygon{n}", convex_polygon(n)), (f"star{n}", star(n))]
    for n in range(4, 17, 2):
        out.append((f"path{n}", path_construction(n)[0]))
    out.append(("path10-four", path_construction(10, four_leaves=True)[0]))
    for n in (6, 12, 18):
        out.append((f"cycle{n}", cycle_construction(n)[0]))
    for k in (2, 4, 6):
        out.append((f"clique{k}", clique_construction(k)[0]))
    out.append(("y18", build("y", n=18)[0]))
    out.append(("cross-star10", build("cross-star", n=10, k=4)[0]))
    out.append(("induced-c4", build("induced", graph=(4, [(0, 1), (1, 2), (2, 3), (0, 3)]))[0]))
    return tuple(out)


def random_corpus(per_size: int, sizes, seed: int, bound: int = 10**6):
    rng = random.Random(seed)
    return [random_config(n, rng, bound) for n in sizes for _ in range(per_size)]


# ---------------------------------------------------------------------------


@criterion(1, 1.0)
def test_c01_polygon_and_star():
    bad = []
    for n in range(4, 21, 2):
        g = _graph(convex_polygon(n))
        if g.E != n // 2:
            bad.append(f"polygon({n}) E={g.E}")
        s = _graph(star(n))
        if s.E != n - 1 or max(s.degrees) != n - 1:
            bad.append(f"star({n}) E={s.E} max deg={max(s.degrees)}")
    return bad


@criterion(2, 1.0)
def test_c02_four_points():
    bad = []
    quad = _graph(PointConfig.from_coords([(0, 0), (4, 0), (4, 4), (0, 4)]))
    tri = _graph(PointConfig.from_coords([(0, 0), (6, 0), (0, 6), (1, 1)]))
    if quad.E != 2:
        bad.append(f"quadrilateral E={quad.E}")
    if tri.E != 3:
        bad.append(f"triangle+interior E={tri.E}")
    return bad


@criterion(3, 120.0)
def test_c03_invariant_suite():
    bad = []
    for name, cfg in generator_corpus():
        rep = verify_all(cfg)
        SEEN.add((cfg.n, underlying_geograph(cfg).E))
        if not rep.ok:
            bad.append(f"{name}: {rep.failures}")
    for cfg in random_corpus(1000, range(4, 17, 2), seed=3):
        g = _graph(cfg)
        rep = verify_geograph(g, level="basic")
        if not rep.ok:
            bad.append(f"random n={cfg.n}: {rep.failures}")
    # negative controls: tampered edge sets must be caught
    rng = random.Random(5)
    for cfg in random_corpus(50, (6, 8, 10), seed=7):
        g = underlying_geograph(cfg)
        drop = rng.randrange(g.E)
        missing = UnderlyingGeograph(cfg, g.edges[:drop] + g.edges[drop + 1:])
        extra_pair = next(p for p in combinations(range(cfg.n), 2) if p not in g.edges)
        extra = UnderlyingGeograph(cfg, tuple(sorted(set(g.edges) | {extra_pair})))
        for label, fake in (("missing", missing), ("extra", extra)):
            if verify_geograph(fake, level="basic").ok:
                bad.append(f"negative control ({label}) passed")
    return bad


@criterion(4, 120.0)
def test_c04_chains():
    bad = []
    corpus = [cfg for _, cfg in generator_corpus()] + random_corpus(60, range(4, 17, 2), seed=11)
    rng = random.Random(4)
    for cfg in corpus:
        g = _graph(cfg)
        ups = [generic_up_direction(cfg)]
        while len(ups) < 3:
            dx, dy = rng.randint(-10**6, 10**6), rng.randint(-10**6, 10**6)
            if (dx or dy) and is_generic_direction(cfg, Direction(dx, dy)):
                ups.append(Direction(dx, dy))
        for up in ups:
            d = decompose_chains(g, up)
            v = chain_violations(d)
            if v:
                bad.append(f"n={cfg.n} up={up}: {v[:2]}")
    return bad


@criterion(5, 30.0)
def test_c05_y_shape():
    bad = []
    rng = random.Random(21)
    for trial in range(20):
        nb = rng.choice([4, 6, 8])
        cs = [random_config(nb, rng, 1000) for _ in range(3)]
        ks = [_graph(c).E for c in cs]
        cfg, _, _ = y_shape_configs(*cs)
        e = _graph(cfg).E
        if 2 * e != 2 * sum(ks) + 3 * nb:
            bad.append(f"trial {trial}: E={e}, k={ks}, n_b={nb}")
    return bad


@criterion(6, 60.0)
def test_c06_path_cycle():
    bad = []
    for n in range(4, 17, 2):
        cfg, path = path_construction(n)
        if len(set(path)) != n - 1 or not has_path(_graph(cfg), path):
            bad.append(f"path({n})")
    for n in (6, 12, 18):
        cfg, cyc = cycle_construction(n)
        if len(set(cyc)) != n - 3 or not has_cycle(_graph(cfg), cyc):
            bad.append(f"cycle({n})")
    return bad


@criterion(7, 120.0)
def test_c07_clique():
    bad = []
    for k in (2, 4, 6):
        cfg, marked = clique_construction(k)
        g = _graph(cfg)
        if len(set(marked)) != k or not all(g.has_edge(a, b) for a, b in combinations(marked, 2)):
            bad.append(f"k={k}: marked vertices are not a clique")
        if k >= 4 and cfg.n - k > 2 * k * k - 6 * k:
            bad.append(f"k={k}: {cfg.n - k} added points")
        rep = verify_all(cfg)
        if not rep.get("clique_bound").passed or (k - 1) ** 2 > 2 * cfg.n:
            bad.append(f"k={k}: clique bound check failed")
        if not rep.ok:
            bad.append(f"k={k}: {rep.failures}")
    return bad


def _all_graphs(max_v: int):
    for v in range(1, max_v + 1):
        pairs = list(combinations(range(v), 2))
        for mask in range(1 << len(pairs)):
            yield v, [p for i, p in enumerate(pairs) if mask >> i & 1]


@criterion(8, 300.0)
def test_c08_induced():
    bad = []
    count = 0
    for v, edges in _all_graphs(4):
        count += 1
        graph = nx.Graph()
        graph.add_nodes_from(range(v))
        graph.add_edges_from(edges)
        cfg, marked = induced_embedding(graph)
        g = _graph(cfg)
        if induced_edges(g, marked[:v]) != edges:
            bad.append(f"v={v} edges={edges}")
        two_k = v + (v % 2)
        if cfg.n > induced_bound(two_k, len(edges)):
            bad.append(f"v={v} edges={edges}: n={cfg.n} > bound")
    if count != 75:
        bad.append(f"enumerated {count} graphs, expected 75")
    return bad


@criterion(9, 120.0)
def test_c09_span():
    bad = []
    corpus = [cfg for _, cfg in generator_corpus()] + random_corpus(20, range(4, 17, 2), seed=13)
    for cfg in corpus:
        g = _graph(cfg)
        s = straddling_span(g).span
        if g.n < 2 * s:
            bad.append(f"n={g.n} < 2*{s}")
    for k in (4, 6):
        cfg, _ = clique_construction(k)
        s = straddling_span(_graph(cfg)).span
        if s < k * k // 4:
            bad.append(f"clique k={k}: span {s} < {k * k // 4}")
    rng = random.Random(17)
    for i in range(100):
        cfg = random_config(rng.choice([4, 6, 8, 10]), rng, 1000)
        g = _graph(cfg)
        want = oracles.span_oracle(cfg, g.edges, random_lines=200, seed=i)
        got = straddling_span(g).span
        if got != want:
            bad.append(f"config {i}: span {got} != oracle {want}")
    return bad


@criterion(10, 300.0)
def test_c10_charging():
    bad = []
    rng = random.Random(23)
    for i in range(500):
        cfg = random_config(rng.choice([4, 6, 8, 10, 12]), rng, 10**4)
        g = _graph(cfg)
        rep = verify_charging(g, extra_orientations=8, seed=i)
        if not rep.ok:
            bad.append(f"config {i}: {rep.violations[:2]}")
        if 4 * rep.crossings > comb(g.n, 2) or rep.crossings != oracles.proper_crossings(cfg, g.edges):
            bad.append(f"config {i}: crossing count {rep.crossings}")
    return bad


@criterion(11, 10.0)
def test_c11_bounds():
    bad = []
    # top up the record so the check is meaningful when run on its own
    for cfg in random_corpus(20, range(4, 27, 2), seed=29):
        _graph(cfg)
    for n, e in sorted(SEEN):
        if not edge_bound_holds(e, n):
            bad.append(f"n={n} E={e} exceeds the cube-root bound")
        ref = reference_max(n) if n <= 26 else None
        if ref is not None and e > ref:
            bad.append(f"n={n} E={e} exceeds table value {ref}")
    ratio = float(new_upper_bound(10**4).value) / (10**4) ** (4 / 3)
    if not 1.61 <= ratio <= 1.63:
        bad.append(f"ratio {ratio}")
    prev = 0
    for n in range(2, 27, 2):
        ref = reference_max(n)
        if not (n // 2 <= ref and prev <= ref and edge_bound_holds(ref, n)):
            bad.append(f"table entry n={n}")
        prev = ref
    return bad


@criterion(12, 60.0)
def test_c12_search():
    bad = []
    serial = grid_exhaustive(4, 5)
    if serial.best != 3:
        bad.append(f"grid_exhaustive(4, 5) = {serial.best}")
    parallel = grid_exhaustive(4, 5, workers=2)
    if parallel.to_json() != serial.to_json():
        bad.append("parallel and serial outputs differ")
    results = [serial, grid_exhaustive(6, 4), random_search(6, 400, seed=1), random_search(8, 300, seed=2)]
    for r in results:
        n = r.params["n"]
        SEEN.add((n, r.best))
        if r.best > reference_max(n):
            bad.append(f"search n={n} found {r.best}")
    return bad


@criterion(13, 30.0)
def test_c13_interpolation():
    bad = []
    traces = interpolate(convex_polygon(6), star(6))
    seen = counts_realised(traces)
    if not set(range(3, 6)) <= seen:
        bad.append(f"counts seen {sorted(seen)}")
    for tr in traces:
        for a, b in zip(tr.counts, tr.counts[1:]):
            if abs(a - b) > 1:
                bad.append(f"vertex {tr.vertex}: jump {a} -> {b}")
    return bad


if __name__ == "__main__":
    tests = sorted((f for f in list(globals().values()) if callable(f) and hasattr(f, "number")), key=lambda f: f.number)
    failed = 0
    for t in tests:
        try:
            t()
        except AssertionError:
            failed += 1
    sys.exit(1 if failed else 0)
