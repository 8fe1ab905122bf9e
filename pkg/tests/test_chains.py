import dataclasses
import random
from math import comb

import pytest

import oracles
from halvgraph.chains import (
    NonGenericDirection,
    bisector_orientations,
    chain_violations,
    charged_tangent,
    classify_wings,
    cross_orientation_violations,
    decompose_chains,
    edge_crossings,
    geometric_crossings,
    reverse_chains,
    reverse_check,
    straddling_chains_distinct,
    straddling_span,
    verify_charging,
    wings,
)
from halvgraph.constructions import clique_construction, convex_polygon, star
from halvgraph.geometry import Direction, PointConfig, generic_up_direction, random_config
from halvgraph.halving import UnderlyingGeograph, underlying_geograph


def _random_graph(seed, sizes=(4, 6, 8, 10)):
    rng = random.Random(seed)
    return underlying_geograph(random_config(rng.choice(sizes), rng, 200)), rng


@pytest.mark.parametrize("seed", range(30))
def test_chains_match_float_tracer(seed):
    g, rng = _random_graph(seed)
    for _ in range(2):
        up = generic_up_direction(g.config) if _ == 0 else Direction(rng.randint(-99, 99), rng.randint(1, 99))
        try:
            d = decompose_chains(g, up)
        except NonGenericDirection:
            continue
        assert sorted(c.vertices for c in d.chains) == sorted(oracles.float_chains(g.config, g.edges, up))
        assert chain_violations(d) == []
        assert reverse_check(g, up)


def test_triangle_with_center_chains():
    g = underlying_geograph(PointConfig.from_coords([(0, 0), (6, 0), (0, 6), (1, 1)]))
    d = decompose_chains(g, Direction(1, 7))
    assert sorted(len(c) for c in d.chains) == [1, 2]
    assert {c.vertices for c in d.chains} == {c.vertices for c in reverse_chains(g, Direction(1, 7))}


def test_non_generic_direction_rejected():
    g = underlying_geograph(PointConfig.from_coords([(0, 0), (4, 0), (4, 4), (0, 4)]))
    with pytest.raises(NonGenericDirection):
        decompose_chains(g, Direction(0, 1))


def test_star_windmill():
    d = decompose_chains(underlying_geograph(star(6)))
    centre = [w for w in wings(d) if w.vertex == 5]
    assert len(centre) == 3
    for a in centre:
        for b in centre:
            if a.chain < b.chain:
                assert classify_wings(a, b) == "disjoint"


def test_chain_negative_controls():
    g = underlying_geograph(star(6))
    d = decompose_chains(g)
    names = {name for name, _ in chain_violations(dataclasses.replace(d, chains=d.chains[:2]))}
    assert {"chain_count", "chain_partition"} <= names
    tampered = UnderlyingGeograph(g.config, tuple(sorted(set(g.edges) | {(0, 1)})))
    assert chain_violations(decompose_chains(tampered, d.up))


def test_crossings_match_oracle():
    for seed in range(20):
        g, _ = _random_graph(seed, (6, 8, 10, 12))
        xs = edge_crossings(g)
        assert len(xs) == oracles.proper_crossings(g.config, g.edges)
        d = decompose_chains(g)
        assert len(geometric_crossings(d)) == len(xs)


def test_square_charging():
    g = underlying_geograph(convex_polygon(4))
    (c,) = edge_crossings(g)
    dirs = bisector_orientations(g.config, c)
    assert len(set(dirs)) == 4
    pairs = {charged_tangent(decompose_chains(g, u), c).pair for u in dirs}
    assert len(pairs) == 4


def test_hexagon_charging():
    rep = verify_charging(underlying_geograph(convex_polygon(6)))
    assert rep.crossings == 3 and rep.ok
    assert all(len(v) >= 4 for v in rep.charges.values())
    assert 4 * rep.crossings <= comb(6, 2)


@pytest.mark.parametrize("seed", range(25))
def test_span_matches_oracle(seed):
    g, _ = _random_graph(seed)
    s = straddling_span(g)
    assert s.span == oracles.span_oracle(g.config, g.edges, random_lines=100, seed=seed)
    assert len(s.crossed) == s.span
    assert g.n >= 2 * s.span
    assert straddling_chains_distinct(g, s)


def test_span_star_and_clique():
    assert straddling_span(underlying_geograph(star(6))).span == 3
    cfg, marked = clique_construction(4)
    g = underlying_geograph(cfg)
    assert straddling_span(g).span >= 4


def test_orientations_coincide_or_separate():
    for seed in range(10):
        g, rng = _random_graph(seed)
        d1 = decompose_chains(g, generic_up_direction(g.config))
        d2 = decompose_chains(g, -d1.up)
        assert cross_orientation_violations(d1, d2) == []
