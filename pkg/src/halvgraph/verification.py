"""Executable checks for a configuration and closed-form edge bounds.

Every verdict is computed with integers or exact fractions; the only real
number produced here is the reported cube root in :func:`new_upper_bound`,
which never takes part in a decision.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from decimal import Decimal, localcontext
from fractions import Fraction
from itertools import combinations
from typing import Sequence

import networkx as nx

from .chains import (
    ChainError,
    NonGenericDirection,
    chain_violations,
    decompose_chains,
    straddling_chains_distinct,
    straddling_span,
    verify_charging,
)
from .geometry import PointConfig, cross, generic_up_direction
from .halving import (
    CLIQUE_SEARCH_CAP,
    UnderlyingGeograph,
    halving_edges_bruteforce,
    halving_edges_sweep,
    hull_vertices,
    max_clique,
    underlying_geograph,
)

BOUND_TABLE: tuple[int, ...] = (1, 3, 6, 9, 13, 18, 22, 27, 33, 38, 44, 51, 57)


class OutOfRegime(ValueError):
    pass


class OddN(ValueError):
    pass


@dataclass(frozen=True)
class BoundTable:
    """Published maxima of halving lines for 2m points, m = 1..13."""

    values: tuple[int, ...] = BOUND_TABLE

    def __getitem__(self, n: int) -> int:
        return self.values[n // 2 - 1]

    def covers(self, n: int) -> bool:
        return 2 <= n <= 2 * len(self.values)


def reference_max(n: int) -> int | None:
    if n % 2:
        raise OddN(f"n must be even, got {n}")
    table = BoundTable()
    return table[n] if table.covers(n) else None


def erdos_gallai(seq: Sequence[int]) -> bool:
    """Graphicality test for a non-increasing, non-negative sequence."""
    d = list(seq)
    if any(x < 0 for x in d) or any(a < b for a, b in zip(d, d[1:])):
        raise ValueError("sequence must be non-negative and non-increasing")
    if sum(d) % 2:
        return False
    n = len(d)
    prefix = 0
    for k in range(1, n + 1):
        prefix += d[k - 1]
        if prefix > k * (k - 1) + sum(min(x, k) for x in d[k:]):
            return False
    return True


def crossing_lower_bound(E: int, n: int) -> Fraction:
    """4E^3 / (135 n^2), valid once E exceeds 7.5 n."""
    if 2 * E <= 15 * n:
        raise OutOfRegime(f"E={E} is not above 7.5*n={Fraction(15 * n, 2)}")
    return Fraction(4 * E**3, 135 * n * n)


@dataclass(frozen=True)
class UpperBound:
    n: int
    radicand: Fraction
    value: Decimal  # cube root, truncated to ``digits`` decimals

    def admits(self, E: int) -> bool:
        """Exact test E <= cbrt(radicand)."""
        return E**3 <= self.radicand


def edge_bound_holds(E: int, n: int) -> bool:
    """16 E^3 <= 135 n^2 C(n, 2), all in integers."""
    return 16 * E**3 <= 135 * n * n * math.comb(n, 2)


def _icbrt(x: int) -> int:
    if x < 2:
        return x
    r = 1 << ((x.bit_length() + 2) // 3)
    while True:
        s = (2 * r + x // (r * r)) // 3
        if s >= r:
            break
        r = s
    while r**3 > x:
        r -= 1
    while (r + 1) ** 3 <= x:
        r += 1
    return r


def new_upper_bound(n: int, digits: int = 12) -> UpperBound:
    if n < 2:
        raise ValueError("n must be at least 2")
    rad = Fraction(135 * n * n * math.comb(n, 2), 16)
    scale = 10**digits
    root = _icbrt(rad.numerator * scale**3 // rad.denominator)
    with localcontext() as ctx:
        ctx.prec = digits + 40
        value = Decimal(root) / Decimal(scale)
    return UpperBound(n, rad, value)


# ---------------------------------------------------------------------------
# the report
# ---------------------------------------------------------------------------


@dataclass
class Check:
    name: str
    passed: bool
    witness: str | None = None

    def as_dict(self) -> dict:
        out: dict = {"name": self.name, "pass": self.passed}
        if self.witness is not None:
            out["witness"] = self.witness
        return out


@dataclass
class VerificationReport:
    checks: list[Check] = field(default_factory=list)

    def add(self, name: str, ok: bool, witness=None) -> None:
        self.checks.append(Check(name, bool(ok), None if ok else (str(witness) if witness is not None else None)))

    @property
    def passed(self) -> int:
        return sum(c.passed for c in self.checks)

    @property
    def failed(self) -> int:
        return len(self.checks) - self.passed

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def get(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_json(self) -> str:
        body = {
            "checks": [c.as_dict() for c in sorted(self.checks, key=lambda c: c.name)],
            "summary": {"passed": self.passed, "failed": self.failed},
        }
        return json.dumps(body, indent=2)


def _first(pred, items):
    for x in items:
        if pred(x):
            return x
    return None


def _half_plane_witness(g: UnderlyingGeograph):
    pts = g.config.int_coords
    for v in range(g.n):
        vx, vy = pts[v]
        vecs = [(pts[w][0] - vx, pts[w][1] - vy) for w in g.adjacency[v]]
        for p, q in combinations(vecs, 2):
            s = cross(p[0], p[1], q[0], q[1])
            sg = (s > 0) - (s < 0)

            def opposite(r):
                a = cross(-p[0], -p[1], r[0], r[1])
                b = cross(r[0], r[1], -q[0], -q[1])
                return ((a > 0) - (a < 0)) == sg and ((b > 0) - (b < 0)) == sg

            if not any(opposite(r) for r in vecs):
                return f"vertex {v}: no edge opposite the angle between {p} and {q}"
    return None


def verify_geograph(g: UnderlyingGeograph, charging_samples: int = 8, seed: int = 0,
                    level: str = "full") -> VerificationReport:
    """Run every check against ``g`` as given (its edges are not recomputed).

    Passing a graph whose edges were tampered with is how the negative
    controls demonstrate that checks can fail. ``level="basic"`` stops after
    the degree and bound checks, skipping chains, span, cliques and charging.
    """
    if level not in ("basic", "full"):
        raise ValueError(f"unknown level {level!r}")
    r = VerificationReport()
    n, E = g.n, g.E
    degs = g.degrees

    odd = _first(lambda v: degs[v] % 2 == 0, range(n))
    r.add("odd_degrees", odd is None, odd is not None and f"vertex {odd} has degree {degs[odd]}")
    leaves = sum(1 for x in degs if x == 1)
    r.add("three_leaves", n < 4 or leaves >= 3, f"{leaves} leaves")
    hull = hull_vertices(g.config)
    bad_hull = _first(lambda v: degs[v] != 1, hull)
    r.add("hull_degree_one", bad_hull is None, bad_hull is not None and f"hull vertex {bad_hull} degree {degs[bad_hull]}")
    w = _half_plane_witness(g)
    r.add("half_plane", w is None, w)

    full = [v for v in range(n) if degs[v] == n - 1]
    r.add("one_full_degree", n < 4 or len(full) <= 1, f"vertices {full}")
    r.add("full_degree_star", not full or E == n - 1, f"vertex {full[:1]} has degree n-1 but E={E}")
    near = [v for v in range(n) if degs[v] == n - 3]
    # four points in convex position all have degree 1 = n-3, so n >= 6
    r.add("three_near_full", n < 6 or len(near) <= 3, f"vertices {near}")
    bad_pair = None
    for a, b in combinations(range(n), 2):
        cap = n if g.has_edge(a, b) else n - 2
        if degs[a] + degs[b] > cap:
            bad_pair = f"deg({a})+deg({b}) = {degs[a] + degs[b]} > {cap}"
            break
    r.add("degree_sum", bad_pair is None, bad_pair)
    seq = sorted(degs, reverse=True)
    r.add("erdos_gallai", erdos_gallai(seq), seq)
    r.add("sweep_matches_bruteforce", halving_edges_sweep(g.config) == halving_edges_bruteforce(g.config),
          "rotational sweep disagrees with brute force")

    r.add("edge_lower_bound", 2 * E >= n, f"E={E}")
    r.add("edge_upper_bound", edge_bound_holds(E, n), f"E={E}, n={n}")
    ref = reference_max(n) if n % 2 == 0 else None
    r.add("table_bound", ref is None or E <= ref, f"E={E} > {ref}")
    if level == "basic":
        r.checks.sort(key=lambda c: c.name)
        return r

    # chain invariants under a deterministic generic direction
    try:
        d = decompose_chains(g, generic_up_direction(g.config))
        problems = chain_violations(d)
    except (ChainError, NonGenericDirection, KeyError) as exc:
        d, problems = None, [("chains", f"decomposition failed: {exc}")]
    names = ["chain_count", "chain_partition", "chain_length", "chain_monotone", "chain_concave",
             "chain_endpoints", "wing_empty", "windmill", "positional_degree", "reverse_check"]
    for name in names:
        hit = _first(lambda p: p[0] == name or p[0] == "chains", problems)
        r.add(name, hit is None, hit and hit[1])

    span = straddling_span(g)
    r.add("span_bound", n >= 2 * span.span, f"span {span.span} with n={n}")
    try:
        distinct = straddling_chains_distinct(g, span)
    except (ChainError, NonGenericDirection, KeyError):
        distinct = False
    r.add("span_chains_distinct", distinct, f"straddling edges {span.crossed} share a chain")

    if n <= CLIQUE_SEARCH_CAP:
        cl = max_clique(g)
        k = len(cl)
        r.add("clique_bound", (k - 1) ** 2 <= 2 * n, f"clique {cl} with n={n}")
        r.add("clique_span", span.span >= k * k // 4, f"clique of {k} but span {span.span}")

    try:
        rep = verify_charging(g, extra_orientations=charging_samples, seed=seed)
        viol = rep.violations
    except (ChainError, NonGenericDirection, KeyError) as exc:
        viol = [{"check": "charging", "witness": str(exc)}]
    r.add("charging", not viol, viol[:1])
    r.checks.sort(key=lambda c: c.name)
    return r


def verify_all(cfg: PointConfig, charging_samples: int = 8, seed: int = 0, level: str = "full") -> VerificationReport:
    return verify_geograph(underlying_geograph(cfg), charging_samples, seed, level)


def components(g: UnderlyingGeograph) -> int:
    return nx.number_connected_components(g.to_networkx())
