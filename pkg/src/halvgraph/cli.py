"""Command-line entry point.

Exit codes: 0 on success, 1 when a verification fails, 2 on invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import constructions as C
from .chains import (
    decompose_chains,
    geometric_crossings,
    straddling_span,
    verify_charging,
)
from .geometry import Direction, GeometryError, generic_up_direction, is_generic_direction, perturb_direction
from .halving import underlying_geograph
from .pointsfile import PointsFileError, format_points, format_scalar, parse_points, read_points
from .render import RenderSpec, render_svg
from .search import BadSize as SearchBadSize
from .search import Unreachable, grid_exhaustive, interpolate, random_search
from .verification import Check, verify_all

EXIT_OK, EXIT_FAIL, EXIT_INVALID = 0, 1, 2


class InvalidInput(Exception):
    pass


def _load(path: str):
    if path == "-":
        return parse_points(sys.stdin.read())
    return read_points(path)


def _emit(args, data: dict, text: str) -> None:
    if args.json:
        print(json.dumps(data, indent=2))
    else:
        print(text)


def _resolve_up(cfg, text: str | None) -> Direction:
    if text is None:
        return generic_up_direction(cfg)
    try:
        up = Direction.parse(text)
    except GeometryError as exc:
        raise InvalidInput(str(exc)) from None
    if not is_generic_direction(cfg, up):
        fixed = perturb_direction(up, lambda d: is_generic_direction(cfg, d))
        print(f"notice: up direction {up} is not generic; using {fixed}", file=sys.stderr)
        up = fixed
    return up


def _parse_graph(text: str) -> tuple[int, list[tuple[int, int]]]:
    """``"4:0-1,1-2"`` -> (4, [(0, 1), (1, 2)])."""
    try:
        head, _, body = text.partition(":")
        nv = int(head)
        edges = []
        for item in filter(None, body.split(",")):
            a, b = item.split("-")
            edges.append((int(a), int(b)))
    except ValueError:
        raise InvalidInput(f"bad graph description {text!r}; expected e.g. 4:0-1,1-2") from None
    if any(not (0 <= a < nv and 0 <= b < nv) or a == b for a, b in edges):
        raise InvalidInput(f"graph edges out of range in {text!r}")
    return nv, edges


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def cmd_gen(args) -> int:
    graph = _parse_graph(args.graph) if args.graph else None
    if args.kind == "induced" and graph is None:
        raise InvalidInput("gen induced needs --graph")
    if args.kind in ("polygon", "star", "path", "cycle", "y", "cross-star") and args.n is None:
        raise InvalidInput(f"gen {args.kind} needs --n")
    if args.kind in ("clique", "cross-star") and args.k is None:
        raise InvalidInput(f"gen {args.kind} needs --k")
    cfg, cert = C.build(args.kind, n=args.n, k=args.k, four_leaves=args.four_leaves, graph=graph)
    comments = [f"{args.kind} " + " ".join(f"{k}={v}" for k, v in sorted(cert.params.items()))]
    if args.output:
        Path(args.output).write_text(format_points(cfg, comments))
        Path(args.output + ".cert.json").write_text(cert.to_json() + "\n")
        if args.json:
            print(json.dumps({"points": args.output, "cert": args.output + ".cert.json", "n": cfg.n}))
    else:
        sys.stdout.write(format_points(cfg, comments))
    return EXIT_OK


def analyze_dict(cfg) -> dict:
    g = underlying_geograph(cfg, method="sweep" if cfg.n > 64 else "brute")
    from .verification import components
    from .halving import hull_vertices

    return {
        "n": g.n,
        "E": g.E,
        "edges": [list(e) for e in g.edges],
        "degrees": g.degrees,
        "leaves": sum(1 for d in g.degrees if d == 1),
        "components": components(g),
        "hull": hull_vertices(cfg),
    }


def cmd_analyze(args) -> int:
    cfg = _load(args.file)
    data = analyze_dict(cfg)
    text = "\n".join(f"{k}: {v}" for k, v in data.items())
    _emit(args, data, text)
    return EXIT_OK


def _span_dict(span) -> dict:
    return {
        "w": span.span,
        "pair": list(span.pair) if span.pair else None,
        "move": span.kind,
        "line_point": [format_scalar(span.line_point.x), format_scalar(span.line_point.y)] if span.line_point else None,
        "line_direction": [format_scalar(v) for v in span.line_direction] if span.line_direction else None,
        "crossed": [list(e) for e in span.crossed],
    }


def cmd_chains(args) -> int:
    cfg = _load(args.file)
    g = underlying_geograph(cfg)
    up = _resolve_up(cfg, args.up)
    d = decompose_chains(g, up)
    crossings = geometric_crossings(d)
    rep = verify_charging(g, extra_orientations=args.samples)
    data = {
        "up": str(up),
        "chains": [list(c.vertices) for c in d.chains],
        "crossings": [
            {"e1": list(c.e1), "e2": list(c.e2), "point": [format_scalar(c.point.x), format_scalar(c.point.y)]}
            for c in crossings
        ],
        "span": straddling_span(g).span,
        "charging_violations": rep.violations,
    }
    text = "\n".join(
        [f"up: {up}"]
        + [f"chain {i}: {' '.join(map(str, c.vertices))}" for i, c in enumerate(d.chains)]
        + [f"crossings: {len(crossings)}", f"span: {data['span']}", f"charging violations: {len(rep.violations)}"]
    )
    _emit(args, data, text)
    return EXIT_OK if rep.ok else EXIT_FAIL


def cmd_span(args) -> int:
    cfg = _load(args.file)
    span = straddling_span(underlying_geograph(cfg))
    data = _span_dict(span)
    _emit(args, data, f"span: {span.span}\nwitness pair: {span.pair} ({span.kind})\ncrossed: {data['crossed']}")
    return EXIT_OK


def cmd_verify(args) -> int:
    cfg = _load(args.file)
    report = verify_all(cfg, charging_samples=args.samples)
    cert_path = args.cert
    if cert_path is None and args.file != "-" and Path(args.file + ".cert.json").exists():
        cert_path = args.file + ".cert.json"
    if cert_path is not None:
        try:
            cert = C.ConstructionCert.from_json(Path(cert_path).read_text())
        except (OSError, ValueError, TypeError) as exc:
            raise InvalidInput(f"bad certificate {cert_path}: {exc}") from None
        bad = cert.check(cfg)
        report.checks.append(Check("certificate", not bad, "; ".join(bad) or None))
        report.checks.sort(key=lambda c: c.name)
    if args.json:
        print(report.to_json())
    else:
        for c in report.checks:
            line = f"{'PASS' if c.passed else 'FAIL'} {c.name}"
            print(line + (f"  ({c.witness})" if c.witness else ""))
        print(f"{report.passed} passed, {report.failed} failed")
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_search(args) -> int:
    if args.random is not None:
        res = random_search(args.n, args.random, args.seed)
    else:
        if args.grid is None:
            raise InvalidInput("exhaustive search needs --grid")
        res = grid_exhaustive(args.n, args.grid, workers=args.workers)
    if args.json:
        print(res.to_json())
    else:
        print(f"best: {res.best} ({res.examined} configurations)")
        print(format_points(res.witness), end="")
    return EXIT_OK


def cmd_interpolate(args) -> int:
    c1, c2 = _load(args.first), _load(args.second)
    if c1.n != c2.n:
        raise InvalidInput("configurations differ in size")
    traces = interpolate(c1, c2, seed=args.seed)
    counts = sorted({c for t in traces for c in t.counts})
    data = {"traces": [t.to_dict() for t in traces], "counts": counts}
    lines = [f"vertex {t.vertex}: {' '.join(map(str, t.counts))}" for t in traces]
    _emit(args, data, "\n".join(lines + [f"counts seen: {counts}"]))
    return EXIT_OK


def cmd_render(args) -> int:
    cfg = _load(args.file)
    d = None
    if args.chains:
        d = decompose_chains(underlying_geograph(cfg), _resolve_up(cfg, args.up))
    spec = RenderSpec(size=args.size, draw_edges=not args.no_edges, draw_chains=args.chains, labels=args.labels)
    svg = render_svg(cfg, d, spec)
    if args.output:
        Path(args.output).write_text(svg)
    else:
        sys.stdout.write(svg)
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="halvgraph", description="Halving lines and their underlying graphs.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        sp.set_defaults(func=func)
        return sp

    g = add("gen", cmd_gen, "generate a construction")
    g.add_argument("kind", choices=C.KINDS)
    g.add_argument("--n", type=int)
    g.add_argument("--k", type=int)
    g.add_argument("--four-leaves", action="store_true")
    g.add_argument("--graph", help="vertex count and edges, e.g. 4:0-1,1-2,2-3,3-0")
    g.add_argument("-o", "--output")

    a = add("analyze", cmd_analyze, "halving lines and graph statistics")
    a.add_argument("file")

    c = add("chains", cmd_chains, "chain decomposition, crossings and charging")
    c.add_argument("file")
    c.add_argument("--up", help="up direction dx,dy")
    c.add_argument("--samples", type=int, default=8, help="random orientations for the charging check")

    s = add("span", cmd_span, "straddling span")
    s.add_argument("file")

    v = add("verify", cmd_verify, "run every check")
    v.add_argument("file", nargs="?", default="-")
    v.add_argument("--cert")
    v.add_argument("--samples", type=int, default=8)

    se = add("search", cmd_search, "search for many halving lines")
    se.add_argument("--n", type=int, required=True)
    se.add_argument("--grid", type=int)
    mode = se.add_mutually_exclusive_group()
    mode.add_argument("--exhaustive", action="store_true")
    mode.add_argument("--random", type=int, metavar="TRIALS")
    se.add_argument("--seed", type=int, default=0)
    se.add_argument("--workers", type=int, default=1)

    it = add("interpolate", cmd_interpolate, "move one configuration into another")
    it.add_argument("first")
    it.add_argument("second")
    it.add_argument("--seed", type=int, default=0)

    r = add("render", cmd_render, "draw as SVG")
    r.add_argument("file")
    r.add_argument("-o", "--output")
    r.add_argument("--chains", action="store_true")
    r.add_argument("--up")
    r.add_argument("--no-edges", action="store_true")
    r.add_argument("--labels", action="store_true")
    r.add_argument("--size", type=int, default=480)
    return p


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INVALID if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (InvalidInput, PointsFileError, GeometryError, C.BadSize, C.SizeMismatch, SearchBadSize, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except Unreachable as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
