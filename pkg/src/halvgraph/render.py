"""Static SVG drawings of configurations, halving edges and chains."""

from __future__ import annotations

from dataclasses import dataclass
from decimal import ROUND_HALF_EVEN, Decimal, localcontext
from fractions import Fraction
from xml.sax.saxutils import escape

from .chains import ChainDecomposition
from .geometry import PointConfig
from .halving import underlying_geograph

_QUANTUM = Decimal("0.000001")


@dataclass(frozen=True)
class RenderSpec:
    size: int = 480
    margin: int = 24
    vertex_radius: float = 4.0
    edge_width: float = 1.0
    chain_width_max: float = 6.0
    chain_width_min: float = 1.0
    draw_edges: bool = True
    draw_chains: bool = True
    labels: bool = False


def fmt(v) -> str:
    """Six decimals, round half to even, trailing zeros kept for stable bytes."""
    with localcontext() as ctx:
        ctx.prec = 60
        if isinstance(v, Fraction):
            d = Decimal(v.numerator) / Decimal(v.denominator)
        else:
            d = Decimal(str(v))
        q = d.quantize(_QUANTUM, rounding=ROUND_HALF_EVEN)
    if q == 0:
        q = abs(q)
    return format(q, "f")


def chain_widths(count: int, spec: RenderSpec) -> list[Fraction]:
    """Strictly decreasing stroke widths, thickest for the first chain."""
    hi, lo = Fraction(str(spec.chain_width_max)), Fraction(str(spec.chain_width_min))
    if count <= 1:
        return [hi] * count
    return [hi - (hi - lo) * i / (count - 1) for i in range(count)]


def render_svg(cfg: PointConfig, decomposition: ChainDecomposition | None = None, spec: RenderSpec = RenderSpec()) -> str:
    xs = [p.x for p in cfg]
    ys = [p.y for p in cfg]
    x0, y1 = min(xs), max(ys)
    extent = max(max(xs) - x0, y1 - min(ys)) or Fraction(1)
    scale = Fraction(spec.size - 2 * spec.margin) / extent

    def X(p):
        return fmt(spec.margin + (p.x - x0) * scale)

    def Y(p):
        return fmt(spec.margin + (y1 - p.y) * scale)

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{spec.size}" height="{spec.size}" '
        f'viewBox="0 0 {spec.size} {spec.size}">',
        f'<rect x="0" y="0" width="{spec.size}" height="{spec.size}" fill="white"/>',
    ]
    if spec.draw_edges:
        out.append('<g id="edges" stroke="#888888" fill="none">')
        for a, b in underlying_geograph(cfg).edges:
            pa, pb = cfg[a], cfg[b]
            out.append(f'<line x1="{X(pa)}" y1="{Y(pa)}" x2="{X(pb)}" y2="{Y(pb)}" stroke-width="{fmt(spec.edge_width)}"/>')
        out.append("</g>")
    if spec.draw_chains and decomposition is not None:
        out.append('<g id="chains" stroke="#1f4e9c" fill="none" stroke-linejoin="round">')
        widths = chain_widths(len(decomposition.chains), spec)
        for ch, w in zip(decomposition.chains, widths):
            coords = " ".join(f"{X(cfg[v])},{Y(cfg[v])}" for v in ch.vertices)
            out.append(f'<polyline points="{coords}" stroke-width="{fmt(w)}"/>')
        out.append("</g>")
    out.append('<g id="points" fill="black">')
    for i, p in enumerate(cfg):
        out.append(f'<circle cx="{X(p)}" cy="{Y(p)}" r="{fmt(spec.vertex_radius)}"/>')
    out.append("</g>")
    if spec.labels:
        out.append('<g id="labels" font-family="sans-serif" font-size="12">')
        for i, p in enumerate(cfg):
            x = fmt(spec.margin + (p.x - x0) * scale + 6)
            y = fmt(spec.margin + (y1 - p.y) * scale - 6)
            out.append(f'<text x="{x}" y="{y}">{escape(str(i))}</text>')
        out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
