"""Static SVG rendering of book drawings in the circular model.

One circle per page, identical vertex placement across panels, straight
chords, per-panel crossing annotation.  Output is a pure function of the
drawing and spec: identical inputs yield byte-identical SVG.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .drawings import BookDrawing, count_crossings, vertex_name


@dataclass(frozen=True)
class RenderSpec:
    radius: float = 140.0
    margin: float = 36.0
    columns: int = 2
    vertex_radius: float = 6.0
    edge_width: float = 1.4
    font_size: float = 12.0
    edge_color: str = "#1f3a5f"
    black_fill: str = "#111111"
    white_fill: str = "#ffffff"
    outline: str = "#111111"


def _fmt(x: float) -> str:
    return f"{x:.2f}"


def render_svg(d: BookDrawing, spec: RenderSpec = RenderSpec()) -> str:
    """SVG 1.1 document with one panel per page."""
    nverts = d.m + d.n
    report = count_crossings(d)
    cols = max(1, min(spec.columns, d.k))
    rows = (d.k + cols - 1) // cols
    panel = 2 * (spec.radius + spec.margin)
    width = cols * panel
    height = rows * panel

    # vertex angles: position 0 at the top, clockwise on screen
    centers_unit = []
    for p in range(nverts):
        ang = -math.pi / 2 + 2 * math.pi * p / nverts
        centers_unit.append((math.cos(ang), math.sin(ang)))

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{_fmt(width)}" height="{_fmt(height)}" '
        f'viewBox="0 0 {_fmt(width)} {_fmt(height)}">',
        f'<title>{d.k}-page drawing of K_{{{d.m},{d.n}}}, {report.total} crossings</title>',
        '<rect width="100%" height="100%" fill="#ffffff"/>',
    ]

    by_page: list[list[tuple[int, int]]] = [[] for _ in range(d.k)]
    for e, p in d.pages.items():
        by_page[p].append(e)

    for page in range(d.k):
        cx = (page % cols) * panel + panel / 2
        cy = (page // cols) * panel + panel / 2
        px = [cx + spec.radius * ux for ux, _ in centers_unit]
        py = [cy + spec.radius * uy for _, uy in centers_unit]
        out.append(f'<g id="page{page}">')
        out.append(
            f'<circle cx="{_fmt(cx)}" cy="{_fmt(cy)}" r="{_fmt(spec.radius)}" '
            f'fill="none" stroke="#c8c8c8" stroke-width="1.00"/>'
        )
        for i, j in sorted(by_page[page]):
            a = d.layout.position[("b", i)]
            b = d.layout.position[("w", j)]
            out.append(
                f'<line x1="{_fmt(px[a])}" y1="{_fmt(py[a])}" '
                f'x2="{_fmt(px[b])}" y2="{_fmt(py[b])}" '
                f'stroke="{spec.edge_color}" stroke-width="{_fmt(spec.edge_width)}"/>'
            )
        for p, v in enumerate(d.layout.seq):
            fill = spec.black_fill if v[0] == "b" else spec.white_fill
            out.append(
                f'<circle cx="{_fmt(px[p])}" cy="{_fmt(py[p])}" r="{_fmt(spec.vertex_radius)}" '
                f'fill="{fill}" stroke="{spec.outline}" stroke-width="1.00">'
                f"<title>{vertex_name(v)}</title></circle>"
            )
        label = f"page {page}: {report.per_page[page]} crossings"
        out.append(
            f'<text x="{_fmt(cx)}" y="{_fmt(cy + spec.radius + spec.margin * 0.7)}" '
            f'font-family="sans-serif" font-size="{_fmt(spec.font_size)}" '
            f'text-anchor="middle">{label}</text>'
        )
        out.append("</g>")

    out.append(
        f'<text x="{_fmt(width / 2)}" y="{_fmt(spec.margin * 0.55)}" '
        f'font-family="sans-serif" font-size="{_fmt(spec.font_size)}" text-anchor="middle">'
        f"K_{{{d.m},{d.n}}} in {d.k} pages, {report.total} crossings total</text>"
    )
    out.append("</svg>")
    return "\n".join(out) + "\n"
