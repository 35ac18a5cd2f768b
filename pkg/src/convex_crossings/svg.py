"""Static SVG rendering of a convex drawing."""

from __future__ import annotations

import math
from typing import List

from .drawing import ConvexDrawing, count_crossings

PALETTE = (
    "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd",
    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf",
)


def render_svg(drawing: ConvexDrawing, size: int = 400) -> str:
    """Vertices evenly spaced clockwise on a circle, edges as straight chords."""
    n = drawing.spec.total_vertices
    centre = size / 2
    radius = size * 0.4
    # Position 0 at the top, increasing clockwise (SVG y grows downward).
    pts = [
        (
            centre + radius * math.sin(2 * math.pi * i / n),
            centre - radius * math.cos(2 * math.pi * i / n),
        )
        for i in range(n)
    ]
    classes = drawing.classes
    out: List[str] = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size + 30}" '
        f'viewBox="0 0 {size} {size + 30}">',
        '<g class="edges" stroke="#555555" stroke-width="1" stroke-opacity="0.7">',
    ]
    for a, b in drawing.chords():
        (x1, y1), (x2, y2) = pts[a], pts[b]
        out.append(f'<line x1="{x1:.2f}" y1="{y1:.2f}" x2="{x2:.2f}" y2="{y2:.2f}"/>')
    out.append("</g>")
    out.append('<g class="vertices" stroke="#000000">')
    for pos, v in enumerate(drawing.order):
        x, y = pts[pos]
        colour = PALETTE[classes[pos] % len(PALETTE)]
        out.append(
            f'<circle cx="{x:.2f}" cy="{y:.2f}" r="6" fill="{colour}">'
            f"<title>vertex {v}, class {classes[pos]}</title></circle>"
        )
    out.append("</g>")
    out.append(
        f'<text x="{centre:.2f}" y="{size + 20}" text-anchor="middle" '
        f'font-family="sans-serif" font-size="14">crossings: {count_crossings(drawing)}</text>'
    )
    out.append("</svg>")
    return "\n".join(out) + "\n"
