"""SVG rendering of two-page drawings.

Purely presentational: the caption's crossing count comes from
``count_crossings``, never from the picture.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from crossbound.combinatorics import all_chords
from crossbound.drawing import Page, TwoPageDrawing, count_crossings

COLORS = {Page.TOP: "#1f77b4", Page.BOTTOM: "#d62728"}


@dataclass(frozen=True)
class SvgOptions:
    layout: str = "discs"  # "discs": two discs side by side; "circle": top inside, bottom outside
    size: int = 400


def _fmt(v: float) -> str:
    s = f"{v:.3f}".rstrip("0").rstrip(".")
    return "0" if s == "-0" else s


def _vertex(i: int, n: int, cx: float, cy: float, r: float) -> tuple[float, float]:
    angle = 2 * math.pi * i / n
    return cx + r * math.cos(angle), cy + r * math.sin(angle)


def render_svg(d: TwoPageDrawing, options: SvgOptions | None = None) -> str:
    opts = options or SvgOptions()
    if opts.layout not in ("discs", "circle"):
        raise ValueError(f"unknown layout {opts.layout!r}")
    n, size = d.n, opts.size
    r = size * 0.35
    caption_h = 30
    if opts.layout == "discs":
        width, height = 2 * size, size + caption_h
        centres = {Page.TOP: (size / 2, size / 2), Page.BOTTOM: (1.5 * size, size / 2)}
    else:
        width, height = size, size + caption_h
        centres = {Page.TOP: (size / 2, size / 2), Page.BOTTOM: (size / 2, size / 2)}
        r = size * 0.3

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
    ]
    for page in (Page.TOP, Page.BOTTOM) if opts.layout == "discs" else (Page.TOP,):
        cx, cy = centres[page]
        out.append(
            f'<circle cx="{_fmt(cx)}" cy="{_fmt(cy)}" r="{_fmt(r)}" fill="none" stroke="#999" stroke-width="1"/>'
        )

    for ch, page in zip(all_chords(n), d.pages):
        cx, cy = centres[page]
        x1, y1 = _vertex(ch.a, n, cx, cy, r)
        x2, y2 = _vertex(ch.c, n, cx, cy, r)
        if opts.layout == "circle" and page is Page.BOTTOM:
            # bulge outward through the midpoint of the arc the chord spans
            # (short way round), pushed past the circle
            mid = 2 * math.pi * (ch.a + ch.c) / (2 * n)
            if ch.c - ch.a > n / 2:
                mid += math.pi
            span = min(ch.c - ch.a, n - (ch.c - ch.a)) / n
            reach = r * (1.1 + 1.2 * span)
            qx, qy = cx + reach * math.cos(mid), cy + reach * math.sin(mid)
            path = f"M {_fmt(x1)} {_fmt(y1)} Q {_fmt(qx)} {_fmt(qy)} {_fmt(x2)} {_fmt(y2)}"
        else:
            path = f"M {_fmt(x1)} {_fmt(y1)} L {_fmt(x2)} {_fmt(y2)}"
        out.append(
            f'<path class="chord {page.value}" d="{path}" fill="none" stroke="{COLORS[page]}" '
            f'stroke-width="1.2"/>'
        )

    for page in (Page.TOP, Page.BOTTOM) if opts.layout == "discs" else (Page.TOP,):
        cx, cy = centres[page]
        for i in range(n):
            vx, vy = _vertex(i, n, cx, cy, r)
            out.append(f'<circle class="vertex" cx="{_fmt(vx)}" cy="{_fmt(vy)}" r="3" fill="#000"/>')

    out.append(
        f'<text x="{_fmt(width / 2)}" y="{_fmt(height - 10)}" text-anchor="middle" '
        f'font-family="sans-serif" font-size="14">crossings: {count_crossings(d)}</text>'
    )
    out.append("</svg>")
    return "\n".join(out) + "\n"
