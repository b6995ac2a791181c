"""Tiny standalone SVG line plot (no plotting dependency)."""

from __future__ import annotations

from typing import Sequence
from xml.sax.saxutils import escape

WIDTH, HEIGHT = 640, 400
MARGIN_L, MARGIN_R, MARGIN_T, MARGIN_B = 60, 20, 30, 45


def _ticks(lo: float, hi: float, count: int = 5):
    if hi == lo:
        return [lo]
    step = (hi - lo) / count
    return [lo + i * step for i in range(count + 1)]


def polyline_svg(
    xs: Sequence[float],
    ys: Sequence[float],
    *,
    title: str = "",
    xlabel: str = "x",
    ylabel: str = "y",
) -> str:
    """Render ``ys`` against ``xs`` as an SVG document string."""
    if len(xs) != len(ys) or len(xs) < 2:
        raise ValueError("need at least two (x, y) points of equal length")
    x0, x1 = min(xs), max(xs)
    y0, y1 = min(0.0, min(ys)), max(ys)
    if y1 == y0:
        y1 = y0 + 1.0
    pw = WIDTH - MARGIN_L - MARGIN_R
    ph = HEIGHT - MARGIN_T - MARGIN_B

    def sx(x):
        return MARGIN_L + (x - x0) / (x1 - x0) * pw

    def sy(y):
        return MARGIN_T + (1.0 - (y - y0) / (y1 - y0)) * ph

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}">',
        f'<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
    ]
    bottom, left = MARGIN_T + ph, MARGIN_L
    out.append(
        f'<path d="M{left},{MARGIN_T} L{left},{bottom} L{left + pw},{bottom}" '
        'fill="none" stroke="black" stroke-width="1"/>'
    )
    for t in _ticks(x0, x1):
        x = sx(t)
        out.append(f'<line x1="{x:.2f}" y1="{bottom}" x2="{x:.2f}" y2="{bottom + 5}" stroke="black"/>')
        out.append(
            f'<text x="{x:.2f}" y="{bottom + 18}" font-size="11" text-anchor="middle">{t:.3g}</text>'
        )
    for t in _ticks(y0, y1):
        y = sy(t)
        out.append(f'<line x1="{left - 5}" y1="{y:.2f}" x2="{left}" y2="{y:.2f}" stroke="black"/>')
        out.append(
            f'<text x="{left - 8}" y="{y + 4:.2f}" font-size="11" text-anchor="end">{t:.3g}</text>'
        )
    points = " ".join(f"{sx(x):.2f},{sy(y):.2f}" for x, y in zip(xs, ys))
    out.append(f'<polyline points="{points}" fill="none" stroke="#1f77b4" stroke-width="1.5"/>')
    out.append(
        f'<text x="{left + pw / 2}" y="{HEIGHT - 8}" font-size="12" text-anchor="middle">'
        f"{escape(xlabel)}</text>"
    )
    out.append(
        f'<text x="14" y="{MARGIN_T + ph / 2}" font-size="12" text-anchor="middle" '
        f'transform="rotate(-90 14 {MARGIN_T + ph / 2})">{escape(ylabel)}</text>'
    )
    if title:
        out.append(
            f'<text x="{WIDTH / 2}" y="18" font-size="13" text-anchor="middle">{escape(title)}</text>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"
