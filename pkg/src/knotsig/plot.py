"""SVG rendering of signature step functions.

Hand-rolled SVG (no plotting dependency): horizontal plateau segments over
t in (0, 1/2], open dots for the one-sided limits at each breakpoint, and a
filled dot at the balanced (two-sided average) value.  Breakpoint
positions use certified decimals, so the picture honestly reflects the
exact data; output is deterministic.
"""

from __future__ import annotations

from fractions import Fraction

from .certify import decimal_of_fraction, decimal_of_t
from .signature import SignatureFunction


def _breakpoint_positions(sf: SignatureFunction, digits: int = 6) -> list[float]:
    out = []
    for bp in sf.breakpoints:
        if bp.root.exact_t is not None:
            out.append(float(bp.root.exact_t))
        else:
            out.append(float(decimal_of_t(bp.root.root, digits)))
    return out


def svg_step_plot(sf: SignatureFunction, title: str = "",
                  width: int = 640, height: int = 400) -> str:
    pad = 46
    ts = _breakpoint_positions(sf)
    values = list(sf.plateaus)
    balanced = [bp.balanced2 / 2 for bp in sf.breakpoints]
    nonbal = [bp.nonbalanced for bp in sf.breakpoints if bp.nonbalanced is not None]
    lo = min(values + balanced + nonbal + [0]) - 1
    hi = max(values + balanced + nonbal + [0]) + 1

    def x(t: float) -> float:
        return pad + (t / 0.5) * (width - 2 * pad)

    def y(v: float) -> float:
        return height - pad - (v - lo) / (hi - lo) * (height - 2 * pad)

    def fmt(v: float) -> str:
        return f"{v:.2f}"

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
    ]
    if title:
        parts.append(f'<text x="{width // 2}" y="20" text-anchor="middle" '
                     f'font-family="sans-serif" font-size="14">{_esc(title)}</text>')

    # axes and integer gridlines
    parts.append(f'<line x1="{fmt(x(0))}" y1="{fmt(y(lo))}" x2="{fmt(x(0))}" '
                 f'y2="{fmt(y(hi))}" stroke="black" stroke-width="1"/>')
    parts.append(f'<line x1="{fmt(x(0))}" y1="{fmt(y(0))}" x2="{fmt(x(0.5))}" '
                 f'y2="{fmt(y(0))}" stroke="black" stroke-width="1"/>')
    for grid in range(int(lo), int(hi) + 1):
        if grid % 2 == 0:
            parts.append(f'<line x1="{fmt(x(0))}" y1="{fmt(y(grid))}" x2="{fmt(x(0.5))}" '
                         f'y2="{fmt(y(grid))}" stroke="#dddddd" stroke-width="0.5"/>')
            parts.append(f'<text x="{fmt(x(0) - 6)}" y="{fmt(y(grid) + 4)}" text-anchor="end" '
                         f'font-family="sans-serif" font-size="10">{grid}</text>')
    for k in range(6):
        t = k / 10
        parts.append(f'<text x="{fmt(x(t))}" y="{fmt(y(lo) + 16)}" text-anchor="middle" '
                     f'font-family="sans-serif" font-size="10">{decimal_of_fraction(Fraction(k, 10), 1)}</text>')
        parts.append(f'<line x1="{fmt(x(t))}" y1="{fmt(y(lo))}" x2="{fmt(x(t))}" '
                     f'y2="{fmt(y(lo) - 4)}" stroke="black" stroke-width="1"/>')

    # plateau segments
    edges = [0.0] + ts + [0.5]
    for i, val in enumerate(values):
        parts.append(f'<line x1="{fmt(x(edges[i]))}" y1="{fmt(y(val))}" '
                     f'x2="{fmt(x(edges[i + 1]))}" y2="{fmt(y(val))}" '
                     f'stroke="#1f4e9c" stroke-width="2"/>')

    # breakpoints: open dots at the one-sided limits, filled dot at the average
    for i, bp in enumerate(sf.breakpoints):
        tx = x(ts[i])
        if bp.jump != 0:
            parts.append(f'<line x1="{fmt(tx)}" y1="{fmt(y(bp.left))}" x2="{fmt(tx)}" '
                         f'y2="{fmt(y(bp.right))}" stroke="#1f4e9c" stroke-width="0.75" '
                         f'stroke-dasharray="3,2"/>')
            for side in (bp.left, bp.right):
                parts.append(f'<circle cx="{fmt(tx)}" cy="{fmt(y(side))}" r="3.2" '
                             f'fill="white" stroke="#1f4e9c" stroke-width="1.2"/>')
        parts.append(f'<circle cx="{fmt(tx)}" cy="{fmt(y(bp.balanced2 / 2))}" r="3.2" '
                     f'fill="#1f4e9c"/>')
        if bp.nonbalanced is not None and 2 * bp.nonbalanced != bp.balanced2:
            parts.append(f'<rect x="{fmt(tx - 2.6)}" y="{fmt(y(bp.nonbalanced) - 2.6)}" '
                         f'width="5.2" height="5.2" fill="#b03030"/>')

    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def _esc(s: str) -> str:
    return s.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")
