"""Minimal self-contained SVG line plots (no plotting dependency)."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b")


@dataclass(frozen=True)
class Series:
    label: str
    x: Sequence[float]
    y: Sequence[float]


def _ticks(lo: float, hi: float, log: bool) -> list[float]:
    if log:
        a, b = math.floor(math.log10(lo)), math.ceil(math.log10(hi))
        return [10.0**e for e in range(a, b + 1)]
    if hi == lo:
        return [lo]
    step = 10 ** math.floor(math.log10((hi - lo) / 4))
    for mult in (1, 2, 5, 10):
        if (hi - lo) / (step * mult) <= 6:
            step *= mult
            break
    first = math.ceil(lo / step) * step
    return [first + i * step for i in range(int((hi - first) / step + 1e-9) + 1)]


def _fmt(v: float) -> str:
    if v == 0:
        return "0"
    if abs(v) >= 1e4 or abs(v) < 1e-2:
        return f"{v:.0e}"
    return f"{v:g}"


def line_plot(
    series: Sequence[Series],
    title: str = "",
    xlabel: str = "",
    ylabel: str = "",
    logx: bool = False,
    logy: bool = False,
    width: int = 560,
    height: int = 400,
) -> str:
    """Render series as polylines with markers; non-finite points are skipped."""
    pts = [
        (x, y)
        for s in series
        for x, y in zip(s.x, s.y)
        if math.isfinite(x) and math.isfinite(y) and (not logx or x > 0) and (not logy or y > 0)
    ]
    if not pts:
        raise ValueError("nothing to plot")
    xs, ys = [p[0] for p in pts], [p[1] for p in pts]
    tx = (lambda v: math.log10(v)) if logx else float
    ty = (lambda v: math.log10(v)) if logy else float
    x0, x1 = min(xs), max(xs)
    y0, y1 = min(ys), max(ys)
    if not logy:
        y0 = min(y0, 0.0)
    X0, X1 = tx(x0), tx(x1)
    Y0, Y1 = ty(y0), ty(y1)
    if X1 == X0:
        X0, X1 = X0 - 1, X1 + 1
    if Y1 == Y0:
        Y0, Y1 = Y0 - 1, Y1 + 1
    left, right, top, bottom = 70, 20, 40, 55
    pw, ph = width - left - right, height - top - bottom

    def px(v):
        return left + (tx(v) - X0) / (X1 - X0) * pw

    def py(v):
        return top + ph - (ty(v) - Y0) / (Y1 - Y0) * ph

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}" font-family="sans-serif" font-size="12">',
        '<rect width="100%" height="100%" fill="white"/>',
        f'<rect x="{left}" y="{top}" width="{pw}" height="{ph}" fill="none" stroke="black"/>',
    ]
    for v in _ticks(x0, x1, logx):
        if tx(v) < X0 - 1e-9 or tx(v) > X1 + 1e-9:
            continue
        x = px(v)
        out.append(f'<line x1="{x:.1f}" y1="{top + ph}" x2="{x:.1f}" y2="{top + ph + 5}" stroke="black"/>')
        out.append(f'<text x="{x:.1f}" y="{top + ph + 18}" text-anchor="middle">{_fmt(v)}</text>')
    for v in _ticks(y0, y1, logy):
        if ty(v) < Y0 - 1e-9 or ty(v) > Y1 + 1e-9:
            continue
        y = py(v)
        out.append(f'<line x1="{left - 5}" y1="{y:.1f}" x2="{left}" y2="{y:.1f}" stroke="black"/>')
        out.append(f'<text x="{left - 8}" y="{y + 4:.1f}" text-anchor="end">{_fmt(v)}</text>')
    out.append(f'<text x="{left + pw / 2:.1f}" y="{height - 12}" text-anchor="middle">{_esc(xlabel)}</text>')
    out.append(
        f'<text x="16" y="{top + ph / 2:.1f}" text-anchor="middle" '
        f'transform="rotate(-90 16 {top + ph / 2:.1f})">{_esc(ylabel)}</text>'
    )
    out.append(f'<text x="{width / 2:.1f}" y="22" text-anchor="middle" font-size="14">{_esc(title)}</text>')
    for i, s in enumerate(series):
        color = PALETTE[i % len(PALETTE)]
        good = [
            (px(x), py(y))
            for x, y in zip(s.x, s.y)
            if math.isfinite(x) and math.isfinite(y) and (not logx or x > 0) and (not logy or y > 0)
        ]
        if len(good) > 1:
            path = " ".join(f"{a:.1f},{b:.1f}" for a, b in good)
            out.append(f'<polyline points="{path}" fill="none" stroke="{color}" stroke-width="1.5"/>')
        for a, b in good:
            out.append(f'<circle cx="{a:.1f}" cy="{b:.1f}" r="2.5" fill="{color}"/>')
        ly = top + 16 + 16 * i
        out.append(f'<line x1="{left + 10}" y1="{ly}" x2="{left + 30}" y2="{ly}" stroke="{color}" stroke-width="2"/>')
        out.append(f'<text x="{left + 36}" y="{ly + 4}">{_esc(s.label)}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def _esc(text: str) -> str:
    return text.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")
