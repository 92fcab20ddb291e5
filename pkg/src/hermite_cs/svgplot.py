"""Minimal self-contained SVG rendering for experiment outputs.

Deliberately tiny: line charts and histogram overlays good enough to eyeball
a sweep, with no plotting dependency.
"""
from __future__ import annotations

import math
from pathlib import Path

_W, _H = 640, 420
_ML, _MR, _MT, _MB = 60, 16, 28, 42
_COLORS = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
           "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf")


def _scale(values, lo, hi, out_lo, out_hi):
    span = hi - lo if hi > lo else 1.0
    return [out_lo + (v - lo) / span * (out_hi - out_lo) for v in values]


def _axes(title: str, xlabel: str, ylabel: str, xlo, xhi, ylo, yhi) -> list:
    parts = [
        f'<rect x="{_ML}" y="{_MT}" width="{_W - _ML - _MR}" height="{_H - _MT - _MB}" '
        'fill="none" stroke="#333"/>',
        f'<text x="{_W / 2:.0f}" y="16" text-anchor="middle" font-size="13">{title}</text>',
        f'<text x="{_W / 2:.0f}" y="{_H - 8}" text-anchor="middle" font-size="11">{xlabel}</text>',
        f'<text x="14" y="{_H / 2:.0f}" text-anchor="middle" font-size="11" '
        f'transform="rotate(-90 14 {_H / 2:.0f})">{ylabel}</text>',
        f'<text x="{_ML}" y="{_H - _MB + 14}" font-size="9">{xlo:.4g}</text>',
        f'<text x="{_W - _MR}" y="{_H - _MB + 14}" text-anchor="end" font-size="9">{xhi:.4g}</text>',
        f'<text x="{_ML - 4}" y="{_H - _MB}" text-anchor="end" font-size="9">{ylo:.4g}</text>',
        f'<text x="{_ML - 4}" y="{_MT + 10}" text-anchor="end" font-size="9">{yhi:.4g}</text>',
    ]
    return parts


def _polyline(xs, ys, color: str) -> str:
    pts = " ".join(f"{x:.2f},{y:.2f}" for x, y in zip(xs, ys))
    return f'<polyline points="{pts}" fill="none" stroke="{color}" stroke-width="1.5"/>'


def _write(path: Path, body: list) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    content = (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_W}" height="{_H}" '
        f'font-family="sans-serif">\n' + "\n".join(body) + "\n</svg>\n"
    )
    path.write_text(content, encoding="utf-8")
    return path


def svg_lines(path, x, series: dict, title: str = "", xlabel: str = "",
              ylabel: str = "", logy: bool = False) -> Path:
    """Write a multi-series line chart; series maps label -> y values."""
    x = list(x)
    transformed = {}
    for label, ys in series.items():
        ys = [float(v) for v in ys]
        if logy:
            ys = [math.log10(v) if v > 0 else float("nan") for v in ys]
        transformed[label] = ys
    finite = [v for ys in transformed.values() for v in ys if math.isfinite(v)]
    ylo, yhi = (min(finite), max(finite)) if finite else (0.0, 1.0)
    xlo, xhi = min(x), max(x)
    body = _axes(title, xlabel, ("log10 " if logy else "") + ylabel, xlo, xhi, ylo, yhi)
    for k, (label, ys) in enumerate(transformed.items()):
        color = _COLORS[k % len(_COLORS)]
        px = _scale(x, xlo, xhi, _ML, _W - _MR)
        py = _scale(ys, ylo, yhi, _H - _MB, _MT)
        pairs = [(a, b) for a, b, v in zip(px, py, ys) if math.isfinite(v)]
        if pairs:
            body.append(_polyline([a for a, _ in pairs], [b for _, b in pairs], color))
        body.append(
            f'<text x="{_W - _MR - 6}" y="{_MT + 14 + 13 * k}" text-anchor="end" '
            f'font-size="10" fill="{color}">{label}</text>'
        )
    return _write(path, body)


def svg_histogram(path, centers, density, model, title: str = "") -> Path:
    """Write histogram bars with the model density overlaid."""
    centers = [float(v) for v in centers]
    density = [float(v) for v in density]
    model = [float(v) for v in model]
    xlo, xhi = min(centers), max(centers)
    yhi = max(max(density), max(model)) or 1.0
    body = _axes(title, "magnitude", "density", xlo, xhi, 0.0, yhi)
    px = _scale(centers, xlo, xhi, _ML, _W - _MR)
    width = max((px[1] - px[0]) if len(px) > 1 else 4.0, 1.0)
    for cx, d in zip(px, density):
        top = _scale([d], 0.0, yhi, _H - _MB, _MT)[0]
        body.append(
            f'<rect x="{cx - width / 2:.2f}" y="{top:.2f}" width="{width:.2f}" '
            f'height="{_H - _MB - top:.2f}" fill="#9ecae1" stroke="none"/>'
        )
    py = _scale(model, 0.0, yhi, _H - _MB, _MT)
    body.append(_polyline(px, py, "#d62728"))
    return _write(path, body)
