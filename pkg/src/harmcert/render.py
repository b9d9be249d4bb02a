"""Deterministic SVG rendering of the mapped disk.

Draws the images under the harmonic extension of concentric circles and
radial spokes, plus the target boundary curve.  Output bytes depend only on
the inputs and the toolkit version: coordinates are printed at 17
significant digits and the viewBox is fitted to the image bounding box with
a 5% margin.
"""

from __future__ import annotations

import numpy as np

from .curves import JordanCurve
from .harmonic import HarmonicMap, eval_w
from .serialize import format_float

_SPOKE_RMAX = 1.0 - 1e-6


def disk_image_polylines(hm: HarmonicMap, rings: int = 8, spokes: int = 16,
                         samples: int = 512):
    """Ring and spoke image polylines (closed rings repeat the first point)."""
    if rings < 2 or spokes < 2:
        raise ValueError("ring/spoke counts must be >= 2")
    ring_lines = []
    t = 2.0 * np.pi * np.arange(samples) / samples
    unit = np.exp(1j * t)
    for i in range(1, rings + 1):
        radius = i / (rings + 1.0)
        w = eval_w(hm, radius * unit)
        ring_lines.append(np.concatenate([w, w[:1]]))
    spoke_lines = []
    rr = np.linspace(0.0, _SPOKE_RMAX, samples)
    for j in range(spokes):
        w = eval_w(hm, rr * np.exp(2j * np.pi * j / spokes))
        spoke_lines.append(w)
    return ring_lines, spoke_lines


def render_svg(hm: HarmonicMap, curve: JordanCurve = None, rings: int = 8,
               spokes: int = 16, samples: int = 512,
               stroke_width: float = 0.01) -> str:
    ring_lines, spoke_lines = disk_image_polylines(hm, rings, spokes, samples)
    boundary = None
    if curve is not None:
        s = np.linspace(0.0, curve.length, samples)
        boundary = curve.position(s)
    pts = np.concatenate(ring_lines + spoke_lines
                         + ([boundary] if boundary is not None else []))
    x0, x1 = float(pts.real.min()), float(pts.real.max())
    y0, y1 = float((-pts.imag).min()), float((-pts.imag).max())
    mx, my = 0.05 * (x1 - x0), 0.05 * (y1 - y0)
    view = (x0 - mx, y0 - my, (x1 - x0) + 2 * mx, (y1 - y0) + 2 * my)

    def poly(zs: np.ndarray) -> str:
        coords = " ".join(
            f"{format_float(z.real)},{format_float(-z.imag)}" for z in zs)
        return f'<polyline points="{coords}"/>'

    sw = format_float(stroke_width)
    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="'
        f'{format_float(view[0])} {format_float(view[1])} '
        f'{format_float(view[2])} {format_float(view[3])}">',
        f'<g fill="none" stroke="#4477aa" stroke-width="{sw}">',
    ]
    parts.extend(poly(z) for z in ring_lines)
    parts.append('</g>')
    parts.append(f'<g fill="none" stroke="#cc6677" stroke-width="{sw}">')
    parts.extend(poly(z) for z in spoke_lines)
    parts.append('</g>')
    if boundary is not None:
        parts.append(f'<g fill="none" stroke="#000000" stroke-width="{sw}">')
        parts.append(poly(boundary))
        parts.append('</g>')
    parts.append('</svg>')
    return "\n".join(parts) + "\n"
