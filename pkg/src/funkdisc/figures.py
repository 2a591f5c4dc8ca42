"""Deterministic SVG figure of geodesics in the band model.

The writer is hand rolled so that two runs produce byte-identical files:
no timestamps, no generated ids, fixed coordinate formatting.
"""

from __future__ import annotations

import math
from typing import List, Optional

from .errors import DomainError
from .geodesics import band_branch_residuals

# disc chords x2 = m x1 + c drawn in the band, plus vertical chords x1 = k
CHORD_CATALOG = ((0.0, 0.0), (0.0, 0.4), (0.0, -0.4), (1.0, 0.2), (-1.0, 0.2), (0.5, -0.5))
VERTICAL_CATALOG = (-0.5, 0.0, 0.5)

X1_WINDOW = 3.0          # clip slanted curves to |X1| <= X1_WINDOW
VERTEX_TOL = 1e-8        # every emitted vertex satisfies the family equation to this

_PALETTE = (
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
    "#8c564b", "#17becf", "#bcbd22", "#7f7f7f",
)


def _x1_to_band(x1: float) -> float:
    return 0.5 * math.log(4.0 * (1.0 - x1) / (1.0 + x1))


def _band_to_x1(b1: float) -> float:
    e2 = math.exp(2.0 * b1)
    return (4.0 - e2) / (4.0 + e2)


def band_figure_curves(n: int = 121) -> List[dict]:
    """Vertex lists for the catalog chords mapped into the band chart.

    Slanted chords are sampled uniformly in the band coordinate X1 over the
    window where the chord stays inside the disc; verticals are uniform in
    X2 with X1 exactly constant.  Each curve dict carries kind, params,
    branch ('minus' for the implicit family), and vertices.
    """
    if n < 2:
        raise DomainError("need at least 2 vertices per curve")
    curves: List[dict] = []
    for m, c in CHORD_CATALOG:
        q = 1.0 + m * m
        disc = math.sqrt(q - c * c)
        # chord-in-disc x1 interval, shrunk toward its midpoint off the circle
        mid = -m * c / q
        a1 = mid - (disc / q) * (1.0 - 1e-9)
        a2 = mid + (disc / q) * (1.0 - 1e-9)
        b_hi = min(_x1_to_band(a1), X1_WINDOW)
        b_lo = max(_x1_to_band(a2), -X1_WINDOW)
        verts = []
        worst = 0.0
        for j in range(n):
            b1 = b_lo + (b_hi - b_lo) * j / (n - 1)
            x1 = _band_to_x1(b1)
            x2 = m * x1 + c
            b2 = -math.atan2(x2, math.sqrt(max(1.0 - x1 * x1 - x2 * x2, 0.0)))
            minus, _plus = band_branch_residuals(m, c, (b1, b2))
            worst = max(worst, minus)
            verts.append((b1, b2))
        if worst >= VERTEX_TOL:
            raise DomainError(f"chord m={m}, c={c}: vertex residual {worst:.3e}")
        curves.append(
            {
                "kind": "band_implicit",
                "params": (m, c),
                "branch": "minus",
                "max_residual": worst,
                "vertices": verts,
            }
        )
    for k in VERTICAL_CATALOG:
        b1 = _x1_to_band(k)
        half = math.pi / 2.0 - 0.01
        verts = [(b1, -half + 2.0 * half * j / (n - 1)) for j in range(n)]
        curves.append(
            {
                "kind": "band_vertical",
                "params": (b1,),
                "branch": None,
                "max_residual": 0.0,
                "vertices": verts,
            }
        )
    return curves


def _fmt(v: float) -> str:
    return format(v, ".3f")


def render_band_svg(path: Optional[str] = None, n: int = 121) -> str:
    """Render the catalog curves to SVG 1.1 text; optionally write to path."""
    curves = band_figure_curves(n)
    w, h = 800, 380
    mx, half_pi = 40.0, math.pi / 2.0

    def sx(b1: float) -> float:
        return mx + (b1 + 3.4) / 6.8 * (w - 2 * mx)

    def sy(b2: float) -> float:
        return h / 2.0 - b2 / half_pi * (h / 2.0 - 30.0)

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" '
        f'height="{h}" viewBox="0 0 {w} {h}">',
        f'<rect x="0" y="0" width="{w}" height="{h}" fill="white"/>',
        f'<line x1="{_fmt(mx)}" y1="{_fmt(sy(half_pi))}" x2="{_fmt(w - mx)}" '
        f'y2="{_fmt(sy(half_pi))}" stroke="#333333" stroke-dasharray="6,4"/>',
        f'<line x1="{_fmt(mx)}" y1="{_fmt(sy(-half_pi))}" x2="{_fmt(w - mx)}" '
        f'y2="{_fmt(sy(-half_pi))}" stroke="#333333" stroke-dasharray="6,4"/>',
        f'<line x1="{_fmt(mx)}" y1="{_fmt(sy(0.0))}" x2="{_fmt(w - mx)}" '
        f'y2="{_fmt(sy(0.0))}" stroke="#dddddd"/>',
    ]
    for i, cur in enumerate(curves):
        color = _PALETTE[i % len(_PALETTE)]
        pts = " ".join(f"{_fmt(sx(b1))},{_fmt(sy(b2))}" for b1, b2 in cur["vertices"])
        label = (
            f"chord m={cur['params'][0]:g} c={cur['params'][1]:g}"
            if cur["kind"] == "band_implicit"
            else f"vertical X1={cur['params'][0]:.6g}"
        )
        out.append(
            f'<polyline fill="none" stroke="{color}" stroke-width="1.5" '
            f'points="{pts}"><title>{label}</title></polyline>'
        )
    out.append("</svg>")
    text = "\n".join(out) + "\n"
    if path is not None:
        with open(path, "w", newline="\n") as fh:
            fh.write(text)
    return text
