"""Deterministic SVG pictures of angulations.

Diagonals are drawn by sampling their universal-cover lifts and mapping a
lift point (x, y) to the plane at angle 2*pi*x and radius interpolated
between the inner and outer circles.  Output bytes depend only on the
angulation, so renders are reproducible.
"""

from __future__ import annotations

import math

from .angulation import Angulation
from .geometry import AnnulusConfig
from .oracle import lift_polyline

_SIZE = 640
_CENTER = _SIZE / 2
_R_OUTER = 270.0
_R_INNER = 120.0
_SAMPLES = 24


def _point(x: float, y: float) -> tuple[float, float]:
    theta = 2.0 * math.pi * x
    radius = _R_INNER + (_R_OUTER - _R_INNER) * y
    return (_CENTER + radius * math.cos(theta), _CENTER - radius * math.sin(theta))


def _fmt(v: float) -> str:
    return f"{v:.2f}"


def _polyline_path(points: list[tuple[float, float]]) -> str:
    head = f"M {_fmt(points[0][0])} {_fmt(points[0][1])}"
    rest = " ".join(f"L {_fmt(px)} {_fmt(py)}" for px, py in points[1:])
    return f"{head} {rest}"


def render_svg(angulation: Angulation) -> str:
    config = angulation.config
    parts: list[str] = []
    parts.append(
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_SIZE}" height="{_SIZE}" '
        f'viewBox="0 0 {_SIZE} {_SIZE}">'
    )
    parts.append(f'<rect width="{_SIZE}" height="{_SIZE}" fill="white"/>')
    for radius in (_R_OUTER, _R_INNER):
        parts.append(
            f'<circle cx="{_fmt(_CENTER)}" cy="{_fmt(_CENTER)}" r="{_fmt(radius)}" '
            'fill="none" stroke="black" stroke-width="1.5"/>'
        )
    for diag in angulation.diagonals:
        lift = lift_polyline(config, diag)
        points: list[tuple[float, float]] = []
        for seg in range(len(lift) - 1):
            (x0, y0), (x1, y1) = lift[seg], lift[seg + 1]
            for k in range(_SAMPLES + 1):
                if seg > 0 and k == 0:
                    continue
                t = k / _SAMPLES
                points.append(
                    _point(float(x0) + t * float(x1 - x0), float(y0) + t * float(y1 - y0))
                )
        parts.append(
            f'<path d="{_polyline_path(points)}" fill="none" stroke="#1f5fa8" '
            'stroke-width="1.2"/>'
        )
    parts.extend(_vertex_marks(config))
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def _vertex_marks(config: AnnulusConfig) -> list[str]:
    out = []
    for j in range(config.outer_size):
        x, y = _point(j / config.outer_size, 1.0)
        lx, ly = _point(j / config.outer_size, 1.07)
        out.append(f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="3" fill="black"/>')
        out.append(
            f'<text x="{_fmt(lx)}" y="{_fmt(ly)}" font-size="11" '
            f'text-anchor="middle" dominant-baseline="middle">O{j}</text>'
        )
    for j in range(config.inner_size):
        x, y = _point(-j / config.inner_size, 0.0)
        lx, ly = _point(-j / config.inner_size, -0.15)
        out.append(f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="3" fill="black"/>')
        out.append(
            f'<text x="{_fmt(lx)}" y="{_fmt(ly)}" font-size="11" '
            f'text-anchor="middle" dominant-baseline="middle">I{j}</text>'
        )
    return out
