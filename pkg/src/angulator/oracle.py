"""Brute-force geometric references for the crossing predicate and face counts.

Everything here is deliberately independent of the closed-form predicates in
``geometry``: arcs are materialised as explicit rational polylines in the
universal cover and intersections are counted with exact orientation tests.
The fast predicates are trusted only after exhaustive agreement with this
module.
"""

from __future__ import annotations

from fractions import Fraction

from .geometry import (
    AnnulusConfig,
    MDiagonal,
    Type1,
    Type2,
    inner_lift,
    outer_lift,
    span,
)

Point = tuple[Fraction, Fraction]

# Pockets of boundary-parallel arcs dip into the strip by _EPS * span^2 so
# that nested pockets never touch and departure slopes are pairwise distinct.
_EPS_DENOM = 97


def _pocket_depth(config: AnnulusConfig, edge_span: int, size: int) -> Fraction:
    width = Fraction(edge_span, size)
    return width * width * Fraction(1, _EPS_DENOM)


def lift_polyline(config: AnnulusConfig, diag: MDiagonal, translate: int = 0) -> list[Point]:
    """Canonical polyline lift of a diagonal, shifted right by `translate`."""
    one = Fraction(1)
    zero = Fraction(0)
    if isinstance(diag, Type1):
        x0 = outer_lift(config, diag.outer, translate)
        x1 = inner_lift(config, diag.inner) + diag.winding + translate
        return [(x0, one), (x1, zero)]
    if isinstance(diag, Type2):
        size = config.outer_size
        s = span(config, diag)
        a = outer_lift(config, diag.start, translate)
        b = a + Fraction(s, size)
        depth = _pocket_depth(config, s, size)
        return [(a, one), ((a + b) / 2, one - depth), (b, one)]
    size = config.inner_size
    s = span(config, diag)
    a = inner_lift(config, diag.start) + translate
    b = a - Fraction(s, size)
    depth = _pocket_depth(config, s, size)
    return [(a, zero), ((a + b) / 2, zero + depth), (b, zero)]


def _orient(a: Point, b: Point, c: Point) -> int:
    v = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
    return (v > 0) - (v < 0)


def _on_segment(a: Point, b: Point, p: Point) -> bool:
    if _orient(a, b, p) != 0:
        return False
    return min(a[0], b[0]) <= p[0] <= max(a[0], b[0]) and min(a[1], b[1]) <= p[1] <= max(
        a[1], b[1]
    )


def _segments_cross(a: Point, b: Point, c: Point, d: Point) -> bool:
    """Intersection excluding shared endpoints; endpoint-on-interior counts."""
    shared = {a, b} & {c, d}
    o1, o2 = _orient(a, b, c), _orient(a, b, d)
    o3, o4 = _orient(c, d, a), _orient(c, d, b)
    if o1 != o2 and o3 != o4 and 0 not in (o1, o2, o3, o4):
        return True
    # Degenerate contacts: ignore those that are exactly a shared endpoint.
    for p in (c, d):
        if p not in shared and _on_segment(a, b, p):
            return True
    for p in (a, b):
        if p not in shared and _on_segment(c, d, p):
            return True
    return False


def _polylines_cross(poly1: list[Point], poly2: list[Point]) -> bool:
    for i in range(len(poly1) - 1):
        for j in range(len(poly2) - 1):
            if _segments_cross(poly1[i], poly1[i + 1], poly2[j], poly2[j + 1]):
                return True
    return False


def crossing_oracle(
    config: AnnulusConfig,
    d1: MDiagonal,
    d2: MDiagonal,
    shift_window: int | None = None,
) -> bool:
    """Count strict interleavings of polyline lifts over integer translates."""
    if d1 == d2:
        return False
    if shift_window is None:
        shift_window = config.outer_size + config.inner_size
        for d in (d1, d2):
            if isinstance(d, Type1):
                shift_window += abs(d.winding)
    poly1 = lift_polyline(config, d1)
    for t in range(-shift_window, shift_window + 1):
        if _polylines_cross(poly1, lift_polyline(config, d2, t)):
            return True
    return False


def face_count_oracle(angulation) -> int:
    """Face count from the Euler characteristic of the annulus (chi = 0)."""
    config = angulation.config
    vertices = config.outer_size + config.inner_size
    edges = config.outer_size + config.inner_size + len(angulation.diagonals)
    return edges - vertices
