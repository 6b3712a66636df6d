"""Validated (m+2)-angulations: face tracing, enumeration, serialization.

Faces are traced from a rotation system: at every marked vertex the incident
darts (diagonal ends and boundary-edge ends) are sorted by the exact angular
order their universal-cover representatives leave the vertex in.  Face
traversal is the usual next-dart walk of a combinatorial map; the two orbits
that stay on one boundary circle (the region outside the outer polygon and
the hole inside the inner one) are discarded.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .geometry import (
    AnnulusConfig,
    MDiagonal,
    Type1,
    Type2,
    check_valid,
    crosses,
    lift_type1,
    sort_key,
    span,
)


class AngulationError(ValueError):
    pass


class WrongCount(AngulationError):
    def __init__(self, expected: int, got: int):
        super().__init__(f"an (m+2)-angulation here needs {expected} diagonals, got {got}")
        self.expected = expected
        self.got = got


class CrossingPair(AngulationError):
    def __init__(self, d1: MDiagonal, d2: MDiagonal):
        super().__init__(f"diagonals cross: {d1} x {d2}")
        self.pair = (d1, d2)


class BadFace(AngulationError):
    pass


class LimitExceeded(AngulationError):
    def __init__(self, cap: int):
        super().__init__(f"enumeration cap of {cap} angulations exceeded")
        self.cap = cap


@dataclass(frozen=True, order=True)
class DiagonalRef:
    index: int


@dataclass(frozen=True, order=True)
class OuterEdge:
    index: int


@dataclass(frozen=True, order=True)
class InnerEdge:
    index: int


Side = DiagonalRef | OuterEdge | InnerEdge


@dataclass(frozen=True)
class Face:
    """Cyclic side sequence of one complementary region, in traced order."""

    sides: tuple[Side, ...]

    def __len__(self) -> int:
        return len(self.sides)

    def diagonal_indices(self) -> tuple[int, ...]:
        return tuple(s.index for s in self.sides if isinstance(s, DiagonalRef))


@dataclass(frozen=True)
class Angulation:
    config: AnnulusConfig
    diagonals: tuple[MDiagonal, ...]
    faces: tuple[Face, ...]

    def diagonal_index(self, diag: MDiagonal) -> int:
        return self.diagonals.index(diag)


# ---------------------------------------------------------------------------
# Rotation system and face tracing
# ---------------------------------------------------------------------------

# A dart is one end of a side object, sitting at a marked vertex.  Sort keys
# encode the exact clockwise angular order (sweeping into the annulus from
# the counterclockwise boundary direction) in which darts leave the vertex.


@dataclass
class _Dart:
    side: Side
    vertex: tuple[str, int]
    key: tuple
    twin: int = -1


def _darts_for(config: AnnulusConfig, diagonals: tuple[MDiagonal, ...]) -> list[_Dart]:
    darts: list[_Dart] = []

    def add(a: _Dart, b: _Dart) -> None:
        a.twin = len(darts) + 1
        b.twin = len(darts)
        darts.extend((a, b))

    for j in range(config.outer_size):
        nxt = (j + 1) % config.outer_size
        add(
            _Dart(OuterEdge(j), ("O", j), (0,)),
            _Dart(OuterEdge(j), ("O", nxt), (4,)),
        )
    for j in range(config.inner_size):
        nxt = (j + 1) % config.inner_size
        add(
            _Dart(InnerEdge(j), ("I", j), (1,)),
            _Dart(InnerEdge(j), ("I", nxt), (0,)),
        )
    for idx, diag in enumerate(diagonals):
        ref = DiagonalRef(idx)
        if isinstance(diag, Type1):
            x_out, x_in = lift_type1(config, diag)
            dx = x_in - x_out
            add(
                _Dart(ref, ("O", diag.outer), (2, -dx)),
                _Dart(ref, ("I", diag.inner), (3, -dx)),
            )
        elif isinstance(diag, Type2):
            s = span(config, diag)
            end = (diag.start + s) % config.outer_size
            add(
                _Dart(ref, ("O", diag.start), (1, s)),
                _Dart(ref, ("O", end), (3, -s)),
            )
        else:
            s = span(config, diag)
            end = (diag.start + s) % config.inner_size
            add(
                _Dart(ref, ("I", diag.start), (2, s)),
                _Dart(ref, ("I", end), (4, -s)),
            )
    return darts


def _trace_orbits(
    config: AnnulusConfig, diagonals: tuple[MDiagonal, ...]
) -> list[list[_Dart]]:
    darts = _darts_for(config, diagonals)
    order: dict[tuple[str, int], list[int]] = {}
    for i, d in enumerate(darts):
        order.setdefault(d.vertex, []).append(i)
    position: dict[int, int] = {}
    for v, ids in order.items():
        ids.sort(key=lambda i: darts[i].key)
        for pos, i in enumerate(ids):
            position[i] = pos

    def next_dart(i: int) -> int:
        t = darts[i].twin
        ring = order[darts[t].vertex]
        return ring[(position[t] + 1) % len(ring)]

    seen = [False] * len(darts)
    orbits: list[list[_Dart]] = []
    for start in range(len(darts)):
        if seen[start]:
            continue
        orbit: list[_Dart] = []
        i = start
        while not seen[i]:
            seen[i] = True
            orbit.append(darts[i])
            i = next_dart(i)
        orbits.append(orbit)
    return orbits


def _is_boundary_orbit(orbit: list[_Dart]) -> bool:
    return all(not isinstance(d.side, DiagonalRef) for d in orbit)


def trace_faces(config: AnnulusConfig, diagonals: tuple[MDiagonal, ...]) -> list[Face]:
    """All complementary regions, excluding the two boundary-circle orbits."""
    orbits = _trace_orbits(config, diagonals)
    boundary = [o for o in orbits if _is_boundary_orbit(o)]
    if len(boundary) != 2:
        raise BadFace(
            f"expected exactly 2 boundary orbits, traced {len(boundary)}; "
            "the diagonal set does not cut the annulus into disks"
        )
    sizes = sorted(len(o) for o in boundary)
    if sizes != sorted((config.outer_size, config.inner_size)):
        raise BadFace("boundary orbits do not traverse the full boundary circles")
    faces = [
        Face(_rotate_to_min(tuple(d.side for d in o)))
        for o in orbits
        if not _is_boundary_orbit(o)
    ]
    faces.sort(key=lambda f: tuple(_side_sort(s) for s in f.sides))
    return faces


def _rotate_to_min(sides: tuple[Side, ...]) -> tuple[Side, ...]:
    # Canonical rotation of the cyclic order (orientation is preserved).
    pivot = min(range(len(sides)), key=lambda i: _side_sort(sides[i]))
    return sides[pivot:] + sides[:pivot]


def _side_sort(side: Side) -> tuple:
    if isinstance(side, DiagonalRef):
        return (0, side.index)
    if isinstance(side, OuterEdge):
        return (1, side.index)
    return (2, side.index)


# ---------------------------------------------------------------------------
# Validation
# ---------------------------------------------------------------------------


def validate(config: AnnulusConfig, diagonals: Iterable[MDiagonal]) -> Angulation:
    """Check the full (m+2)-angulation contract and compute the face list."""
    diags = tuple(sorted(set(diagonals), key=sort_key))
    for d in diags:
        check_valid(config, d)
    expected = config.p + config.q
    if len(diags) != expected:
        raise WrongCount(expected, len(diags))
    for i in range(len(diags)):
        for j in range(i + 1, len(diags)):
            if crosses(config, diags[i], diags[j]):
                raise CrossingPair(diags[i], diags[j])
    faces = trace_faces(config, diags)
    target = config.m + 2
    for face in faces:
        if len(face) != target:
            raise BadFace(f"face with {len(face)} sides, expected {target}: {face.sides}")
    if len(faces) != expected:
        raise BadFace(f"traced {len(faces)} faces, expected {expected}")
    appearances = [0] * len(diags)
    for face in faces:
        for s in face.sides:
            if isinstance(s, DiagonalRef):
                appearances[s.index] += 1
    if any(n != 2 for n in appearances):
        raise BadFace(f"diagonal face incidences {appearances}, expected all 2")
    return Angulation(config, diags, tuple(faces))


def faces_of(angulation: Angulation) -> tuple[Face, ...]:
    return angulation.faces


# ---------------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------------


def enumerate_angulations(
    config: AnnulusConfig,
    winding_bound: int = 1,
    cap: int | None = None,
) -> Iterator[Angulation]:
    """Yield every (m+2)-angulation, windings normalised to minimum 0.

    Deterministic backtracking over the candidate diagonals in sorted order.
    Only one representative per Dehn-twist orbit is produced: the one whose
    smallest outer-to-inner winding is 0.  ``winding_bound`` caps the largest
    normalised winding; the default of 1 is exhaustive because non-crossing
    outer-to-inner arcs never differ in winding by 2 or more (checked against
    the brute-force oracle in the test suite).
    """
    from .geometry import all_diagonals

    candidates = all_diagonals(config, 0, winding_bound)
    n = len(candidates)
    compatible = [[False] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            ok = not crosses(config, candidates[i], candidates[j])
            compatible[i][j] = compatible[j][i] = ok
    need = config.p + config.q
    yielded = 0
    chosen: list[int] = []

    def emit(stack: list[int]) -> Angulation | None:
        diags = tuple(candidates[i] for i in stack)
        windings = [d.winding for d in diags if isinstance(d, Type1)]
        if windings and min(windings) != 0:
            return None
        try:
            return validate(config, diags)
        except AngulationError:
            return None

    def search(start: int) -> Iterator[Angulation]:
        nonlocal yielded
        if len(chosen) == need:
            ang = emit(chosen)
            if ang is not None:
                if cap is not None and yielded >= cap:
                    raise LimitExceeded(cap)
                yielded += 1
                yield ang
            return
        remaining = need - len(chosen)
        for idx in range(start, n - remaining + 1):
            if all(compatible[idx][j] for j in chosen):
                chosen.append(idx)
                yield from search(idx + 1)
                chosen.pop()

    yield from search(0)


# ---------------------------------------------------------------------------
# The canonical angulation
# ---------------------------------------------------------------------------


def delta_P(config: AnnulusConfig) -> Angulation:
    """Canonical fan angulation whose quiver is the hereditary two-path cycle.

    One fan of outer-to-inner arcs ends at inner vertex 0 (one arc from each
    outer vertex divisible by m); a second fan starts at outer vertex 0 and
    reaches every inner vertex divisible by m, entering one full turn later
    (hence the -1 winding on the second arc to inner vertex 0).
    """
    m = config.m
    diags: list[MDiagonal] = [Type1(m * j, 0, 0) for j in range(config.p)]
    diags.append(Type1(0, 0, -1))
    diags.extend(Type1(0, m * l, 0) for l in range(1, config.q))
    return validate(config, diags)


# ---------------------------------------------------------------------------
# JSON serialization
# ---------------------------------------------------------------------------


def angulation_to_json(angulation: Angulation) -> str:
    import json

    from .geometry import format_diagonal

    payload = {
        "config": {
            "p": angulation.config.p,
            "q": angulation.config.q,
            "m": angulation.config.m,
        },
        "diagonals": [format_diagonal(d) for d in angulation.diagonals],
    }
    return json.dumps(payload, indent=2, sort_keys=True)


def angulation_from_json(text: str) -> Angulation:
    import json

    from .geometry import parse_diagonal

    payload = json.loads(text)
    cfg = payload["config"]
    config = AnnulusConfig(int(cfg["p"]), int(cfg["q"]), int(cfg["m"]))
    diagonals = [parse_diagonal(config, lit) for lit in payload["diagonals"]]
    return validate(config, diagonals)
