"""Synthesize an angulation realizing an accepted bound quiver.

The construction walks the root cycle once around the annulus keeping two
cursors, an outer position that only decreases and an inner position that
only increases.  Every root vertex without a relation becomes an
outer-to-inner arc at the current cursor pair; junctions advance the
cursors and may carry decorations:

  * plain forward junction        inner +m           (face on the inner side)
  * plain backward junction       outer -m           (face on the outer side)
  * run of r forward relations    r chained outer pockets, outer -r(m+1),
                                  then inner +(m-r)
  * run of r backward relations   mirrored with inner pockets
  * hanging single-vertex ray     one extra pocket inside the junction face
  * saturated cycle fused along   a fully diagonal face: the s-1 interior
    a segment of s root arrows    segment vertices become pockets on one
                                  boundary and the m+1-s remaining cycle
                                  vertices chained pockets on the other

The walk closes exactly when the clockwise and counterclockwise relation
counts agree modulo m; the polygon parameters are read off the cursor
totals.  Both traversal directions are attempted and every produced
angulation is re-validated and checked isomorphic to the input, so an
incorrect construction can never escape.  Structures outside this
vocabulary (anything hanging below a pocket, rays on relation junctions,
walks closing on fewer than two vertices per boundary) are refused as
unsupported.
"""

from __future__ import annotations

from dataclasses import dataclass

from .angulation import Angulation, AngulationError, validate
from .geometry import AnnulusConfig, GeometryError, MDiagonal, Type1, Type2, Type3
from .quiver import BoundQuiver, bound_quiver, iso_check
from .recognizer import ACCEPTED, CycleRecord, RecognitionReport, recognize


class RealizationError(ValueError):
    pass


class NotAccepted(RealizationError):
    pass


class UnsupportedShape(RealizationError):
    pass


@dataclass
class _Junction:
    """Between root vertices v_i and v_{i+1}; decorations attach here."""

    arrow_id: str
    forward: bool
    ray_u: str | None = None  # hanging vertex attached at the v_i end
    ray_v: str | None = None  # hanging vertex attached at the v_{i+1} end
    in_run: bool = False
    in_gadget: bool = False


@dataclass
class _SaturatedGadget:
    """A saturated cycle fused with the root along a contiguous segment.

    The segment's interior root vertices become pockets on one boundary and
    the cycle's off-root vertices become chained pockets on the other; the
    whole cycle bounds a single fully-diagonal face.
    """

    entry_junction: int
    length: int  # number of shared root arrows
    forward: bool
    middles: tuple[str, ...]  # interior segment vertices, traversal order
    off_root: tuple[str, ...]  # remaining cycle vertices, cycle order from exit


def realize(bq: BoundQuiver, m: int) -> tuple[AnnulusConfig, Angulation]:
    """Build some annulus angulation whose bound quiver is isomorphic to bq."""
    report = recognize(bq, m)
    if report.verdict != ACCEPTED:
        raise NotAccepted(
            f"realization requires verdict Accepted with a root cycle, got {report.verdict}"
        )
    root = report.root_cycle
    assert root is not None
    failures: list[str] = []
    candidates: list[tuple[AnnulusConfig, Angulation]] = []
    for traversal in (root, _reverse(root)):
        try:
            candidates.append(_attempt(bq, m, report, traversal))
        except UnsupportedShape as exc:
            failures.append(str(exc))
    if not candidates:
        raise UnsupportedShape("; ".join(dict.fromkeys(failures)))
    candidates.sort(key=lambda pair: (pair[0].p < pair[0].q, pair[0].p, pair[0].q))
    return candidates[0]


def _reverse(root: CycleRecord) -> CycleRecord:
    n = len(root)
    verts = tuple(root.vertices[-k % n] for k in range(n))
    arrows = tuple(root.arrows[(-1 - k) % n] for k in range(n))
    forward = tuple(not root.forward[(-1 - k) % n] for k in range(n))
    return CycleRecord(verts, arrows, forward, root.oriented, root.saturated)


def _attempt(
    bq: BoundQuiver, m: int, report: RecognitionReport, root: CycleRecord
) -> tuple[AnnulusConfig, Angulation]:
    n = len(root)
    by_id = {a.id: a for a in bq.arrows}
    root_vertex_index = {v: i for i, v in enumerate(root.vertices)}
    root_edges = set(root.arrows)
    degree = {v: 0 for v in bq.vertices}
    for a in bq.arrows:
        degree[a.src] += 1
        degree[a.dst] += 1

    junctions = [_Junction(root.arrows[i], root.forward[i]) for i in range(n)]
    saturated_sets = [c.arrow_set() for c in report.saturated_cycles if c.saturated]

    # Strictly internal relation through each root vertex; relations lying on
    # a saturated cycle are realised by that cycle's gadget instead.
    rel_at = [False] * n
    for i in range(n):
        prev_arrow = root.arrows[(i - 1) % n]
        next_arrow = root.arrows[i]
        prev_fwd = root.forward[(i - 1) % n]
        next_fwd = root.forward[i]
        pair = None
        if prev_fwd and next_fwd and (prev_arrow, next_arrow) in bq.relations:
            pair = (prev_arrow, next_arrow)
        if not prev_fwd and not next_fwd and (next_arrow, prev_arrow) in bq.relations:
            pair = (next_arrow, prev_arrow)
        if pair is not None and not any(set(pair) <= s for s in saturated_sets):
            rel_at[i] = True
    for i in range(n):
        if rel_at[i]:
            junctions[(i - 1) % n].in_run = True
            junctions[i].in_run = True

    gadgets: dict[int, _SaturatedGadget] = {}
    gadget_middles: set[str] = set()
    in_saturated: set[str] = set()

    for cycle in report.saturated_cycles:
        if not cycle.saturated:
            continue
        shared = [aid for aid in cycle.arrows if aid in root_edges]
        shared_vertices = set(cycle.vertices) & set(root.vertices)
        if len(shared) == 0:
            if len(shared_vertices) >= 1:
                raise UnsupportedShape(
                    f"saturated cycle {cycle.vertices} attached without a shared arrow"
                )
            raise UnsupportedShape(
                f"saturated cycle {cycle.vertices} is disjoint from the root"
            )
        s = len(shared)
        k = m + 1 - s
        if k <= 0 or s >= n:
            raise UnsupportedShape(
                f"saturated cycle {cycle.vertices} shares too long a segment ({s})"
            )
        idxs = {root.arrows.index(aid) for aid in shared}
        entries = [j for j in idxs if (j - 1) % n not in idxs]
        if len(entries) != 1:
            raise UnsupportedShape(
                f"saturated cycle {cycle.vertices} meets the root in several segments"
            )
        entry = entries[0]
        if {(entry + t) % n for t in range(s)} != idxs:
            raise UnsupportedShape(
                f"saturated cycle {cycle.vertices} meets the root in several segments"
            )
        directions = {root.forward[j] for j in idxs}
        if len(directions) != 1:
            raise UnsupportedShape(
                f"saturated cycle {cycle.vertices} shares arrows of mixed direction"
            )
        forward = directions.pop()
        middles = tuple(root.vertices[(entry + t) % n] for t in range(1, s))
        v_entry = root.vertices[entry]
        v_exit = root.vertices[(entry + s) % n]
        for v in middles:
            if degree[v] != 2:
                raise UnsupportedShape(
                    f"segment vertex {v} of {cycle.vertices} carries extra structure"
                )
        if forward:
            path = _path_between(cycle, shared, v_exit, v_entry)
        else:
            path = _path_between(cycle, shared, v_entry, v_exit)
        if len(path) != k:
            raise UnsupportedShape(
                f"saturated cycle {cycle.vertices} has {len(path)} off-root "
                f"vertices, expected {k}"
            )
        for w in path:
            if w in root_vertex_index or degree[w] != 2:
                raise UnsupportedShape(
                    f"vertex {w} on saturated cycle {cycle.vertices} carries "
                    "extra structure"
                )
        for t in range(s):
            j = (entry + t) % n
            if j in gadgets or junctions[j].in_run:
                raise UnsupportedShape(f"conflicting decorations on junction {j}")
            junctions[j].in_gadget = True
        gadgets[entry] = _SaturatedGadget(entry, s, forward, middles, path)
        gadget_middles.update(middles)
        in_saturated.update(path)
        in_saturated.update(middles)

    off_root = [v for v in bq.vertices if v not in root_vertex_index]

    for w in off_root:
        if w in in_saturated:
            continue
        incident = [a for a in bq.arrows if a.src == w or a.dst == w]
        if len(incident) != 1:
            raise UnsupportedShape(f"off-root vertex {w} is not a single-arrow ray")
        alpha = incident[0]
        u = alpha.dst if alpha.src == w else alpha.src
        if u not in root_vertex_index:
            raise UnsupportedShape(f"ray {w} hangs off the non-root vertex {u}")
        if alpha.src == w:
            partners = [
                second
                for (first, second) in bq.relations
                if first == alpha.id and second in root_edges
            ]
        else:
            partners = [
                first
                for (first, second) in bq.relations
                if second == alpha.id and first in root_edges
            ]
        if len(partners) != 1:
            raise UnsupportedShape(
                f"ray {w} needs exactly one union relation with a root arrow, "
                f"found {len(partners)}"
            )
        rho = partners[0]
        j = root.arrows.index(rho)
        junction = junctions[j]
        if junction.in_gadget or junction.in_run:
            raise UnsupportedShape(f"ray {w} attaches to a decorated junction")
        iu = root_vertex_index[u]
        if iu == j:
            if junction.ray_u is not None:
                raise UnsupportedShape(f"two rays at one junction end near {u}")
            junction.ray_u = w
        elif iu == (j + 1) % n:
            if junction.ray_v is not None:
                raise UnsupportedShape(f"two rays at one junction end near {u}")
            junction.ray_v = w
        else:
            raise UnsupportedShape(f"union relation of ray {w} does not match vertex {u}")

    # Rotate the traversal to start at a relation-free, pocket-free vertex.
    start = None
    for i in range(n):
        if not rel_at[i] and root.vertices[i] not in gadget_middles:
            start = i
            break
    if start is None:
        raise UnsupportedShape("every root vertex carries a relation")
    order = [(start + k) % n for k in range(n)]

    placements: dict[str, tuple[str, int, int]] = {}
    x = y = 0
    placements[root.vertices[order[0]]] = ("T1", 0, 0)
    pos = 0
    while pos < n:
        i = order[pos]
        nxt = (i + 1) % n
        if i in gadgets:
            g = gadgets[i]
            if g.forward:
                for idx, v in enumerate(g.middles, start=1):
                    placements[v] = ("T2", x - idx * (m + 1), 1)
                x -= (g.length - 1) * (m + 1)
                k = len(g.off_root)
                for idx, w in enumerate(g.off_root):
                    placements[w] = ("T3", y + (k - 1 - idx) * (m + 1), 1)
                y += k * (m + 1)
            else:
                for idx, v in enumerate(g.middles, start=1):
                    placements[v] = ("T3", y + (idx - 1) * (m + 1), 1)
                y += (g.length - 1) * (m + 1)
                for idx, w in enumerate(g.off_root, start=1):
                    placements[w] = ("T2", x - idx * (m + 1), 1)
                x -= len(g.off_root) * (m + 1)
            pos += g.length
            if pos < n:
                placements[root.vertices[order[pos]]] = ("T1", x, y)
            continue
        if pos + 1 < n and rel_at[nxt]:
            run = []
            k = pos + 1
            while k < n and rel_at[order[k]]:
                run.append(order[k])
                k += 1
            r = len(run)
            forward = root.forward[i]
            for idx, vertex_index in enumerate(run, start=1):
                v = root.vertices[vertex_index]
                if forward:
                    placements[v] = ("T2", x - idx * (m + 1), 1)
                else:
                    placements[v] = ("T3", y + (idx - 1) * (m + 1), 1)
            if forward:
                x -= r * (m + 1)
                y += m - r
            else:
                y += r * (m + 1)
                x -= m - r
            pos = k
            if pos < n:
                placements[root.vertices[order[pos]]] = ("T1", x, y)
            continue

        junction = junctions[i]
        t = (junction.ray_u is not None) + (junction.ray_v is not None)
        if t > m:
            raise UnsupportedShape(f"junction {i} cannot hold {t} pockets at m={m}")
        width = m * (1 + t)
        if junction.forward:
            if junction.ray_u is not None:
                placements[junction.ray_u] = ("T3", y, 1)
            if junction.ray_v is not None:
                placements[junction.ray_v] = ("T3", y + width - (m + 1), 1)
            y += width
        else:
            if junction.ray_u is not None:
                placements[junction.ray_u] = ("T2", x - (m + 1), 1)
            if junction.ray_v is not None:
                placements[junction.ray_v] = ("T2", x - width, 1)
            x -= width
        pos += 1
        if pos < n:
            v = root.vertices[order[pos]]
            placements[v] = ("T1", x, y)

    if (-x) % m != 0 or y % m != 0:
        raise UnsupportedShape("cursor totals are not multiples of m")
    p, q = (-x) // m, y // m
    if p < 2 or q < 2:
        raise UnsupportedShape(f"walk closes on a degenerate polygon p={p}, q={q}")
    config = AnnulusConfig(p, q, m)

    diagonals = [_materialize(config, entry) for entry in placements.values()]
    t1_windings = [d.winding for d in diagonals if isinstance(d, Type1)]
    shift = -min(t1_windings)
    diagonals = [
        Type1(d.outer, d.inner, d.winding + shift) if isinstance(d, Type1) else d
        for d in diagonals
    ]
    try:
        ang = validate(config, diagonals)
    except (AngulationError, GeometryError) as exc:
        raise UnsupportedShape(f"constructed diagonal set is not an angulation: {exc}")
    if not iso_check(bound_quiver(ang), bq):
        raise UnsupportedShape("constructed angulation does not reproduce the quiver")
    return (config, ang)


def _path_between(
    cycle: CycleRecord, excluded: list[str], start: str, end: str
) -> tuple[str, ...]:
    """Interior vertices of the cycle minus the shared arrows, from start to end."""
    adjacency: dict[str, list[str]] = {}
    banned = set(excluded)
    for j, aid in enumerate(cycle.arrows):
        if aid in banned:
            continue
        u = cycle.vertices[j]
        v = cycle.vertices[(j + 1) % len(cycle)]
        adjacency.setdefault(u, []).append(v)
        adjacency.setdefault(v, []).append(u)
    path = []
    prev, current = None, start
    while current != end:
        options = [w for w in adjacency.get(current, []) if w != prev]
        if not options:
            break
        prev, current = current, options[0]
        if current != end:
            path.append(current)
    return tuple(path)


def _materialize(config: AnnulusConfig, entry: tuple[str, int, int]) -> MDiagonal:
    kind, a, b = entry
    mp, mq = config.outer_size, config.inner_size
    if kind == "T1":
        o = a % mp
        i = b % mq
        winding = -((b - i) // mq) - ((a - o) // mp)
        return Type1(o, i, winding)
    if kind == "T2":
        return Type2(a % mp, b)
    return Type3(a % mq, b)
