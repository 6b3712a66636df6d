"""Coloured quivers of angulations, their colour-0 bound quivers, gentleness.

One vertex per diagonal.  Every face contributes one arrow for each ordered
pair of its diagonal sides, coloured by the number of face sides strictly
between them in the traced cyclic order.  The bound quiver keeps the
colour-0 arrows; a pair of consecutive colour-0 arrows is a relation exactly
when the three diagonals involved lie on one common face.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .angulation import Angulation, DiagonalRef


@dataclass(frozen=True, order=True)
class ColouredArrow:
    src: int
    dst: int
    colour: int
    face: int


@dataclass(frozen=True)
class ColouredQuiver:
    vertices: tuple[int, ...]
    arrows: tuple[ColouredArrow, ...]


@dataclass(frozen=True, order=True)
class Arrow:
    id: str
    src: str
    dst: str


@dataclass(frozen=True)
class BoundQuiver:
    """Vertices, labelled arrows, and quadratic monomial relations.

    A relation is an ordered pair of arrow ids (first traversed arrow first)
    whose composition is declared zero.
    """

    vertices: tuple[str, ...]
    arrows: tuple[Arrow, ...]
    relations: frozenset[tuple[str, str]]

    def arrow_by_id(self, arrow_id: str) -> Arrow:
        for a in self.arrows:
            if a.id == arrow_id:
                return a
        raise KeyError(arrow_id)

    def out_arrows(self, v: str) -> list[Arrow]:
        return [a for a in self.arrows if a.src == v]

    def in_arrows(self, v: str) -> list[Arrow]:
        return [a for a in self.arrows if a.dst == v]


def coloured_quiver(angulation: Angulation) -> ColouredQuiver:
    arrows: list[ColouredArrow] = []
    for face_id, face in enumerate(angulation.faces):
        sides = face.sides
        n = len(sides)
        diag_positions = [i for i, s in enumerate(sides) if isinstance(s, DiagonalRef)]
        for a in diag_positions:
            for b in diag_positions:
                if a == b:
                    continue
                colour = (b - a) % n - 1
                arrows.append(
                    ColouredArrow(sides[a].index, sides[b].index, colour, face_id)
                )
    arrows.sort()
    return ColouredQuiver(tuple(range(len(angulation.diagonals))), tuple(arrows))


def vertex_name(index: int) -> str:
    return f"d{index}"


def bound_quiver(angulation: Angulation) -> BoundQuiver:
    """Colour-0 subquiver with its quadratic monomial relations.

    Relation detection is face-local: two colour-0 arrows compose to zero
    exactly when they come from three consecutive diagonal sides of one
    face.  (When a pair of diagonals bounds two common faces, each face
    contributes its own arrow and pairs it only with its own neighbours;
    cross-face pairing would wrongly entangle the parallel copies.)
    """
    vertices = tuple(vertex_name(i) for i in range(len(angulation.diagonals)))
    arrows: list[Arrow] = []
    arrow_at: dict[tuple[int, int], str] = {}
    used_ids: set[str] = set()
    for face_id, face in enumerate(angulation.faces):
        sides = face.sides
        n = len(sides)
        for pos in range(n):
            nxt = (pos + 1) % n
            if isinstance(sides[pos], DiagonalRef) and isinstance(sides[nxt], DiagonalRef):
                arrow_id = f"f{face_id}d{sides[pos].index}"
                while arrow_id in used_ids:
                    arrow_id += "'"
                used_ids.add(arrow_id)
                arrow_at[(face_id, pos)] = arrow_id
                arrows.append(
                    Arrow(
                        arrow_id,
                        vertex_name(sides[pos].index),
                        vertex_name(sides[nxt].index),
                    )
                )
    relations: set[tuple[str, str]] = set()
    for face_id, face in enumerate(angulation.faces):
        n = len(face.sides)
        for pos in range(n):
            first = arrow_at.get((face_id, pos))
            second = arrow_at.get((face_id, (pos + 1) % n))
            if first is not None and second is not None:
                relations.add((first, second))
    arrows.sort()
    return BoundQuiver(vertices, tuple(arrows), frozenset(relations))


# ---------------------------------------------------------------------------
# Gentleness
# ---------------------------------------------------------------------------


def is_gentle(bq: BoundQuiver) -> tuple[bool, list[str]]:
    """Check the three gentleness conditions; returns (verdict, violations)."""
    violations: list[str] = []
    by_id = {a.id: a for a in bq.arrows}
    for first_id, second_id in bq.relations:
        first, second = by_id.get(first_id), by_id.get(second_id)
        if first is None or second is None or first.dst != second.src:
            violations.append(f"relation ({first_id},{second_id}) is not composable")
    rel = bq.relations
    for v in bq.vertices:
        if len(bq.out_arrows(v)) > 2:
            violations.append(f"G1: vertex {v} has out-degree > 2")
        if len(bq.in_arrows(v)) > 2:
            violations.append(f"G1: vertex {v} has in-degree > 2")
    for a in bq.arrows:
        succ = [b for b in bq.arrows if b.src == a.dst]
        pred = [g for g in bq.arrows if g.dst == a.src]
        plain_succ = [b for b in succ if (a.id, b.id) not in rel]
        plain_pred = [g for g in pred if (g.id, a.id) not in rel]
        bound_succ = [b for b in succ if (a.id, b.id) in rel]
        bound_pred = [g for g in pred if (g.id, a.id) in rel]
        if len(plain_succ) > 1:
            violations.append(f"G2: arrow {a.id} has {len(plain_succ)} unbound continuations")
        if len(plain_pred) > 1:
            violations.append(f"G2: arrow {a.id} has {len(plain_pred)} unbound precedents")
        if len(bound_succ) > 1:
            violations.append(f"G3: arrow {a.id} has {len(bound_succ)} bound continuations")
        if len(bound_pred) > 1:
            violations.append(f"G3: arrow {a.id} has {len(bound_pred)} bound precedents")
    return (not violations, violations)


# ---------------------------------------------------------------------------
# Isomorphism of bound quivers
# ---------------------------------------------------------------------------


def iso_check(bq1: BoundQuiver, bq2: BoundQuiver) -> bool:
    """Exact isomorphism: vertex bijection matching arrows and relations."""
    if len(bq1.vertices) != len(bq2.vertices) or len(bq1.arrows) != len(bq2.arrows):
        return False
    if len(bq1.relations) != len(bq2.relations):
        return False

    def signature(bq: BoundQuiver) -> dict[str, tuple[int, int]]:
        return {v: (len(bq.out_arrows(v)), len(bq.in_arrows(v))) for v in bq.vertices}

    sig1, sig2 = signature(bq1), signature(bq2)
    if sorted(sig1.values()) != sorted(sig2.values()):
        return False

    verts1 = sorted(bq1.vertices, key=lambda v: (sig1[v], v))
    adj1 = _arrow_multiset(bq1)
    adj2 = _arrow_multiset(bq2)
    rel1 = _relation_triples(bq1)
    rel2 = _relation_triples(bq2)

    mapping: dict[str, str] = {}
    used: set[str] = set()

    def consistent(v: str, w: str) -> bool:
        if sig1[v] != sig2[w]:
            return False
        for u, img in mapping.items():
            if adj1.get((v, u), 0) != adj2.get((w, img), 0):
                return False
            if adj1.get((u, v), 0) != adj2.get((img, w), 0):
                return False
        return True

    def extend(i: int) -> bool:
        if i == len(verts1):
            image_rel = {
                (mapping[a], mapping[b], mapping[c], mult) for (a, b, c, mult) in rel1
            }
            return image_rel == {(a, b, c, m) for (a, b, c, m) in rel2}
        v = verts1[i]
        for w in bq2.vertices:
            if w in used or not consistent(v, w):
                continue
            mapping[v] = w
            used.add(w)
            if extend(i + 1):
                return True
            del mapping[v]
            used.remove(w)
        return False

    return extend(0)


def _arrow_multiset(bq: BoundQuiver) -> dict[tuple[str, str], int]:
    out: dict[tuple[str, str], int] = {}
    for a in bq.arrows:
        out[(a.src, a.dst)] = out.get((a.src, a.dst), 0) + 1
    return out


def _relation_triples(bq: BoundQuiver) -> set[tuple[str, str, str, int]]:
    by_id = {a.id: a for a in bq.arrows}
    counts: dict[tuple[str, str, str], int] = {}
    for first_id, second_id in bq.relations:
        first, second = by_id[first_id], by_id[second_id]
        key = (first.src, first.dst, second.dst)
        counts[key] = counts.get(key, 0) + 1
    return {(a, b, c, m) for (a, b, c), m in counts.items()}


# ---------------------------------------------------------------------------
# Serialization
# ---------------------------------------------------------------------------


def bound_quiver_to_json(bq: BoundQuiver) -> str:
    payload = {
        "vertices": list(bq.vertices),
        "arrows": [{"id": a.id, "src": a.src, "dst": a.dst} for a in bq.arrows],
        "relations": sorted([first, second] for first, second in bq.relations),
    }
    return json.dumps(payload, indent=2, sort_keys=True)


def bound_quiver_from_json(text: str) -> BoundQuiver:
    payload = json.loads(text)
    vertices = tuple(payload["vertices"])
    arrows = tuple(
        sorted(Arrow(a["id"], a["src"], a["dst"]) for a in payload["arrows"])
    )
    ids = {a.id for a in arrows}
    relations = set()
    for pair in payload["relations"]:
        first, second = pair
        if first not in ids or second not in ids:
            raise ValueError(f"relation references unknown arrow: {pair}")
        relations.add((first, second))
    return BoundQuiver(vertices, arrows, frozenset(relations))


def bound_quiver_to_dot(bq: BoundQuiver) -> str:
    lines = ["digraph bound_quiver {"]
    for v in bq.vertices:
        lines.append(f'  "{v}";')
    for a in bq.arrows:
        lines.append(f'  "{a.src}" -> "{a.dst}" [label="{a.id}"];')
    by_id = {a.id: a for a in bq.arrows}
    for first_id, second_id in sorted(bq.relations):
        first, second = by_id[first_id], by_id[second_id]
        lines.append(
            f'  "{first.src}" -> "{second.dst}" '
            f'[style=dotted, arrowhead=none, label="{first_id}*{second_id}"];'
        )
    lines.append("}")
    return "\n".join(lines) + "\n"
