from __future__ import annotations

import pytest

from angulator.angulation import Angulation, validate
from angulator.geometry import AnnulusConfig, Type1, Type2, Type3
from angulator.quiver import Arrow, BoundQuiver


def split_components(bq: BoundQuiver) -> list[BoundQuiver]:
    """Connected components of a bound quiver, as bound quivers."""
    parent = {v: v for v in bq.vertices}

    def find(x: str) -> str:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a in bq.arrows:
        ra, rb = find(a.src), find(a.dst)
        if ra != rb:
            parent[ra] = rb
    groups: dict[str, list[str]] = {}
    for v in bq.vertices:
        groups.setdefault(find(v), []).append(v)
    out = []
    for g in groups.values():
        vs = tuple(sorted(g))
        arrows = tuple(a for a in bq.arrows if a.src in g)
        ids = {a.id for a in arrows}
        relations = frozenset(r for r in bq.relations if r[0] in ids)
        out.append(BoundQuiver(vs, arrows, relations))
    return out


def hereditary_two_path_quiver(p: int, q: int) -> BoundQuiver:
    """The two-parallel-paths cycle quiver: 0 -> 1 -> ... -> p and
    0 -> p+1 -> ... -> p+q-1 -> p, with no relations."""
    vertices = tuple(f"v{i}" for i in range(p + q))
    arrows = []
    upper = [0] + list(range(1, p)) + [p % (p + q)]
    for a, b in zip(upper, upper[1:]):
        arrows.append(Arrow(f"u{a}", f"v{a}", f"v{b % (p + q)}"))
    lower = [0] + list(range(p + 1, p + q)) + [p]
    for a, b in zip(lower, lower[1:]):
        arrows.append(Arrow(f"l{a}", f"v{a}", f"v{b}"))
    return BoundQuiver(vertices, tuple(sorted(arrows)), frozenset())


@pytest.fixture
def worked_example_angulation() -> Angulation:
    """The realization example: an 8-diagonal 5-angulation of P(4,4,3)."""
    m = 3
    config = AnnulusConfig(4, 4, m)
    diagonals = [
        Type1(0, 0, 0),
        Type1(0, m, 0),
        Type3(m, 1),
        Type1(3 * m + 1, 2 * m + 1, 1),
        Type1(3 * m + 1, 3 * m + 1, 1),
        Type1(2 * m + 1, 3 * m + 1, 1),
        Type1(m + 1, 3 * m + 1, 1),
        Type2(0, 1),
    ]
    return validate(config, diagonals)


def worked_example_labels(ang: Angulation) -> dict[str, str]:
    """Image vertex -> letter name for the realization example quiver."""
    m = 3
    names = {
        Type1(0, 0, 0): "a",
        Type1(0, m, 0): "b",
        Type3(m, 1): "c",
        Type1(3 * m + 1, 2 * m + 1, 1): "d",
        Type1(3 * m + 1, 3 * m + 1, 1): "e",
        Type1(2 * m + 1, 3 * m + 1, 1): "f",
        Type1(m + 1, 3 * m + 1, 1): "g",
        Type2(0, 1): "h",
    }
    return {f"d{i}": names[diag] for i, diag in enumerate(ang.diagonals)}


def counting_example_quiver() -> BoundQuiver:
    """Root cycle of length 10 fused with a 3-saturated 5-cycle along two
    arrows, plus three clockwise and one counterclockwise strictly internal
    relations (m = 3)."""
    verts = tuple([f"v{i}" for i in range(10)] + ["c1", "c2"])
    arrows = (
        Arrow("e01", "v0", "v1"),
        Arrow("e12", "v1", "v2"),
        Arrow("e23", "v2", "v3"),
        Arrow("e34", "v3", "v4"),
        Arrow("e45", "v4", "v5"),
        Arrow("e65", "v6", "v5"),
        Arrow("e76", "v7", "v6"),
        Arrow("e78", "v7", "v8"),
        Arrow("e89", "v8", "v9"),
        Arrow("e90", "v9", "v0"),
        Arrow("x2c1", "v2", "c1"),
        Arrow("xc1c2", "c1", "c2"),
        Arrow("xc20", "c2", "v0"),
    )
    relations = frozenset(
        [
            ("e01", "e12"),
            ("e12", "x2c1"),
            ("x2c1", "xc1c2"),
            ("xc1c2", "xc20"),
            ("xc20", "e01"),
            ("e23", "e34"),
            ("e34", "e45"),
            ("e78", "e89"),
            ("e76", "e65"),
        ]
    )
    return BoundQuiver(verts, arrows, relations)
