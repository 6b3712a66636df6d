from __future__ import annotations

from angulator.angulation import delta_P, enumerate_angulations
from angulator.geometry import AnnulusConfig
from angulator.quiver import (
    Arrow,
    BoundQuiver,
    bound_quiver,
    bound_quiver_from_json,
    bound_quiver_to_dot,
    bound_quiver_to_json,
    coloured_quiver,
    is_gentle,
    iso_check,
)

from conftest import hereditary_two_path_quiver, worked_example_labels


def test_worked_example_quiver_arrows_and_relations(worked_example_angulation):
    ang = worked_example_angulation
    label = worked_example_labels(ang)
    bq = bound_quiver(ang)
    arrows = sorted(f"{label[a.src]}->{label[a.dst]}" for a in bq.arrows)
    assert arrows == sorted(
        ["h->a", "a->b", "g->h", "g->f", "f->e", "c->b", "d->c", "d->e"]
    )
    by_id = {a.id: a for a in bq.arrows}
    rels = sorted(
        (label[by_id[r[0]].src], label[by_id[r[0]].dst], label[by_id[r[1]].dst])
        for r in bq.relations
    )
    assert rels == [("d", "c", "b"), ("g", "h", "a")]
    ok, violations = is_gentle(bq)
    assert ok and violations == []


def test_colour_complement_within_faces(worked_example_angulation):
    cq = coloured_quiver(worked_example_angulation)
    m = worked_example_angulation.config.m
    by_pair: dict[tuple[int, int, int], list[int]] = {}
    for a in cq.arrows:
        by_pair.setdefault((a.face, a.src, a.dst), []).append(a.colour)
    for (face, src, dst), colours in by_pair.items():
        for c in colours:
            assert c in by_pair[(face, dst, src)] or (m - c) in by_pair[(face, dst, src)]
    # every complementary ordered pair sums to m
    for (face, src, dst), colours in by_pair.items():
        partner = sorted(by_pair[(face, dst, src)], reverse=True)
        assert sorted(m - c for c in colours) == sorted(partner)


def test_adjacent_diagonals_get_colour_zero():
    ang = delta_P(AnnulusConfig(2, 2, 1))
    cq = coloured_quiver(ang)
    assert all(a.colour in (0, 1) for a in cq.arrows)
    assert any(a.colour == 0 for a in cq.arrows)


def test_full_colour_range_appears_at_m_two():
    colours = set()
    for ang in enumerate_angulations(AnnulusConfig(2, 2, 2)):
        colours.update(a.colour for a in coloured_quiver(ang).arrows)
    assert colours == {0, 1, 2}


def test_delta_p_quiver_is_hereditary_two_path(subtests=None):
    for p, q, m in [(2, 2, 1), (2, 2, 2), (3, 2, 2), (2, 2, 3), (3, 2, 1)]:
        bq = bound_quiver(delta_P(AnnulusConfig(p, q, m)))
        assert bq.relations == frozenset()
        reference = hereditary_two_path_quiver(p, q)
        assert iso_check(bq, reference)


def test_gentle_violations_detected():
    # three arrows out of one vertex
    arrows = (
        Arrow("a", "x", "y0"),
        Arrow("b", "x", "y1"),
        Arrow("c", "x", "y2"),
    )
    bq = BoundQuiver(("x", "y0", "y1", "y2"), arrows, frozenset())
    ok, violations = is_gentle(bq)
    assert not ok
    assert any("G1" in v for v in violations)
    # two unbound continuations
    arrows = (
        Arrow("a", "u", "v"),
        Arrow("b", "v", "w1"),
        Arrow("c", "v", "w2"),
    )
    bq = BoundQuiver(("u", "v", "w1", "w2"), arrows, frozenset())
    ok, violations = is_gentle(bq)
    assert not ok
    assert any("G2" in v for v in violations)
    # resolving one continuation into a relation restores gentleness
    bq = BoundQuiver(("u", "v", "w1", "w2"), arrows, frozenset([("a", "b")]))
    ok, violations = is_gentle(bq)
    assert ok


def test_iso_check_basics(worked_example_angulation):
    bq = bound_quiver(worked_example_angulation)
    assert iso_check(bq, bq)
    smaller = BoundQuiver(bq.vertices, bq.arrows, frozenset(list(bq.relations)[1:]))
    assert not iso_check(bq, smaller)
    # relabelled copy is isomorphic
    mapping = {v: f"w{i}" for i, v in enumerate(bq.vertices)}
    relabelled = BoundQuiver(
        tuple(sorted(mapping.values())),
        tuple(
            sorted(Arrow(a.id, mapping[a.src], mapping[a.dst]) for a in bq.arrows)
        ),
        bq.relations,
    )
    assert iso_check(bq, relabelled)


def test_iso_check_distinguishes_relation_placement():
    verts = ("x", "y", "z", "w")
    arrows = (Arrow("a", "x", "y"), Arrow("b", "y", "z"), Arrow("c", "z", "w"))
    early = BoundQuiver(verts, arrows, frozenset([("a", "b")]))
    late = BoundQuiver(verts, arrows, frozenset([("b", "c")]))
    # the linear quiver with one relation at either end is self-mirrored
    assert iso_check(early, late) == iso_check(late, early)
    none = BoundQuiver(verts, arrows, frozenset())
    assert not iso_check(early, none)


def test_bound_quiver_json_round_trip(worked_example_angulation):
    bq = bound_quiver(worked_example_angulation)
    text = bound_quiver_to_json(bq)
    back = bound_quiver_from_json(text)
    assert back == bq
    dot = bound_quiver_to_dot(bq)
    assert dot.count("->") >= len(bq.arrows)
    assert "style=dotted" in dot


def test_gentleness_exhaustive_small():
    for p, q, m in [(2, 2, 1), (2, 2, 2)]:
        for ang in enumerate_angulations(AnnulusConfig(p, q, m)):
            ok, violations = is_gentle(bound_quiver(ang))
            assert ok, violations
