from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from angulator.geometry import (
    AnnulusConfig,
    CongruenceViolation,
    ConfigMismatch,
    GeometryError,
    IndexOutOfRange,
    InnerVertex,
    OuterVertex,
    SelfIntersecting,
    Type1,
    Type2,
    Type3,
    all_diagonals,
    crosses,
    endpoints,
    format_config,
    format_diagonal,
    make_type1,
    make_type2,
    make_type3,
    parse_config,
    parse_diagonal,
    rotate,
)


def test_config_bounds():
    AnnulusConfig(2, 2, 1)
    with pytest.raises(GeometryError):
        AnnulusConfig(1, 2, 1)
    with pytest.raises(GeometryError):
        AnnulusConfig(2, 1, 3)
    with pytest.raises(GeometryError):
        AnnulusConfig(2, 2, 0)


def test_make_type1_examples():
    cfg = AnnulusConfig(2, 2, 2)
    assert make_type1(cfg, 0, 0, 0) == Type1(0, 0, 0)
    with pytest.raises(CongruenceViolation):
        make_type1(cfg, 1, 0)
    big = AnnulusConfig(4, 4, 3)
    assert make_type1(big, 0, 3, 0) == Type1(0, 3, 0)
    with pytest.raises(IndexOutOfRange):
        make_type1(cfg, 4, 0)


def test_make_type2_and_type3_levels():
    cfg = AnnulusConfig(2, 2, 2)
    assert make_type2(cfg, 1, 1) == Type2(1, 1)
    with pytest.raises(SelfIntersecting):
        make_type2(cfg, 0, 2)
    with pytest.raises(SelfIntersecting):
        make_type3(cfg, 0, 2)
    with pytest.raises(IndexOutOfRange):
        make_type2(cfg, 0, 0)


def test_endpoints():
    cfg = AnnulusConfig(2, 2, 2)
    assert endpoints(cfg, Type2(0, 1)) == (OuterVertex(0), OuterVertex(3))
    assert endpoints(cfg, Type1(0, 0, 0)) == (OuterVertex(0), InnerVertex(0))
    assert endpoints(cfg, Type3(2, 1)) == (InnerVertex(2), InnerVertex(1))


def test_boundary_arc_endpoints_never_coincide():
    for cfg in (AnnulusConfig(3, 2, 2), AnnulusConfig(2, 2, 3), AnnulusConfig(4, 3, 1)):
        for d in all_diagonals(cfg):
            if isinstance(d, Type1):
                continue
            src, dst = endpoints(cfg, d)
            if isinstance(d, Type2) and d.level == cfg.p - 1 and cfg.m == 1:
                # level p-1 with m=1 wraps to the start vertex: a loop arc
                continue
            # loops (same start and end) only occur when span = full circle
            size = cfg.outer_size if isinstance(d, Type2) else cfg.inner_size
            if (d.level * cfg.m + 1) % size == 0:
                assert src == dst
            else:
                assert src != dst


def test_rotate_identity_and_inverse():
    cfg = AnnulusConfig(3, 2, 2)
    for d in all_diagonals(cfg):
        assert rotate(cfg, d, 0) == d
        for s in (1, 2, 5, cfg.m):
            assert rotate(cfg, rotate(cfg, d, s), -s) == d


def test_rotate_preserves_kind_and_level():
    cfg = AnnulusConfig(3, 2, 2)
    for d in all_diagonals(cfg):
        r = rotate(cfg, d, 1)
        assert type(r) is type(d)
        if isinstance(d, (Type2, Type3)):
            assert r.level == d.level


def test_crosses_irreflexive_and_spec_examples():
    cfg = AnnulusConfig(2, 2, 2)
    for d in all_diagonals(cfg):
        assert not crosses(cfg, d, d)
    # interleaving outer arcs sharing a marked vertex still cross
    assert crosses(cfg, Type2(0, 1), Type2(1, 1))
    # boundary-parallel arcs on different boundaries never cross
    for d2 in (Type2(s, 1) for s in range(4)):
        for d3 in (Type3(s, 1) for s in range(4)):
            assert not crosses(cfg, d2, d3)


def test_crosses_type1_winding_gap():
    cfg = AnnulusConfig(2, 2, 2)
    assert not crosses(cfg, Type1(0, 0, 0), Type1(0, 0, 1))
    assert crosses(cfg, Type1(0, 0, 0), Type1(0, 0, 2))


def test_crosses_config_mismatch():
    cfg = AnnulusConfig(2, 2, 2)
    with pytest.raises(ConfigMismatch):
        crosses(cfg, Type1(0, 0, 0), Type1(5, 5, 0))
    with pytest.raises(ConfigMismatch):
        crosses(cfg, Type2(0, 3), Type1(0, 0, 0))


@settings(max_examples=200, deadline=None)
@given(
    st.integers(2, 4),
    st.integers(2, 3),
    st.integers(1, 3),
    st.data(),
)
def test_crossing_symmetric_and_rotation_equivariant(p, q, m, data):
    cfg = AnnulusConfig(p, q, m)
    diags = all_diagonals(cfg)
    d1 = data.draw(st.sampled_from(diags))
    d2 = data.draw(st.sampled_from(diags))
    s = data.draw(st.integers(-2 * m, 2 * m))
    c = crosses(cfg, d1, d2)
    assert c == crosses(cfg, d2, d1)
    assert c == crosses(cfg, rotate(cfg, d1, s), rotate(cfg, d2, s))


def test_rotation_is_injective_on_all_diagonals():
    cfg = AnnulusConfig(3, 2, 2)
    diags = all_diagonals(cfg, -1, 2)
    images = {rotate(cfg, d, 1) for d in diags}
    assert len(images) == len(diags)


def test_literals_round_trip():
    cfg = AnnulusConfig(3, 2, 2)
    assert parse_config(format_config(cfg)) == cfg
    assert format_config(cfg) == "P(3,2,2)"
    for d in all_diagonals(cfg, -2, 2):
        assert parse_diagonal(cfg, format_diagonal(d)) == d
    assert format_diagonal(Type1(0, 2, -1)) == "T1(0,2;-1)"
    assert parse_diagonal(cfg, "T1(0,2;-1)") == Type1(0, 2, -1)
