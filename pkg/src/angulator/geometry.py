"""Marked annulus with two labelled boundary polygons and its arc classes.

The annulus carries m*p marked vertices on the outer boundary (labelled
counterclockwise) and m*q on the inner boundary (labelled clockwise).  Arcs
come in three kinds: outer-to-inner (with a winding number), outer-to-outer,
and inner-to-inner.  All crossing decisions are made in the universal cover,
where the outer boundary lifts to the line y=1 and the inner boundary to
y=0, with exact rational x-coordinates:

    outer vertex j  ->  x = j/(m*p) + t        (t an integer translate)
    inner vertex j  ->  x = -j/(m*q) + t

Increasing label runs in the +x direction on the outer line and in the -x
direction on the inner line, matching the opposite labelling senses of the
two boundary circles.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


class GeometryError(ValueError):
    """Base class for invalid geometric data."""


class IndexOutOfRange(GeometryError):
    pass


class CongruenceViolation(GeometryError):
    pass


class SelfIntersecting(GeometryError):
    pass


class ConfigMismatch(GeometryError):
    pass


@dataclass(frozen=True, order=True)
class AnnulusConfig:
    """The triple (p, q, m): outer m*p-gon around an inner m*q-gon."""

    p: int
    q: int
    m: int

    def __post_init__(self) -> None:
        if self.p < 2 or self.q < 2:
            raise GeometryError(f"p >= 2 and q >= 2 required, got p={self.p}, q={self.q}")
        if self.m < 1:
            raise GeometryError(f"m >= 1 required, got m={self.m}")

    @property
    def outer_size(self) -> int:
        return self.m * self.p

    @property
    def inner_size(self) -> int:
        return self.m * self.q

    def literal(self) -> str:
        return f"P({self.p},{self.q},{self.m})"


@dataclass(frozen=True, order=True)
class OuterVertex:
    index: int

    def literal(self) -> str:
        return f"O{self.index}"


@dataclass(frozen=True, order=True)
class InnerVertex:
    index: int

    def literal(self) -> str:
        return f"I{self.index}"


@dataclass(frozen=True, order=True)
class Type1:
    """Arc from an outer vertex to an inner vertex, with a winding number.

    The winding fixes the homotopy class: the canonical lift runs from
    x = outer/(m*p) on the outer line to x = -inner/(m*q) + winding on the
    inner line.  Two windings differing by 1 are the two arcs obtained from
    one another by a single Dehn twist of the annulus.
    """

    outer: int
    inner: int
    winding: int


@dataclass(frozen=True, order=True)
class Type2:
    """Outer-to-outer arc cutting off level*m + 1 boundary edges counterclockwise."""

    start: int
    level: int


@dataclass(frozen=True, order=True)
class Type3:
    """Inner-to-inner arc cutting off level*m + 1 boundary edges clockwise."""

    start: int
    level: int


MDiagonal = Type1 | Type2 | Type3

_KIND_RANK = {Type1: 0, Type2: 1, Type3: 2}


def sort_key(diag: MDiagonal) -> tuple:
    """Deterministic total order over all diagonals of a config."""
    if isinstance(diag, Type1):
        return (0, diag.outer, diag.inner, diag.winding)
    if isinstance(diag, Type2):
        return (1, diag.start, diag.level)
    return (2, diag.start, diag.level)


def make_type1(config: AnnulusConfig, outer: int, inner: int, winding: int = 0) -> Type1:
    if not (0 <= outer < config.outer_size):
        raise IndexOutOfRange(f"outer index {outer} not in [0, {config.outer_size})")
    if not (0 <= inner < config.inner_size):
        raise IndexOutOfRange(f"inner index {inner} not in [0, {config.inner_size})")
    if (outer - inner) % config.m != 0:
        raise CongruenceViolation(
            f"outer {outer} and inner {inner} not congruent modulo m={config.m}"
        )
    return Type1(outer, inner, winding)


def make_type2(config: AnnulusConfig, start: int, level: int) -> Type2:
    if not (0 <= start < config.outer_size):
        raise IndexOutOfRange(f"start index {start} not in [0, {config.outer_size})")
    if level < 1:
        raise IndexOutOfRange(f"level {level} must be >= 1")
    if level >= config.p:
        raise SelfIntersecting(
            f"outer arc of level {level} >= p={config.p} has a self-intersection"
        )
    return Type2(start, level)


def make_type3(config: AnnulusConfig, start: int, level: int) -> Type3:
    if not (0 <= start < config.inner_size):
        raise IndexOutOfRange(f"start index {start} not in [0, {config.inner_size})")
    if level < 1:
        raise IndexOutOfRange(f"level {level} must be >= 1")
    if level >= config.q:
        raise SelfIntersecting(
            f"inner arc of level {level} >= q={config.q} has a self-intersection"
        )
    return Type3(start, level)


def check_valid(config: AnnulusConfig, diag: MDiagonal) -> None:
    """Re-validate a diagonal against a config; raises ConfigMismatch."""
    try:
        if isinstance(diag, Type1):
            make_type1(config, diag.outer, diag.inner, diag.winding)
        elif isinstance(diag, Type2):
            make_type2(config, diag.start, diag.level)
        elif isinstance(diag, Type3):
            make_type3(config, diag.start, diag.level)
        else:
            raise ConfigMismatch(f"not a diagonal: {diag!r}")
    except ConfigMismatch:
        raise
    except GeometryError as exc:
        raise ConfigMismatch(f"{diag!r} is not valid for {config.literal()}: {exc}") from exc


def span(config: AnnulusConfig, diag: Type2 | Type3) -> int:
    """Number of boundary edges cut off by an outer or inner arc."""
    return diag.level * config.m + 1


def endpoints(config: AnnulusConfig, diag: MDiagonal):
    """Source and target vertices; boundary arcs run in labelling order."""
    if isinstance(diag, Type1):
        return (OuterVertex(diag.outer), InnerVertex(diag.inner))
    if isinstance(diag, Type2):
        return (
            OuterVertex(diag.start),
            OuterVertex((diag.start + span(config, diag)) % config.outer_size),
        )
    return (
        InnerVertex(diag.start),
        InnerVertex((diag.start + span(config, diag)) % config.inner_size),
    )


def outer_lift(config: AnnulusConfig, index: int, translate: int = 0) -> Fraction:
    return Fraction(index, config.outer_size) + translate


def inner_lift(config: AnnulusConfig, index: int, translate: int = 0) -> Fraction:
    return Fraction(-index, config.inner_size) + translate


def lift_type1(config: AnnulusConfig, diag: Type1) -> tuple[Fraction, Fraction]:
    """Canonical lift endpoints (outer x at y=1, inner x at y=0)."""
    return (
        outer_lift(config, diag.outer),
        inner_lift(config, diag.inner) + diag.winding,
    )


def rotate(config: AnnulusConfig, diag: MDiagonal, steps: int) -> MDiagonal:
    """Rotate the outer polygon `steps` clockwise and the inner counterclockwise.

    Both boundary indices decrease by `steps`; the winding of an
    outer-to-inner arc absorbs the translates needed to renormalise both
    endpoints, so rotation is exactly a rigid motion of the annulus.
    """
    if isinstance(diag, Type1):
        o = (diag.outer - steps) % config.outer_size
        i = (diag.inner - steps) % config.inner_size
        t_outer = (diag.outer - steps - o) // config.outer_size
        t_inner = (diag.inner - steps - i) // config.inner_size
        return Type1(o, i, diag.winding - t_inner - t_outer)
    if isinstance(diag, Type2):
        return Type2((diag.start - steps) % config.outer_size, diag.level)
    return Type3((diag.start - steps) % config.inner_size, diag.level)


def tau(config: AnnulusConfig, diag: MDiagonal) -> MDiagonal:
    return rotate(config, diag, config.m)


def _open_interval_contains_integer(a: Fraction, b: Fraction) -> bool:
    lo, hi = (a, b) if a <= b else (b, a)
    if lo == hi:
        return False
    n = hi.numerator // hi.denominator  # floor(hi)
    if Fraction(n) == hi:
        n -= 1
    return Fraction(n) > lo


def _intervals_properly_overlap(a0: int, a1: int, b0: int, b1: int) -> bool:
    if max(a0, b0) >= min(a1, b1):
        return False  # closed intervals meet in at most a point
    if b0 >= a0 and b1 <= a1:
        return False  # nested
    if a0 >= b0 and a1 <= b1:
        return False
    return True


def _boundary_arcs_cross(size: int, s1: int, span1: int, s2: int, span2: int) -> bool:
    # Compare one fixed pocket against every relevant translate of the other.
    for t in (-1, 0, 1):
        if _intervals_properly_overlap(s1, s1 + span1, s2 + t * size, s2 + span2 + t * size):
            return True
    return False


def _pocket_strictly_contains(size: int, s: int, arc_span: int, vertex: int) -> bool:
    return 1 <= (vertex - s) % size <= arc_span - 1


def crosses(config: AnnulusConfig, d1: MDiagonal, d2: MDiagonal) -> bool:
    """Whether two diagonals intersect in the interior of the annulus.

    Sharing a marked vertex alone never counts as a crossing.  The
    outer-to-inner/outer-to-inner case reduces to a one-line fact about the
    universal cover: the straight lifts of the two arcs interleave for some
    integer translate iff an integer lies strictly between the difference of
    the outer coordinates and the difference of the inner coordinates.
    """
    check_valid(config, d1)
    check_valid(config, d2)
    if d1 == d2:
        return False

    if isinstance(d1, Type1) and isinstance(d2, Type1):
        o1, i1 = lift_type1(config, d1)
        o2, i2 = lift_type1(config, d2)
        return _open_interval_contains_integer(o1 - o2, i1 - i2)

    if isinstance(d1, Type2) and isinstance(d2, Type2):
        return _boundary_arcs_cross(
            config.outer_size, d1.start, span(config, d1), d2.start, span(config, d2)
        )
    if isinstance(d1, Type3) and isinstance(d2, Type3):
        return _boundary_arcs_cross(
            config.inner_size, d1.start, span(config, d1), d2.start, span(config, d2)
        )

    if isinstance(d1, Type2) and isinstance(d2, Type3):
        return False
    if isinstance(d1, Type3) and isinstance(d2, Type2):
        return False

    if isinstance(d2, Type1):
        d1, d2 = d2, d1
    # d1 is Type1, d2 is a boundary-parallel arc.
    if isinstance(d2, Type2):
        return _pocket_strictly_contains(
            config.outer_size, d2.start, span(config, d2), d1.outer
        )
    return _pocket_strictly_contains(config.inner_size, d2.start, span(config, d2), d1.inner)


def all_diagonals(config: AnnulusConfig, winding_lo: int = 0, winding_hi: int = 1) -> list[MDiagonal]:
    """Every valid diagonal with outer-to-inner windings in [winding_lo, winding_hi]."""
    out: list[MDiagonal] = []
    for o in range(config.outer_size):
        for i in range(o % config.m, config.inner_size, config.m):
            for w in range(winding_lo, winding_hi + 1):
                out.append(Type1(o, i, w))
    for s in range(config.outer_size):
        for k in range(1, config.p):
            out.append(Type2(s, k))
    for s in range(config.inner_size):
        for k in range(1, config.q):
            out.append(Type3(s, k))
    out.sort(key=sort_key)
    return out


# ---------------------------------------------------------------------------
# Literal syntax: P(p,q,m), T1(o,i;w), T2(s,k), T3(s,k)
# ---------------------------------------------------------------------------


class LiteralError(ValueError):
    pass


def format_config(config: AnnulusConfig) -> str:
    return config.literal()


def parse_config(text: str) -> AnnulusConfig:
    body = _strip_call(text, "P")
    parts = body.split(",")
    if len(parts) != 3:
        raise LiteralError(f"config literal needs three fields: {text!r}")
    try:
        p, q, m = (int(s.strip()) for s in parts)
    except ValueError as exc:
        raise LiteralError(f"bad config literal {text!r}") from exc
    try:
        return AnnulusConfig(p, q, m)
    except GeometryError as exc:
        raise LiteralError(str(exc)) from exc


def format_diagonal(diag: MDiagonal) -> str:
    if isinstance(diag, Type1):
        return f"T1({diag.outer},{diag.inner};{diag.winding})"
    if isinstance(diag, Type2):
        return f"T2({diag.start},{diag.level})"
    return f"T3({diag.start},{diag.level})"


def parse_diagonal(config: AnnulusConfig, text: str) -> MDiagonal:
    text = text.strip()
    if text.startswith("T1"):
        body = _strip_call(text, "T1")
        head, _, tail = body.partition(";")
        w = 0
        if tail:
            w = _int_field(tail, text)
        parts = head.split(",")
        if len(parts) != 2:
            raise LiteralError(f"T1 literal needs o,i fields: {text!r}")
        o, i = (_int_field(s, text) for s in parts)
        try:
            return make_type1(config, o, i, w)
        except GeometryError as exc:
            raise LiteralError(f"{text!r}: {exc}") from exc
    if text.startswith("T2") or text.startswith("T3"):
        kind = text[:2]
        body = _strip_call(text, kind)
        parts = body.split(",")
        if len(parts) != 2:
            raise LiteralError(f"{kind} literal needs s,k fields: {text!r}")
        s, k = (_int_field(x, text) for x in parts)
        try:
            if kind == "T2":
                return make_type2(config, s, k)
            return make_type3(config, s, k)
        except GeometryError as exc:
            raise LiteralError(f"{text!r}: {exc}") from exc
    raise LiteralError(f"unknown diagonal literal {text!r}")


def _strip_call(text: str, name: str) -> str:
    text = text.strip()
    if not text.startswith(name + "(") or not text.endswith(")"):
        raise LiteralError(f"expected {name}(...): {text!r}")
    return text[len(name) + 1 : -1]


def _int_field(s: str, context: str) -> int:
    try:
        return int(s.strip())
    except ValueError as exc:
        raise LiteralError(f"bad integer field in {context!r}") from exc
