"""Translation-quiver component tags for diagonals: kind, degree, tube level.

Outer-to-inner arcs land in one of m transjective classes; outer-to-outer
(inner-to-inner) arcs land in one of m rank-p (rank-q) tube classes at the
level given by their span.  Degrees follow the start-vertex parametrisation:
an outer arc starting at s has degree (-s-1) mod m, an outer-to-inner arc
with outer vertex x has degree (-x) mod m.  Under a unit rotation every
degree shifts by +1 mod m, so tags are constant on orbits of the m-step
rotation.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .geometry import AnnulusConfig, MDiagonal, Type1, Type2, Type3, check_valid, endpoints


class ComponentKind(Enum):
    TRANSJECTIVE = "S"
    TUBE_P = "T_p"
    TUBE_Q = "T_q"


class PreconditionViolation(ValueError):
    pass


@dataclass(frozen=True, order=True)
class ComponentTag:
    kind: ComponentKind
    degree: int
    level: int | None = None

    def literal(self) -> str:
        if self.kind is ComponentKind.TRANSJECTIVE:
            return f"S^{self.degree}"
        name = "T_p" if self.kind is ComponentKind.TUBE_P else "T_q"
        return f"{name}^{self.degree}[{self.level}]"


def classify(config: AnnulusConfig, diag: MDiagonal) -> ComponentTag:
    check_valid(config, diag)
    m = config.m
    if isinstance(diag, Type1):
        return ComponentTag(ComponentKind.TRANSJECTIVE, (-diag.outer) % m)
    if isinstance(diag, Type2):
        return ComponentTag(ComponentKind.TUBE_P, (-diag.start - 1) % m, diag.level)
    return ComponentTag(ComponentKind.TUBE_Q, (-diag.start - 1) % m, diag.level)


def check_component_shift(config: AnnulusConfig, d: MDiagonal, d2: MDiagonal) -> bool:
    """Verify the degree drop along chained boundary arcs.

    Requires two outer arcs (or two inner arcs) with the target of the first
    equal to the source of the second; returns whether the second sits one
    degree below the first (mod m), which the chaining forces.
    """
    if isinstance(d, Type2) and isinstance(d2, Type2):
        pass
    elif isinstance(d, Type3) and isinstance(d2, Type3):
        pass
    else:
        raise PreconditionViolation("both diagonals must be boundary arcs of the same kind")
    check_valid(config, d)
    check_valid(config, d2)
    _, target = endpoints(config, d)
    source, _ = endpoints(config, d2)
    if target != source:
        raise PreconditionViolation(
            f"target {target} of the first arc is not the source {source} of the second"
        )
    first = classify(config, d)
    second = classify(config, d2)
    return second.degree == (first.degree - 1) % config.m
