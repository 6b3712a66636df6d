"""Angulations of an annulus and the gentle algebras they present."""

from .angulation import (
    Angulation,
    AngulationError,
    BadFace,
    CrossingPair,
    Face,
    LimitExceeded,
    WrongCount,
    angulation_from_json,
    angulation_to_json,
    delta_P,
    enumerate_angulations,
    faces_of,
    validate,
)
from .classify import ComponentKind, ComponentTag, check_component_shift, classify
from .geometry import (
    AnnulusConfig,
    CongruenceViolation,
    ConfigMismatch,
    GeometryError,
    IndexOutOfRange,
    MDiagonal,
    SelfIntersecting,
    Type1,
    Type2,
    Type3,
    crosses,
    endpoints,
    make_type1,
    make_type2,
    make_type3,
    rotate,
    tau,
)
from .quiver import (
    Arrow,
    BoundQuiver,
    ColouredQuiver,
    bound_quiver,
    bound_quiver_from_json,
    bound_quiver_to_dot,
    bound_quiver_to_json,
    coloured_quiver,
    is_gentle,
    iso_check,
)
from .realizer import NotAccepted, UnsupportedShape, realize
from .recognizer import (
    ACCEPTED,
    ACCEPTED_TYPE_A_ONLY,
    REJECTED,
    CycleRecord,
    DisconnectedQuiver,
    RecognitionReport,
    find_cycles,
    orientation_sweep,
    recognize,
)
from .render import render_svg

__all__ = [name for name in dir() if not name.startswith("_")]
