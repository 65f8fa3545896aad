"""Exact combinatorics of primitive-ideal inclusions for gl(m|n) and
osp(m|2n) in the generic region."""

from .errors import SuperprimError
from .hecke import Hecke, KLPolynomial
from .predicates import (
    IntegralSubsystem,
    WeightClassification,
    classify,
    height_leq,
    integral_subsystem,
    is_s_free,
    typicalizing_shift,
)
from .primorder import InclusionCertificate, PrimOrder
from .restriction import (
    dominant_restriction_set,
    penkov_restrict,
    weyl_dim_even,
)
from .rootsystem import (
    Root,
    RootSystem,
    Weight,
    build_root_system,
    coroot,
    format_weight,
    pairing,
    parse_weight,
    reflect,
    weight,
)
from .star import OddSupport, odd_support, star_apply, star_orbit, star_simple
from .weyl import (
    WeylElement,
    WeylGroup,
    act,
    circle_act,
    dot_act,
)

__all__ = [
    "SuperprimError",
    "Hecke",
    "KLPolynomial",
    "IntegralSubsystem",
    "WeightClassification",
    "classify",
    "height_leq",
    "integral_subsystem",
    "is_s_free",
    "typicalizing_shift",
    "InclusionCertificate",
    "PrimOrder",
    "dominant_restriction_set",
    "penkov_restrict",
    "weyl_dim_even",
    "Root",
    "RootSystem",
    "Weight",
    "build_root_system",
    "coroot",
    "format_weight",
    "pairing",
    "parse_weight",
    "reflect",
    "weight",
    "OddSupport",
    "odd_support",
    "star_apply",
    "star_orbit",
    "star_simple",
    "WeylElement",
    "WeylGroup",
    "act",
    "circle_act",
    "dot_act",
]
