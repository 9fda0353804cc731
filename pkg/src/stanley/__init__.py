"""Exact Stanley depth and depth computations for quotients of squarefree monomial ideals."""

from .errors import AmbientMismatch, CampaignConfigError, SizeLimitExceeded
from .monomials import (
    MAX_VARS,
    Monomial,
    MonomialIdeal,
    PosetSlice,
    QuotientInstance,
    build_poset,
    build_poset_pair,
    divides,
    format_instance,
    format_monomial,
    ideal_membership,
    lcm,
    minimal_generators,
    parse_instance,
    parse_monomial,
)

__all__ = [
    "AmbientMismatch",
    "CampaignConfigError",
    "SizeLimitExceeded",
    "MAX_VARS",
    "Monomial",
    "MonomialIdeal",
    "PosetSlice",
    "QuotientInstance",
    "build_poset",
    "build_poset_pair",
    "divides",
    "format_instance",
    "format_monomial",
    "ideal_membership",
    "lcm",
    "minimal_generators",
    "parse_instance",
    "parse_monomial",
]
