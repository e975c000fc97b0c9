"""orecode: skew polynomial codes over F_q and R_{q,s}, Gray images and CSS quantum codes."""

from .gf import GF, DerivationSpec, FieldElement, FieldSpec, derivation, field_trace, frobenius
from .skewpoly import (
    NEG_INF,
    SkewPoly,
    SkewRing,
    format_poly,
    is_central,
    monomial_times_scalar,
    right_divides,
    right_divmod,
    skew_mul,
    two_sided_factor_check,
)

__all__ = [
    "GF",
    "DerivationSpec",
    "FieldElement",
    "FieldSpec",
    "derivation",
    "field_trace",
    "frobenius",
    "NEG_INF",
    "SkewPoly",
    "SkewRing",
    "format_poly",
    "is_central",
    "monomial_times_scalar",
    "right_divides",
    "right_divmod",
    "skew_mul",
    "two_sided_factor_check",
]
__version__ = "0.1.0"
