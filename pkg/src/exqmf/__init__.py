"""Exact computations with normalized extremal quasimodular forms on SL2(Z)."""

from .numeric import Rational, PrimePowerModulus, Residue, binomial, reduce_mod, factor_smooth, bernoulli
from .series import TruncSeries, RationalPoly
from .qforms import QExpansion, QMMonomial, eisenstein, delta, j_inverse
from .extremal import (
    ExtremalRecord,
    extremal_depth1_recursive,
    extremal_depth1_hypergeometric,
    extremal_generic,
    atkin_like,
    normalizing_factor,
    generalized_atkin,
    integrality_scan,
)
from .congruence import verify_main_theorem_case, CongruenceReport

__all__ = [
    "Rational", "PrimePowerModulus", "Residue", "binomial", "reduce_mod", "factor_smooth", "bernoulli",
    "TruncSeries", "RationalPoly",
    "QExpansion", "QMMonomial", "eisenstein", "delta", "j_inverse",
    "ExtremalRecord", "extremal_depth1_recursive", "extremal_depth1_hypergeometric", "extremal_generic",
    "atkin_like", "normalizing_factor", "generalized_atkin", "integrality_scan",
    "verify_main_theorem_case", "CongruenceReport",
]

__version__ = "0.1.0"
