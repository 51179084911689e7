"""Exact arithmetic layer: integer polynomials, real algebraic numbers,
cyclotomic fields, number fields, and certified sign enclosures."""

from .cyclotomic import (Cyclotomic, Kronecker, OTHER, ROOT_OF_UNITY, ZERO,
                         divides_in_ring, encode, galois_conjugates,
                         is_algebraic_integer, kronecker_classify,
                         kronecker_oracle, parse)
from .intpoly import IntPoly, cyclotomic_polynomial, euler_phi, factor_rational
from .numberfield import NFElement, NumberField
from .realalg import RealAlgebraic, real_roots

__all__ = [
    "Cyclotomic", "Kronecker", "ZERO", "ROOT_OF_UNITY", "OTHER",
    "divides_in_ring", "encode", "galois_conjugates", "is_algebraic_integer",
    "kronecker_classify", "kronecker_oracle", "parse",
    "IntPoly", "cyclotomic_polynomial", "euler_phi", "factor_rational",
    "NFElement", "NumberField", "RealAlgebraic", "real_roots",
]
