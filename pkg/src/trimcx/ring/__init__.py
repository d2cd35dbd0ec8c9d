"""Ring Module

係数体と標準次数付き多項式環。
"""

from trimcx.ring.field import DEFAULT_PRIME, CoefficientField
from trimcx.ring.polynomial import (
    Monomial,
    Polynomial,
    PolyRing,
    PolynomialSyntaxError,
    RingMismatchError,
    UnknownVariableError,
    check_same_ring,
    constant_term,
    homogeneous_degree,
    is_homogeneous,
    monomial_basis,
    poly_format,
    poly_mul,
    poly_parse,
    specialize,
)

__all__ = [
    "DEFAULT_PRIME",
    "CoefficientField",
    "Monomial",
    "Polynomial",
    "PolyRing",
    "PolynomialSyntaxError",
    "RingMismatchError",
    "UnknownVariableError",
    "check_same_ring",
    "constant_term",
    "homogeneous_degree",
    "is_homogeneous",
    "monomial_basis",
    "poly_format",
    "poly_mul",
    "poly_parse",
    "specialize",
]
