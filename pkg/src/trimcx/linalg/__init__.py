"""Linalg Module

係数体・多項式環上の厳密な線形代数。
"""

from trimcx.linalg.macaulay import SliceSpan, count_multiples, ideal_span, slice_multiples
from trimcx.linalg.matrices import (
    PolyMatrix,
    ScalarMatrix,
    ShapeMismatchError,
    block_matrix,
    constant_part,
    from_entries,
    is_zero_matrix,
    kernel_basis,
    matmul,
    nonzero_entries,
    poly_matrix,
    random_point,
    rank_at_random_point,
    rank_over_field,
    scalar_matrix,
    specialize_matrix,
    submatrix,
    zero_matrix,
)
from trimcx.linalg.solve import solve_poly_homogeneous, solve_scalar

__all__ = [
    "PolyMatrix",
    "ScalarMatrix",
    "ShapeMismatchError",
    "SliceSpan",
    "block_matrix",
    "constant_part",
    "count_multiples",
    "from_entries",
    "ideal_span",
    "is_zero_matrix",
    "kernel_basis",
    "matmul",
    "nonzero_entries",
    "poly_matrix",
    "random_point",
    "rank_at_random_point",
    "rank_over_field",
    "scalar_matrix",
    "slice_multiples",
    "solve_poly_homogeneous",
    "solve_scalar",
    "specialize_matrix",
    "submatrix",
    "zero_matrix",
]
