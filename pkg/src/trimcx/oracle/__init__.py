"""Oracle Module

次数を打ち切った線形代数による独立な検証(イデアルの比較、コロン、KoszulホモロジーによるBetti数)。
"""

from trimcx.oracle.koszul_betti import DEFAULT_MAX_DEGREE, DEFAULT_MAX_VARS, koszul_betti
from trimcx.oracle.slices import (
    DEFAULT_MAX_COLON_MONOMIALS,
    DegreeSlice,
    IdealBasis,
    colon_slice,
    ideal_equal_upto,
    ideal_slice,
)

__all__ = [
    "DEFAULT_MAX_COLON_MONOMIALS",
    "DEFAULT_MAX_DEGREE",
    "DEFAULT_MAX_VARS",
    "DegreeSlice",
    "IdealBasis",
    "colon_slice",
    "ideal_equal_upto",
    "ideal_slice",
    "koszul_betti",
]
