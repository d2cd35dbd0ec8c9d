"""Builders Module

Koszul複体、Eagon–Northcott複体、パフィアン分解とその入力行列。
"""

from trimcx.builders.eagon_northcott import divided_power_basis, eagon_northcott, en_basis, en_ranks
from trimcx.builders.koszul import exterior_basis, koszul_complex
from trimcx.builders.matrices import (
    GenericMatrixSpec,
    IndexSet,
    IndexSetError,
    SkewMatrix,
    SkewMatrixError,
    all_index_sets,
    determinant,
    maximal_minors,
    minor,
)
from trimcx.builders.pfaffian import pfaffian, pfaffian_of, pfaffian_resolution, signed_pfaffians
from trimcx.builders.skew_file import dump_skew_text, load_skew_text

__all__ = [
    "GenericMatrixSpec",
    "IndexSet",
    "IndexSetError",
    "SkewMatrix",
    "SkewMatrixError",
    "all_index_sets",
    "determinant",
    "divided_power_basis",
    "dump_skew_text",
    "eagon_northcott",
    "en_basis",
    "en_ranks",
    "exterior_basis",
    "koszul_complex",
    "load_skew_text",
    "maximal_minors",
    "minor",
    "pfaffian",
    "pfaffian_of",
    "pfaffian_resolution",
    "signed_pfaffians",
]
