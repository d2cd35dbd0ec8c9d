"""Chain Module

次数付き自由複体、写像錐、Betti表とその直列化。
"""

from trimcx.chain.betti import BettiTable, betti_from_minimal, betti_from_resolution, linear_strand
from trimcx.chain.complex import (
    ZERO_MODULE,
    ChainMapData,
    ComplexError,
    GradedFreeComplex,
    GradedFreeModule,
    GradedMap,
    NonCommutingMapError,
    NotMinimalError,
    check_chain_map,
    direct_sum,
    free_module,
    is_minimal,
    permute_basis,
    rank_acyclicity_evidence,
    shift_degrees,
    verify_complex,
)
from trimcx.chain.cone import mapping_cone
from trimcx.chain.serialization import (
    SerializationError,
    betti_document,
    dump_betti_json,
    dump_complex,
    dumps_json,
    load_betti_json,
    load_complex,
    parse_ring_header,
)

__all__ = [
    "ZERO_MODULE",
    "BettiTable",
    "ChainMapData",
    "ComplexError",
    "GradedFreeComplex",
    "GradedFreeModule",
    "GradedMap",
    "NonCommutingMapError",
    "NotMinimalError",
    "SerializationError",
    "betti_document",
    "betti_from_minimal",
    "betti_from_resolution",
    "check_chain_map",
    "direct_sum",
    "dump_betti_json",
    "dump_complex",
    "dumps_json",
    "free_module",
    "is_minimal",
    "linear_strand",
    "load_betti_json",
    "load_complex",
    "mapping_cone",
    "parse_ring_header",
    "permute_basis",
    "rank_acyclicity_evidence",
    "shift_degrees",
    "verify_complex",
]
