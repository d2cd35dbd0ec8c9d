"""Trim Module

d_2 の分解、𝔞 の選択、q の持ち上げ、(反復)トリミング複体とそのBetti数、有限次数での検証を提供。
"""

from trimcx.trim.betti import trimmed_betti
from trimcx.trim.checks import (
    DEFAULT_DMAX_SLACK,
    colon_containment,
    default_dmax,
    h0_generators,
    h0_matches,
    kprime_generators,
    resolves_kprime,
    trimming_ideal_generators,
)
from trimcx.trim.complex import bottom_row, cone_module, top_row, trimming_chain_map, trimming_complex
from trimcx.trim.lifts import LiftError, LiftFamily, lift_q, verify_lifts
from trimcx.trim.setup import D2Decomposition, TrimSetup, TrimSetupError, build_setup, decompose_d2, derive_ideal_a

__all__ = [
    "DEFAULT_DMAX_SLACK",
    "D2Decomposition",
    "LiftError",
    "LiftFamily",
    "TrimSetup",
    "TrimSetupError",
    "bottom_row",
    "build_setup",
    "colon_containment",
    "cone_module",
    "decompose_d2",
    "default_dmax",
    "derive_ideal_a",
    "h0_generators",
    "h0_matches",
    "kprime_generators",
    "lift_q",
    "resolves_kprime",
    "top_row",
    "trimmed_betti",
    "trimming_chain_map",
    "trimming_complex",
    "trimming_ideal_generators",
    "verify_lifts",
]
