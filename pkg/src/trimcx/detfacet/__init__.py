"""Detfacet Module

小行列式を除く場合の組合せ論(L_{α,τ})、q の明示式、Betti表とランクの閉じた式、
クラッターのクリーク複体と f 列を提供。
"""

from trimcx.detfacet.clutter import (
    DEFAULT_MAX_FVECTOR_GROUND,
    Clutter,
    ClutterSpec,
    clique_fvector_enumerate,
    determinantal_facet_ideal,
    fvector_frame,
)
from trimcx.detfacet.combinatorics import (
    ExponentAlpha,
    LMatching,
    extensions,
    l_set,
    multinomial,
    unique_extension,
)
from trimcx.detfacet.explicit_q import (
    complement_pairs,
    explicit_lift_family,
    explicit_q,
    permutation_sign,
    stacked_constant_rank,
)
from trimcx.detfacet.formulas import (
    betti_multi_minor,
    betti_pfaffian_trim,
    betti_single_minor,
    binom,
    check_sigmas,
    clique_fvector_formula,
    linear_strand_from_fvector,
    rank_formula,
)

__all__ = [
    "DEFAULT_MAX_FVECTOR_GROUND",
    "Clutter",
    "ClutterSpec",
    "ExponentAlpha",
    "LMatching",
    "betti_multi_minor",
    "betti_pfaffian_trim",
    "betti_single_minor",
    "binom",
    "check_sigmas",
    "clique_fvector_enumerate",
    "clique_fvector_formula",
    "complement_pairs",
    "determinantal_facet_ideal",
    "explicit_lift_family",
    "explicit_q",
    "extensions",
    "fvector_frame",
    "l_set",
    "linear_strand_from_fvector",
    "multinomial",
    "permutation_sign",
    "rank_formula",
    "stacked_constant_rank",
    "unique_extension",
]
