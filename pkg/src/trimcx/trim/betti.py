"""トリミング複体の次数付きBetti数

F と全ての G^s が極小なら、写像錐の微分の定数成分は φ_k = (q_k^1; ...; q_k^t) にしか現れない。
よって次数 j ごとに
β_{i,j}(R/J) = rank_j(B_i ⊕ S_{i-1}) - rank_j(φ_{i-1} ⊗ k) - rank_j(φ_i ⊗ k)。
"""

from __future__ import annotations

import logging

from trimcx.chain.betti import BettiTable
from trimcx.chain.complex import NotMinimalError, is_minimal
from trimcx.linalg.matrices import rank_over_field
from trimcx.trim.complex import cone_module, trimming_chain_map
from trimcx.trim.lifts import LiftFamily
from trimcx.trim.setup import TrimSetup

logger = logging.getLogger(__name__)


def trimmed_betti(setup: TrimSetup, lifts: LiftFamily) -> BettiTable:
    """定数部分のランクからBetti表を求める(写像錐は組み立てない)

    Raises:
        NotMinimalError: F または G^s が極小でない場合
    """
    if not is_minimal(setup.f_complex):
        raise NotMinimalError("F が極小ではありません")
    for s, g in enumerate(setup.g_complexes):
        if not is_minimal(g):
            raise NotMinimalError(f"G^{s + 1} が極小ではありません")

    phi = trimming_chain_map(setup, lifts)
    length = max(phi.target.length, phi.source.length + 1)

    def stacked_rank(k: int, degree: int) -> int:
        # φ_0 = d_1|F_1' は F の極小性から定数成分を持たない
        if k < 1 or k > phi.source.length:
            return 0
        return rank_over_field(phi.map(k).degree_block(degree))

    counts: dict[tuple[int, int], int] = {}
    for i in range(length + 1):
        module = cone_module(phi, i)
        for degree in module.degrees():
            dim = len(module.indices_of_degree(degree))
            counts[(i, degree)] = dim - stacked_rank(i - 1, degree) - stacked_rank(i, degree)
    table = BettiTable.from_counts(counts)
    logger.info("トリミング後のBetti数の合計: %s", table.totals())
    return table
