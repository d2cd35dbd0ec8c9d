"""トリミング複体

上段 S: F_1' <- F_2 <- F_3 <- ...(微分 d_2', d_3, ...)、
下段 B: R <- ⊕_s G̃^s_1 <- ⊕_s G̃^s_2 <- ...(最初の微分は -Σ_s d_1(e_0^s)·m_1^s)、
写像 φ_0 = d_1|F_1'、φ_k = (q_k^1; ...; q_k^t) の写像錐が R/J の自由分解になる。
"""

from __future__ import annotations

import logging
from functools import reduce

from trimcx.chain.complex import (
    ChainMapData,
    GradedFreeComplex,
    GradedFreeModule,
    GradedMap,
    direct_sum,
    free_module,
)
from trimcx.chain.cone import mapping_cone
from trimcx.linalg.matrices import from_entries, matmul, vstack
from trimcx.trim.lifts import LiftFamily
from trimcx.trim.setup import TrimSetup, decompose_d2

logger = logging.getLogger(__name__)


def top_row(setup: TrimSetup) -> GradedFreeComplex:
    """S_0 = F_1'、S_k = F_{k+1} の複体"""
    f = setup.f_complex
    d2_prime = decompose_d2(setup).d2_prime
    if f.length < 2:
        return GradedFreeComplex(ring=f.ring, modules=(setup.f1_prime,), differentials=())
    differentials = [d2_prime] + [f.differential(k) for k in range(3, f.length + 1)]
    return GradedFreeComplex.from_differentials(f.ring, differentials)


def bottom_row(setup: TrimSetup) -> GradedFreeComplex:
    """B_0 = R、B_k = ⊕_s G̃^s_k の複体"""
    ring = setup.ring
    r0 = free_module(0)
    if setup.t == 0:
        return GradedFreeComplex(ring=ring, modules=(r0,), differentials=())
    stacked = reduce(direct_sum, [setup.g_twisted(s) for s in range(setup.t)])
    if stacked.length == 0:
        return GradedFreeComplex(ring=ring, modules=(r0,), differentials=())
    # ⊕_s R(-deg e_0^s) -> R を (-d_1(e_0^1), ..., -d_1(e_0^t)) で合成する
    augmentation = from_entries(
        ring.poly_domain, (1, setup.t), {(0, s): -setup.e0_image(s) for s in range(setup.t)}
    )
    d1 = GradedMap(
        ring=ring,
        source=stacked.module(1),
        target=r0,
        matrix=matmul(augmentation, stacked.differential(1).matrix),
    )
    modules = (r0, *stacked.modules[1:])
    return GradedFreeComplex(ring=ring, modules=modules, differentials=(d1, *stacked.differentials[1:]))


def trimming_chain_map(setup: TrimSetup, lifts: LiftFamily) -> ChainMapData:
    """上段から下段への複体の写像 φ"""
    if lifts.setup is not setup and lifts.setup != setup:
        raise ValueError("LiftFamilyが別のTrimSetupから作られています")
    f = setup.f_complex
    source = top_row(setup)
    target = bottom_row(setup)
    ring = setup.ring
    phi0 = f.differential(1).columns(setup.kept_indices)
    maps = [GradedMap(ring=ring, source=source.module(0), target=target.module(0), matrix=phi0.matrix)]
    for k in range(1, source.length + 1):
        blocks = [lifts.q(s, k).matrix for s in range(setup.t)]
        matrix = vstack(ring.poly_domain, blocks, source.module(k).rank)
        maps.append(GradedMap(ring=ring, source=source.module(k), target=target.module(k), matrix=matrix))
    return ChainMapData(source=source, target=target, maps=tuple(maps))


def trimming_complex(setup: TrimSetup, lifts: LiftFamily, *, check: bool = True) -> GradedFreeComplex:
    """トリミング複体(φ の写像錐)

    Args:
        setup: トリミングの入力
        lifts: setup から求めた q の族
        check: Trueなら写像錐を作る前に四角形の可換性を厳密に検証する

    Returns:
        R/J の自由分解(一般に極小とは限らない)

    Raises:
        NonCommutingMapError: 持ち上げが可換性を満たさない場合
    """
    phi = trimming_chain_map(setup, lifts)
    cone = mapping_cone(phi, check=check)
    logger.info("トリミング複体: 階数 %s", cone.ranks())
    return cone


def cone_module(phi: ChainMapData, i: int) -> GradedFreeModule:
    """写像錐の第 i 項 B_i ⊕ S_{i-1}"""
    return phi.target.module(i).direct_sum(phi.source.module(i - 1))
