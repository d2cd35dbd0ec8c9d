"""写像錐

f: S -> T に対し Cone_i = T_i ⊕ S_{i-1}、微分 [[d^T_i, f_{i-1}], [0, -d^S_{i-1}]]。
生成元の内部次数は変更しない(f は次数0の写像であることを前提とする)。
"""

from __future__ import annotations

import logging

from trimcx.chain.complex import (
    ChainMapData,
    GradedFreeComplex,
    GradedMap,
    NonCommutingMapError,
    check_chain_map,
)
from trimcx.linalg.matrices import block_matrix

logger = logging.getLogger(__name__)


def mapping_cone(f: ChainMapData, *, check: bool = True) -> GradedFreeComplex:
    """複体の写像 f の写像錐

    Args:
        f: shift=0, sign=+1 の複体の写像
        check: Trueなら四角形の可換性を事前に厳密検証する

    Returns:
        写像錐の複体

    Raises:
        NonCommutingMapError: 四角形が可換でない、または shift/sign が規約と異なる場合
    """
    if f.shift != 0 or f.sign != 1:
        raise NonCommutingMapError("写像錐は shift=0, sign=+1 の写像に対してのみ定義されます")
    if check and not check_chain_map(f):
        raise NonCommutingMapError("複体の写像の四角形が可換ではありません")

    source, target = f.source, f.target
    ring = target.ring
    domain = ring.poly_domain
    length = max(target.length, source.length + 1, len(f.maps))
    modules = [target.module(i).direct_sum(source.module(i - 1)) for i in range(length + 1)]

    differentials = []
    for i in range(1, length + 1):
        d_target = target.differential(i)
        d_source = source.differential(i - 1)
        f_prev = f.map(i - 1)
        matrix = block_matrix(
            domain,
            [
                [d_target.matrix, f_prev.matrix],
                [None, -d_source.matrix],
            ],
            [target.module(i - 1).rank, source.module(i - 2).rank],
            [target.module(i).rank, source.module(i - 1).rank],
        )
        differentials.append(GradedMap(ring=ring, source=modules[i], target=modules[i - 1], matrix=matrix))
    cone = GradedFreeComplex(ring=ring, modules=tuple(modules), differentials=tuple(differentials))
    logger.debug("写像錐の階数: %s", cone.ranks())
    return cone.trim_zero_tail()
