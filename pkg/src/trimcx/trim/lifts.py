"""q 写像の持ち上げ

各 e_0^s について、ずらした分解 G̃^s(= G^s(-deg e_0^s))の微分 m_k と
F の微分から q_k^s: F_{k+1} -> G̃^s_k を帰納的に解く:
m_1 ∘ q_1 = d_0^s、m_k ∘ q_k = q_{k-1} ∘ d_{k+1}(k >= 2)。
"""

from __future__ import annotations

import logging

from pydantic import BaseModel, ConfigDict, Field

from trimcx.chain.complex import GradedMap
from trimcx.linalg.solve import DEFAULT_MAX_UNKNOWNS, solve_poly_homogeneous
from trimcx.trim.setup import TrimSetup, decompose_d2

logger = logging.getLogger(__name__)


class LiftError(RuntimeError):
    """持ち上げの連立方程式が解を持たない場合のエラー

    d_0(F_2) ⊄ 𝔞·e_0 など、トリミングの前提が破れていることを示す。

    Attributes:
        summand: e_0 の番号(1始まり)
        index: q_k の k
    """

    def __init__(self, summand: int, index: int, message: str | None = None) -> None:
        self.summand = summand
        self.index = index
        detail = message or "持ち上げの連立方程式が解を持ちません(d_0(F_2) ⊆ 𝔞e_0 を確認してください)"
        super().__init__(f"q^{summand}_{index}: {detail}")


class LiftFamily(BaseModel):
    """持ち上げ q_k^s の族

    Attributes:
        setup: 元のTrimSetup
        maps: maps[s][k-1] が q_k^s: F_{k+1} -> G̃^s_k
    """

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    setup: TrimSetup
    maps: tuple[tuple[GradedMap, ...], ...] = Field(..., description="maps[s][k-1] = q_k^s")

    def q(self, s: int, k: int) -> GradedMap:
        """q_k^s(保持していない k では零写像)"""
        if k >= 1 and k <= len(self.maps[s]):
            return self.maps[s][k - 1]
        f = self.setup.f_complex
        return GradedMap.zero(f.ring, f.module(k + 1), self.setup.g_twisted(s).module(k))

    @property
    def length(self) -> int:
        """q_k が必要な最大の k(F の長さ - 1)"""
        return max(self.setup.f_complex.length - 1, 0)


def lift_q(
    setup: TrimSetup,
    *,
    seed: int | None = None,
    max_unknowns: int = DEFAULT_MAX_UNKNOWNS,
) -> LiftFamily:
    """全ての q_k^s を厳密に解く

    Args:
        setup: トリミングの入力
        seed: 指定すると自由変数に乱数を割り当て、別の持ち上げを得る
        max_unknowns: 1列あたりの未知数の上限

    Returns:
        LiftFamily

    Raises:
        LiftError: 持ち上げが存在しない場合
        SizeGuardError: 未知数が上限を超える場合
    """
    f = setup.f_complex
    decomposition = decompose_d2(setup)
    length = max(f.length - 1, 0)
    family: list[tuple[GradedMap, ...]] = []
    for s in range(setup.t):
        g = setup.g_twisted(s)
        maps: list[GradedMap] = []
        previous = decomposition.d0_rows[s]
        for k in range(1, length + 1):
            # k = 1 の右辺は d_0^s、以降は q_{k-1} ∘ d_{k+1}
            rhs = previous if k == 1 else previous.compose(f.differential(k + 1))
            source = f.module(k + 1)
            target = g.module(k)
            if rhs.is_zero():
                q = GradedMap.zero(f.ring, source, target)
            elif target.rank == 0:
                raise LiftError(s + 1, k, f"G^{s + 1}_{k} が零なのに右辺が零ではありません")
            else:
                solved = solve_poly_homogeneous(
                    g.differential(k).matrix,
                    rhs.matrix,
                    target.generator_degrees,
                    source.generator_degrees,
                    seed=None if seed is None else seed + 1000 * s + k,
                    max_unknowns=max_unknowns,
                )
                if solved is None:
                    raise LiftError(s + 1, k)
                q = GradedMap(ring=f.ring, source=source, target=target, matrix=solved)
            logger.debug("q^%d_%d を求めました: %s", s + 1, k, q.shape)
            maps.append(q)
            previous = q
        family.append(tuple(maps))
    return LiftFamily(setup=setup, maps=tuple(family))


def verify_lifts(family: LiftFamily) -> bool:
    """m_1 ∘ q_1 = d_0^s と m_k ∘ q_k = q_{k-1} ∘ d_{k+1} が厳密に成り立つか"""
    setup = family.setup
    f = setup.f_complex
    decomposition = decompose_d2(setup)
    for s in range(setup.t):
        g = setup.g_twisted(s)
        for k in range(1, family.length + 1):
            lhs = g.differential(k).compose(family.q(s, k))
            if k == 1:
                rhs = decomposition.d0_rows[s]
            else:
                rhs = family.q(s, k - 1).compose(f.differential(k + 1))
            if lhs.matrix.to_dod() != rhs.matrix.to_dod():
                logger.debug("q^%d_%d の四角形が可換ではありません", s + 1, k)
                return False
    return True
