"""トリミングの入力

F: R/I の次数付き自由分解、F_1 の基底から選んだ t 個の要素 e_0^1, ..., e_0^t、
各 e_0^s に対するイデアル 𝔞_s とその分解 G^s をまとめたもの。
d_2 は d_2' + d_0^1 + ... + d_0^t に分解され、d_0^s は d_2 の第 e_0^s 行。
"""

from __future__ import annotations

import logging
from collections.abc import Sequence

from pydantic import BaseModel, ConfigDict, Field, model_validator

from trimcx.builders.koszul import koszul_complex
from trimcx.chain.complex import GradedFreeComplex, GradedFreeModule, GradedMap, free_module, shift_degrees
from trimcx.linalg.macaulay import ideal_span
from trimcx.linalg.matrices import block_matrix, entry
from trimcx.ring.polynomial import Polynomial, PolyRing, homogeneous_degree

logger = logging.getLogger(__name__)


class TrimSetupError(ValueError):
    """トリミングの入力が前提を満たさない場合のエラー"""


class TrimSetup(BaseModel):
    """トリミングの入力一式

    Attributes:
        f_complex: R/I の自由分解 F
        summand_indices: e_0^s に当たる F_1 の基底の位置(0始まり)
        a_ideals: 各 e_0^s に対する 𝔞_s の生成元
        g_complexes: 各 e_0^s に対する R/𝔞_s の自由分解 G^s
    """

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    f_complex: GradedFreeComplex
    summand_indices: tuple[int, ...] = Field(..., description="F_1 の基底の位置(0始まり)")
    a_ideals: tuple[tuple[Polynomial, ...], ...] = Field(..., description="𝔞_s の生成元")
    g_complexes: tuple[GradedFreeComplex, ...] = Field(..., description="R/𝔞_s の分解")

    @model_validator(mode="after")
    def validate_setup(self) -> TrimSetup:
        """添字・個数・環・G^s の形を検証"""
        rank_f1 = self.f_complex.module(1).rank
        if len(set(self.summand_indices)) != len(self.summand_indices):
            raise TrimSetupError(f"e_0 の位置が重複しています: {self.summand_indices}")
        for index in self.summand_indices:
            if not 0 <= index < rank_f1:
                raise TrimSetupError(f"e_0 の位置が範囲外です: {index}(F_1 の階数 {rank_f1})")
        t = len(self.summand_indices)
        if len(self.a_ideals) != t or len(self.g_complexes) != t:
            raise TrimSetupError(
                f"𝔞 と G の個数が e_0 の個数と一致しません: {len(self.a_ideals)}, {len(self.g_complexes)} != {t}"
            )
        for s, (gens, g) in enumerate(zip(self.a_ideals, self.g_complexes)):
            if g.ring != self.f_complex.ring:
                raise TrimSetupError(f"G^{s + 1} の環が F の環と一致しません")
            if g.module(0) != free_module(0):
                raise TrimSetupError(f"G^{s + 1}_0 は R である必要があります: {g.module(0).generator_degrees}")
            if not gens:
                raise TrimSetupError(f"𝔞_{s + 1} の生成元が空です")
            for a in gens:
                if not a or homogeneous_degree(a) is None:
                    raise TrimSetupError(f"𝔞_{s + 1} の生成元は非零の斉次多項式である必要があります")
        return self

    @property
    def ring(self) -> PolyRing:
        return self.f_complex.ring

    @property
    def t(self) -> int:
        return len(self.summand_indices)

    @property
    def kept_indices(self) -> list[int]:
        """F_1' を張る F_1 の基底の位置"""
        drop = set(self.summand_indices)
        return [k for k in range(self.f_complex.module(1).rank) if k not in drop]

    @property
    def f1_prime(self) -> GradedFreeModule:
        return self.f_complex.module(1).remove(self.summand_indices)

    def e0_degree(self, s: int) -> int:
        """deg e_0^s"""
        return self.f_complex.module(1).generator_degrees[self.summand_indices[s]]

    def e0_image(self, s: int) -> Polynomial:
        """d_1(e_0^s)"""
        return entry(self.f_complex.differential(1).matrix, 0, self.summand_indices[s])

    def g_twisted(self, s: int) -> GradedFreeComplex:
        """G^s の生成元次数を deg e_0^s だけずらした複体"""
        return shift_degrees(self.g_complexes[s], self.e0_degree(s))


class D2Decomposition(BaseModel):
    """d_2 = d_2' + Σ d_0^s

    Attributes:
        d2_prime: e_0^s の行を取り除いた d_2(F_2 -> F_1')
        d0_rows: 各 s の第 e_0^s 行(F_2 -> R(-deg e_0^s))
        kept_indices: d2_prime の行に対応する F_1 の位置
        summand_indices: d0_rows に対応する F_1 の位置
    """

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    d2_prime: GradedMap
    d0_rows: tuple[GradedMap, ...]
    kept_indices: tuple[int, ...]
    summand_indices: tuple[int, ...]

    def reassemble(self) -> GradedMap:
        """d_2' と d_0^s を F_1 の元の順序に戻して d_2 を組み立てる"""
        pieces: list[tuple[int, GradedMap]] = [
            (k, self.d2_prime.rows([r])) for r, k in enumerate(self.kept_indices)
        ] + list(zip(self.summand_indices, self.d0_rows))
        pieces.sort(key=lambda p: p[0])
        ring = self.d2_prime.ring
        source = self.d2_prime.source
        target = GradedFreeModule(
            generator_degrees=tuple(d for _, piece in pieces for d in piece.target.generator_degrees)
        )
        matrix = block_matrix(ring.poly_domain, [[p.matrix] for _, p in pieces], [1] * len(pieces), [source.rank])
        return GradedMap(ring=ring, source=source, target=target, matrix=matrix)


def decompose_d2(setup: TrimSetup) -> D2Decomposition:
    """d_2 を d_2' と各 e_0^s の行 d_0^s に分解する"""
    d2 = setup.f_complex.differential(2)
    kept = setup.kept_indices
    d2_prime = d2.rows(kept, target=setup.f1_prime)
    d0_rows = tuple(
        d2.rows([index], target=free_module(setup.e0_degree(s))) for s, index in enumerate(setup.summand_indices)
    )
    return D2Decomposition(
        d2_prime=d2_prime,
        d0_rows=d0_rows,
        kept_indices=tuple(kept),
        summand_indices=setup.summand_indices,
    )


def derive_ideal_a(row: Sequence[Polynomial]) -> list[Polynomial]:
    """d_0 の行の成分から 𝔞 の極小生成系を選ぶ

    成分をモニックにして次数の昇順に見ていき、それまでに選んだ生成元の
    イデアルに含まれないものだけを残す。定数の成分があれば (1) を返す。

    Args:
        row: d_0 の行の成分

    Returns:
        𝔞 の生成元(次数の昇順)

    Raises:
        TrimSetupError: 行が零、または斉次でない成分を含む場合
    """
    entries = [p for p in row if p]
    if not entries:
        raise TrimSetupError("d_0 の行が零です(e_0 は自由な直和成分です)")
    by_degree: dict[int, list[Polynomial]] = {}
    for p in entries:
        d = homogeneous_degree(p)
        if d is None:
            raise TrimSetupError(f"斉次でない成分です: {p}")
        by_degree.setdefault(d, []).append(p.monic())
    ring = entries[0].ring
    if 0 in by_degree:
        return [ring.one]

    kept: list[Polynomial] = []
    for d in sorted(by_degree):
        for p in by_degree[d]:
            if ideal_span(ring, kept, d).contains(p):
                continue
            kept.append(p)
    logger.debug("𝔞 の生成元: %d 個(成分 %d 個から)", len(kept), len(entries))
    return kept


def build_setup(
    f: GradedFreeComplex,
    summand_indices: Sequence[int],
    a_ideals: Sequence[Sequence[Polynomial]] | None = None,
    g_complexes: Sequence[GradedFreeComplex] | None = None,
) -> TrimSetup:
    """TrimSetupを組み立てる

    Args:
        f: R/I の自由分解
        summand_indices: e_0^s の位置(0始まり)
        a_ideals: 𝔞_s の生成元。省略時は derive_ideal_a で d_0^s から求める
        g_complexes: R/𝔞_s の分解。省略時は 𝔞_s の生成元上のKoszul複体

    Returns:
        検証済みのTrimSetup

    Raises:
        TrimSetupError: 入力が前提を満たさない場合
    """
    indices = tuple(summand_indices)
    rank_f1 = f.module(1).rank
    for index in indices:
        if not 0 <= index < rank_f1:
            raise TrimSetupError(f"e_0 の位置が範囲外です: {index}(F_1 の階数 {rank_f1})")
    d2 = f.differential(2)
    if a_ideals is None:
        ideals = [
            tuple(derive_ideal_a([entry(d2.matrix, index, c) for c in range(d2.source.rank)])) for index in indices
        ]
    else:
        ideals = [tuple(gens) for gens in a_ideals]
    if g_complexes is None:
        complexes = [koszul_complex(list(gens), f.ring) for gens in ideals]
    else:
        complexes = list(g_complexes)
    return TrimSetup(
        f_complex=f,
        summand_indices=indices,
        a_ideals=tuple(ideals),
        g_complexes=tuple(complexes),
    )
