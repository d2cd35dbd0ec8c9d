"""次数付き自由加群の複体

次数付き自由加群 F_i(生成元の内部次数の列)と斉次な微分 d_i: F_i -> F_{i-1} からなる複体、
複体の間の写像、およびそれらの検証(d^2 = 0、極小性、ランクによる非輪状性の証拠)を定義する。
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from typing import Any

from pydantic import BaseModel, ConfigDict, Field, model_validator

from trimcx.linalg.matrices import (
    PolyMatrix,
    block_matrix,
    constant_part,
    is_zero_matrix,
    matmul,
    nonzero_entries,
    rank_at_random_point,
    submatrix,
    zero_matrix,
)
from trimcx.ring.polynomial import PolyRing, homogeneous_degree

logger = logging.getLogger(__name__)


class ComplexError(ValueError):
    """複体・写像の構成が不正な場合のエラー"""


class NonCommutingMapError(ComplexError):
    """複体の写像の四角形が可換でない場合のエラー"""


class NotMinimalError(ComplexError):
    """極小性を要求する操作に非極小な複体が渡された場合のエラー"""


class GradedFreeModule(BaseModel):
    """次数付き自由加群 ⊕ R(-d_k)

    Attributes:
        generator_degrees: 自由生成元の内部次数
    """

    model_config = ConfigDict(frozen=True)

    generator_degrees: tuple[int, ...] = Field(default=(), description="生成元の内部次数")

    @property
    def rank(self) -> int:
        return len(self.generator_degrees)

    def twist(self, shift: int) -> GradedFreeModule:
        """全生成元の次数を shift だけずらした加群"""
        return GradedFreeModule(generator_degrees=tuple(d + shift for d in self.generator_degrees))

    def direct_sum(self, other: GradedFreeModule) -> GradedFreeModule:
        return GradedFreeModule(generator_degrees=self.generator_degrees + other.generator_degrees)

    def indices_of_degree(self, degree: int) -> list[int]:
        return [k for k, d in enumerate(self.generator_degrees) if d == degree]

    def degrees(self) -> set[int]:
        return set(self.generator_degrees)

    def remove(self, indices: Sequence[int]) -> GradedFreeModule:
        drop = set(indices)
        return GradedFreeModule(
            generator_degrees=tuple(d for k, d in enumerate(self.generator_degrees) if k not in drop)
        )


ZERO_MODULE = GradedFreeModule()


def free_module(*degrees: int) -> GradedFreeModule:
    return GradedFreeModule(generator_degrees=tuple(degrees))


class GradedMap(BaseModel):
    """次数付き自由加群の間の写像

    行列の行は target の生成元、列は source の生成元に対応する。
    斉次性(成分 (i, j) が 0 または次数 source_deg(j) - target_deg(i) の斉次多項式)は
    構成時には検査せず、is_homogeneous() と verify_complex で判定する。

    Attributes:
        ring: 多項式環
        source: 定義域
        target: 値域
        matrix: target.rank x source.rank のPolyMatrix
    """

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    ring: PolyRing
    source: GradedFreeModule
    target: GradedFreeModule
    matrix: Any = Field(..., description="PolyMatrix(sympy DomainMatrix)")

    @model_validator(mode="after")
    def validate_shape(self) -> GradedMap:
        """行列の形と環の整合性を検証"""
        expected = (self.target.rank, self.source.rank)
        if tuple(self.matrix.shape) != expected:
            raise ValueError(f"行列の形が加群の階数と一致しません: {self.matrix.shape} != {expected}")
        if self.matrix.domain != self.ring.poly_domain:
            raise ValueError(f"行列の環が一致しません: {self.matrix.domain}")
        return self

    @classmethod
    def zero(cls, ring: PolyRing, source: GradedFreeModule, target: GradedFreeModule) -> GradedMap:
        return cls(
            ring=ring,
            source=source,
            target=target,
            matrix=zero_matrix(ring.poly_domain, (target.rank, source.rank)),
        )

    @classmethod
    def infer_source(cls, ring: PolyRing, target: GradedFreeModule, matrix: PolyMatrix) -> GradedMap:
        """各列の最初の非零成分から定義域の生成元次数を推定して写像を作る

        零の列は値域の最大次数(なければ0)を次数とする。
        """
        default = max(target.generator_degrees, default=0)
        degrees = [default] * matrix.shape[1]
        seen: set[int] = set()
        for i, j, value in sorted(nonzero_entries(matrix), key=lambda e: (e[1], e[0])):
            if j in seen:
                continue
            d = homogeneous_degree(value)
            if d is None:
                raise ComplexError(f"斉次でない成分です: ({i}, {j})")
            degrees[j] = target.generator_degrees[i] + d
            seen.add(j)
        return cls(ring=ring, source=GradedFreeModule(generator_degrees=tuple(degrees)), target=target, matrix=matrix)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.target.rank, self.source.rank)

    def is_zero(self) -> bool:
        return is_zero_matrix(self.matrix)

    def is_homogeneous(self) -> bool:
        """全成分が次数 source_deg(j) - target_deg(i) の斉次多項式か"""
        for i, j, value in nonzero_entries(self.matrix):
            expected = self.source.generator_degrees[j] - self.target.generator_degrees[i]
            if expected < 0 or homogeneous_degree(value) != expected:
                return False
        return True

    def has_unit_entries(self) -> bool:
        """定数項が非零の成分を持つか(極小性の破れ)"""
        return any(value.const() for _, _, value in nonzero_entries(self.matrix))

    def constant_part(self) -> Any:
        """self ⊗ k(係数体上の行列)"""
        return constant_part(self.matrix)

    def degree_block(self, degree: int) -> Any:
        """次数 degree の行と列だけを取り出した定数部分(次数 degree での self ⊗ k)"""
        rows = self.target.indices_of_degree(degree)
        cols = self.source.indices_of_degree(degree)
        return constant_part(submatrix(self.matrix, rows, cols))

    def compose(self, other: GradedMap) -> GradedMap:
        """self ∘ other

        Raises:
            ComplexError: other の値域と self の定義域が一致しない場合
        """
        if other.target != self.source:
            raise ComplexError("合成できません: 値域と定義域の次数が一致しません")
        return GradedMap(
            ring=self.ring, source=other.source, target=self.target, matrix=matmul(self.matrix, other.matrix)
        )

    def negate(self) -> GradedMap:
        return self.model_copy(update={"matrix": -self.matrix})

    def rows(self, indices: Sequence[int], target: GradedFreeModule | None = None) -> GradedMap:
        """指定した行(値域の生成元)だけを残した写像"""
        new_target = target or GradedFreeModule(
            generator_degrees=tuple(self.target.generator_degrees[k] for k in indices)
        )
        return GradedMap(
            ring=self.ring,
            source=self.source,
            target=new_target,
            matrix=submatrix(self.matrix, list(indices), list(range(self.source.rank))),
        )

    def columns(self, indices: Sequence[int]) -> GradedMap:
        """指定した列(定義域の生成元)だけを残した写像"""
        new_source = GradedFreeModule(generator_degrees=tuple(self.source.generator_degrees[k] for k in indices))
        return GradedMap(
            ring=self.ring,
            source=new_source,
            target=self.target,
            matrix=submatrix(self.matrix, list(range(self.target.rank)), list(indices)),
        )


class GradedFreeComplex(BaseModel):
    """次数付き自由複体 F_0 <- F_1 <- ... <- F_L

    Attributes:
        ring: 多項式環
        modules: F_0, ..., F_L
        differentials: d_1, ..., d_L(differentials[i-1] が d_i: F_i -> F_{i-1})
    """

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    ring: PolyRing
    modules: tuple[GradedFreeModule, ...]
    differentials: tuple[GradedMap, ...]

    @model_validator(mode="after")
    def validate_chain(self) -> GradedFreeComplex:
        """加群と微分の個数・定義域・値域の整合性を検証"""
        if not self.modules:
            raise ValueError("複体には少なくともF_0が必要です")
        if len(self.differentials) != len(self.modules) - 1:
            raise ValueError(f"微分の個数が不正です: {len(self.differentials)} != {len(self.modules) - 1}")
        for i, d in enumerate(self.differentials, start=1):
            if d.source != self.modules[i] or d.target != self.modules[i - 1]:
                raise ValueError(f"d_{i} の定義域・値域が加群と一致しません")
            if d.ring != self.ring:
                raise ValueError(f"d_{i} の環が複体の環と一致しません")
        return self

    @classmethod
    def from_differentials(cls, ring: PolyRing, differentials: Sequence[GradedMap]) -> GradedFreeComplex:
        """微分の列から複体を作る(加群は微分の定義域・値域から取る)"""
        if not differentials:
            raise ComplexError("微分が空です")
        modules = [differentials[0].target] + [d.source for d in differentials]
        return cls(ring=ring, modules=tuple(modules), differentials=tuple(differentials))

    @property
    def length(self) -> int:
        return len(self.modules) - 1

    def module(self, i: int) -> GradedFreeModule:
        """F_i(範囲外は零加群)"""
        if 0 <= i < len(self.modules):
            return self.modules[i]
        return ZERO_MODULE

    def differential(self, i: int) -> GradedMap:
        """d_i: F_i -> F_{i-1}(範囲外は零写像)"""
        if 1 <= i <= self.length:
            return self.differentials[i - 1]
        return GradedMap.zero(self.ring, self.module(i), self.module(i - 1))

    def ranks(self) -> list[int]:
        return [m.rank for m in self.modules]

    def trim_zero_tail(self) -> GradedFreeComplex:
        """末尾の零加群を落とす"""
        last = self.length
        while last > 0 and self.modules[last].rank == 0:
            last -= 1
        if last == self.length:
            return self
        return GradedFreeComplex(
            ring=self.ring, modules=self.modules[: last + 1], differentials=self.differentials[:last]
        )


class ChainMapData(BaseModel):
    """複体の写像 f: source -> target

    maps[i] は source の F_i から target の F_{i+shift} への写像。
    四角形は d^target ∘ f_i = sign · f_{i-1} ∘ d^source を満たすべきもの(check_chain_mapで検証)。
    maps が足りない次数は零写像とみなす。

    Attributes:
        source: 定義域の複体
        target: 値域の複体
        maps: 各次数の写像
        shift: ホモロジー次数のずれ
        sign: 可換性の符号規約(+1 または -1)
    """

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    source: GradedFreeComplex
    target: GradedFreeComplex
    maps: tuple[GradedMap, ...]
    shift: int = 0
    sign: int = Field(default=1, description="可換性の符号規約")

    @model_validator(mode="after")
    def validate_maps(self) -> ChainMapData:
        if self.sign not in (1, -1):
            raise ValueError(f"signは1または-1である必要があります: {self.sign}")
        for i, f in enumerate(self.maps):
            if f.source != self.source.module(i) or f.target != self.target.module(i + self.shift):
                raise ValueError(f"f_{i} の定義域・値域が複体と一致しません")
        return self

    def map(self, i: int) -> GradedMap:
        if 0 <= i < len(self.maps):
            return self.maps[i]
        return GradedMap.zero(self.source.ring, self.source.module(i), self.target.module(i + self.shift))


# --- 検証 -------------------------------------------------------------


def verify_complex(c: GradedFreeComplex) -> bool:
    """全ての微分が斉次で、d_i ∘ d_{i+1} が厳密に零であるか"""
    for i, d in enumerate(c.differentials, start=1):
        if not d.is_homogeneous():
            logger.debug("d_%d が斉次ではありません", i)
            return False
    for i in range(1, c.length):
        composite = c.differentials[i - 1].compose(c.differentials[i])
        if not composite.is_zero():
            logger.debug("d_%d ∘ d_%d が零ではありません", i, i + 1)
            return False
    return True


def is_minimal(c: GradedFreeComplex) -> bool:
    """全ての微分の成分が定数項を持たないか"""
    return not any(d.has_unit_entries() for d in c.differentials)


def check_chain_map(f: ChainMapData) -> bool:
    """全ての四角形 d^T ∘ f_i = sign · f_{i-1} ∘ d^S_i が厳密に成り立つか"""
    top = max(f.source.length, len(f.maps) - 1)
    for i in range(1, top + 1):
        lhs = f.target.differential(i + f.shift).compose(f.map(i))
        rhs = f.map(i - 1).compose(f.source.differential(i))
        if f.sign == -1:
            rhs = rhs.negate()
        if lhs.matrix.to_dod() != rhs.matrix.to_dod():
            logger.debug("次数 %d の四角形が可換ではありません", i)
            return False
    return True


def rank_acyclicity_evidence(c: GradedFreeComplex, seed: int) -> bool:
    """ランクによる非輪状性の必要条件(Buchsbaum–Eisenbudのランク条件)

    0 < i < L で rank d_i + rank d_{i+1} = rank F_i、かつ rank d_L = rank F_L。
    ランクはシード付きランダム点で評価する。
    """
    ranks = {i: rank_at_random_point(c.differential(i).matrix, seed) for i in range(1, c.length + 1)}
    for i in range(1, c.length):
        if ranks[i] + ranks[i + 1] != c.module(i).rank:
            logger.debug("次数 %d でランク条件が成り立ちません: %d + %d", i, ranks[i], ranks[i + 1])
            return False
    if c.length >= 1 and ranks[c.length] != c.module(c.length).rank:
        return False
    return True


# --- 構成 -------------------------------------------------------------


def direct_sum(a: GradedFreeComplex, b: GradedFreeComplex) -> GradedFreeComplex:
    """複体の直和(微分はブロック対角)"""
    if a.ring != b.ring:
        raise ComplexError("環の異なる複体の直和はとれません")
    length = max(a.length, b.length)
    domain = a.ring.poly_domain
    modules = [a.module(i).direct_sum(b.module(i)) for i in range(length + 1)]
    differentials = []
    for i in range(1, length + 1):
        da, db = a.differential(i), b.differential(i)
        matrix = block_matrix(
            domain,
            [[da.matrix, None], [None, db.matrix]],
            [da.target.rank, db.target.rank],
            [da.source.rank, db.source.rank],
        )
        differentials.append(GradedMap(ring=a.ring, source=modules[i], target=modules[i - 1], matrix=matrix))
    return GradedFreeComplex(ring=a.ring, modules=tuple(modules), differentials=tuple(differentials))


def shift_degrees(c: GradedFreeComplex, shift: int) -> GradedFreeComplex:
    """全ての生成元の内部次数を shift だけずらした複体 c(-shift)"""
    modules = tuple(m.twist(shift) for m in c.modules)
    differentials = tuple(
        GradedMap(ring=c.ring, source=modules[i], target=modules[i - 1], matrix=d.matrix)
        for i, d in enumerate(c.differentials, start=1)
    )
    return GradedFreeComplex(ring=c.ring, modules=modules, differentials=differentials)


def permute_basis(c: GradedFreeComplex, index: int, permutation: Sequence[int]) -> GradedFreeComplex:
    """F_index の生成元を並べ替えた複体

    新しい k 番目の生成元は元の permutation[k] 番目。

    Raises:
        ComplexError: permutation が置換でない場合
    """
    module = c.module(index)
    if sorted(permutation) != list(range(module.rank)):
        raise ComplexError(f"置換ではありません: {list(permutation)}")
    new_module = GradedFreeModule(generator_degrees=tuple(module.generator_degrees[k] for k in permutation))
    modules = list(c.modules)
    modules[index] = new_module
    differentials = list(c.differentials)
    if index >= 1:
        d = c.differential(index)
        matrix = submatrix(d.matrix, list(range(d.target.rank)), list(permutation))
        differentials[index - 1] = GradedMap(ring=c.ring, source=new_module, target=d.target, matrix=matrix)
    if index + 1 <= c.length:
        d = c.differential(index + 1)
        matrix = submatrix(d.matrix, list(permutation), list(range(d.source.rank)))
        differentials[index] = GradedMap(ring=c.ring, source=d.source, target=new_module, matrix=matrix)
    return GradedFreeComplex(ring=c.ring, modules=tuple(modules), differentials=tuple(differentials))
