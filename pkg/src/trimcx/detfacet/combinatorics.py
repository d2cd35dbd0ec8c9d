"""L_{α,τ} の組合せ論

α = (α_1, ..., α_n) と τ = (τ_1 < ... < τ_ℓ) に対し、τ の各要素に行 r を割り当てた
対の集合 {(r_1, τ_1), ..., (r_ℓ, τ_ℓ)} で、行 j がちょうど α_j 回現れるもの全体。
行・列はいずれも1始まり。
"""

from __future__ import annotations

from math import factorial

from pydantic import BaseModel, ConfigDict, Field, field_validator

from trimcx.builders.matrices import IndexSet


class ExponentAlpha(BaseModel):
    """分割冪の指数 α

    Attributes:
        alpha: 非負整数の列
    """

    model_config = ConfigDict(frozen=True)

    alpha: tuple[int, ...] = Field(..., description="指数")

    @field_validator("alpha")
    @classmethod
    def validate_alpha(cls, v: tuple[int, ...]) -> tuple[int, ...]:
        if any(a < 0 for a in v):
            raise ValueError(f"指数は非負である必要があります: {v}")
        return v

    @classmethod
    def of(cls, *alpha: int) -> ExponentAlpha:
        return cls(alpha=tuple(alpha))

    @property
    def degree(self) -> int:
        """|α| = Σ α_i"""
        return sum(self.alpha)

    def lowered(self, i: int) -> ExponentAlpha:
        """α^i(1始まりの第i成分を1減らしたもの)

        Raises:
            ValueError: α_i = 0 の場合
        """
        if self.alpha[i - 1] == 0:
            raise ValueError(f"α_{i} = 0 は減らせません")
        values = list(self.alpha)
        values[i - 1] -= 1
        return ExponentAlpha(alpha=tuple(values))


class LMatching(BaseModel):
    """L_{α,τ} の元。列の昇順に並べた (行, 列) の対

    Attributes:
        pairs: (行, 列) の列
    """

    model_config = ConfigDict(frozen=True)

    pairs: tuple[tuple[int, int], ...] = Field(..., description="(行, 列) の対")

    @field_validator("pairs")
    @classmethod
    def validate_pairs(cls, v: tuple[tuple[int, int], ...]) -> tuple[tuple[int, int], ...]:
        """列が狭義単調増加になるよう整列し、重複列を拒否する"""
        ordered = tuple(sorted(v, key=lambda p: p[1]))
        columns = [c for _, c in ordered]
        if len(set(columns)) != len(columns):
            raise ValueError(f"同じ列が複数回現れています: {v}")
        return ordered

    @property
    def rows(self) -> tuple[int, ...]:
        return tuple(r for r, _ in self.pairs)

    @property
    def columns(self) -> tuple[int, ...]:
        return tuple(c for _, c in self.pairs)

    def matches(self, alpha: ExponentAlpha, tau: IndexSet) -> bool:
        """列が τ と一致し、行 j の出現回数が α_j であるか"""
        if self.columns != tau.indices:
            return False
        counts = [0] * len(alpha.alpha)
        for r in self.rows:
            if not 1 <= r <= len(counts):
                return False
            counts[r - 1] += 1
        return tuple(counts) == alpha.alpha

    def contains(self, other: LMatching) -> bool:
        return set(other.pairs) <= set(self.pairs)


def _row_sequences(counts: list[int], length: int) -> list[tuple[int, ...]]:
    """行 j を counts[j-1] 回使う長さ length の列(辞書式順)"""
    if length == 0:
        return [()]
    out = []
    for j, c in enumerate(counts):
        if c == 0:
            continue
        counts[j] -= 1
        for rest in _row_sequences(counts, length - 1):
            out.append((j + 1, *rest))
        counts[j] += 1
    return out


def l_set(alpha: ExponentAlpha, tau: IndexSet) -> list[LMatching]:
    """L_{α,τ} の全ての元(行の列の辞書式順)。|α| != |τ| なら空"""
    if alpha.degree != tau.size:
        return []
    return [
        LMatching(pairs=tuple(zip(rows, tau.indices)))
        for rows in _row_sequences(list(alpha.alpha), tau.size)
    ]


def multinomial(alpha: ExponentAlpha) -> int:
    """ℓ! / (α_1! ... α_n!)"""
    out = factorial(alpha.degree)
    for a in alpha.alpha:
        out //= factorial(a)
    return out


def extensions(alpha: ExponentAlpha, tau: IndexSet, sub: LMatching) -> list[LMatching]:
    """sub を含む L ∈ L_{α,τ} の一覧"""
    return [candidate for candidate in l_set(alpha, tau) if candidate.contains(sub)]


def unique_extension(alpha: ExponentAlpha, tau: IndexSet, i: int, k: int, sub: LMatching) -> LMatching:
    """sub ∈ L_{α^i, τ∖τ_k} を含むただ一つの L ∈ L_{α,τ}

    Raises:
        ValueError: sub が L_{α^i, τ∖τ_k} の元でない、または拡張が一意でない場合
    """
    reduced_tau = IndexSet(indices=tau.indices[: k - 1] + tau.indices[k:])
    if not sub.matches(alpha.lowered(i), reduced_tau):
        raise ValueError(f"L_{{α^{i}, τ∖τ_{k}}} の元ではありません: {sub.pairs}")
    found = extensions(alpha, tau, sub)
    if len(found) != 1:
        raise ValueError(f"拡張が一意ではありません: {len(found)} 個")
    expected = LMatching(pairs=sub.pairs + ((i, tau.indices[k - 1]),))
    if found[0] != expected:
        raise ValueError(f"拡張が sub ∪ {{({i}, τ_{k})}} と一致しません: {found[0].pairs}")
    return found[0]
