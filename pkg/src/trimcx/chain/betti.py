"""次数付きBetti表

β_{i,j}: ホモロジー次数 i、内部次数 j の生成元の個数。
表示の行は j - i(Macaulay2と同じ配置)。
"""

from __future__ import annotations

from collections import defaultdict
from collections.abc import Mapping

import polars as pl
from pydantic import BaseModel, Field, field_validator

from trimcx.chain.complex import GradedFreeComplex, NotMinimalError, is_minimal
from trimcx.linalg.matrices import rank_over_field


class BettiTable(BaseModel):
    """次数付きBetti表

    Attributes:
        entries: (i, j) -> 正の個数。零の成分は保持しない
    """

    entries: dict[tuple[int, int], int] = Field(default_factory=dict, description="(i, j) -> β_{i,j}")

    @field_validator("entries")
    @classmethod
    def validate_entries(cls, v: dict[tuple[int, int], int]) -> dict[tuple[int, int], int]:
        """全ての成分が正であることを検証"""
        for key, value in v.items():
            if value <= 0:
                raise ValueError(f"Betti数は正である必要があります: β{key} = {value}")
        return dict(sorted(v.items()))

    @classmethod
    def from_counts(cls, counts: Mapping[tuple[int, int], int]) -> BettiTable:
        """零を含む個数の辞書から表を作る(零は捨てる)

        Raises:
            ValueError: 負の個数が含まれる場合
        """
        for key, value in counts.items():
            if value < 0:
                raise ValueError(f"Betti数が負です: β{key} = {value}")
        return cls(entries={k: v for k, v in counts.items() if v != 0})

    def value(self, i: int, j: int) -> int:
        return self.entries.get((i, j), 0)

    @property
    def projective_dimension(self) -> int:
        return max((i for i, _ in self.entries), default=0)

    def totals(self) -> list[int]:
        """各ホモロジー次数の合計 Σ_j β_{i,j}"""
        sums = [0] * (self.projective_dimension + 1)
        for (i, _), value in self.entries.items():
            sums[i] += value
        return sums

    def rows(self) -> dict[int, dict[int, int]]:
        """行 j - i ごとの {i: β_{i,j}}"""
        grouped: dict[int, dict[int, int]] = defaultdict(dict)
        for (i, j), value in self.entries.items():
            grouped[j - i][i] = value
        return dict(sorted(grouped.items()))

    def pretty(self) -> str:
        """Macaulay2形式の表示(零は '.')

        最小の行から最大の行までを全て並べ、成分のない行も '.' だけの行として表示する。
        """
        width = self.projective_dimension + 1
        rows = self.rows()
        header = ["", *(str(i) for i in range(width))]
        body = [["total:", *(str(t) for t in self.totals())]]
        for r in range(min(rows), max(rows) + 1) if rows else ():
            values = rows.get(r, {})
            body.append([f"{r}:", *(str(values[i]) if i in values else "." for i in range(width))])
        cells = [header, *body]
        widths = [max(len(row[k]) for row in cells) for k in range(width + 1)]
        lines = []
        for row in cells:
            first = row[0].rjust(widths[0])
            rest = " ".join(cell.rjust(widths[k + 1]) for k, cell in enumerate(row[1:]))
            lines.append(f"{first} {rest}")
        return "\n".join(lines)

    def to_frame(self) -> pl.DataFrame:
        """列 i, j, v(いずれもInt64)のDataFrame。(i, j)昇順"""
        keys = sorted(self.entries)
        return pl.DataFrame(
            {
                "i": [i for i, _ in keys],
                "j": [j for _, j in keys],
                "v": [self.entries[k] for k in keys],
            },
            schema={"i": pl.Int64, "j": pl.Int64, "v": pl.Int64},
        )

    @classmethod
    def from_frame(cls, df: pl.DataFrame) -> BettiTable:
        return cls.from_counts({(int(i), int(j)): int(v) for i, j, v in df.select("i", "j", "v").iter_rows()})


def betti_from_minimal(c: GradedFreeComplex) -> BettiTable:
    """極小自由分解の生成元次数を数えてBetti表を作る

    Raises:
        NotMinimalError: 極小でない複体の場合
    """
    if not is_minimal(c):
        raise NotMinimalError("極小でない複体からはBetti表を直接読み取れません")
    counts: dict[tuple[int, int], int] = defaultdict(int)
    for i, module in enumerate(c.modules):
        for degree in module.generator_degrees:
            counts[(i, degree)] += 1
    return BettiTable.from_counts(counts)


def betti_from_resolution(c: GradedFreeComplex) -> BettiTable:
    """極小とは限らない自由分解から c ⊗ k のホモロジーとしてBetti数を求める

    定数成分は同じ内部次数の生成元の間にしか現れないので、次数ごとに
    β_{i,j} = dim_j F_i - rank_j(d_i ⊗ k) - rank_j(d_{i+1} ⊗ k)。
    """
    counts: dict[tuple[int, int], int] = {}
    for i, module in enumerate(c.modules):
        for degree in module.degrees():
            dim = len(module.indices_of_degree(degree))
            out_rank = rank_over_field(c.differential(i).degree_block(degree)) if i >= 1 else 0
            in_rank = rank_over_field(c.differential(i + 1).degree_block(degree))
            counts[(i, degree)] = dim - out_rank - in_rank
    return BettiTable.from_counts(counts)


def linear_strand(table: BettiTable, row: int | None = None) -> dict[int, int]:
    """行 row(省略時は i >= 1 の最小の行)の成分 {i: β_{i,i+row}}"""
    if row is None:
        candidates = [j - i for (i, j) in table.entries if i >= 1]
        if not candidates:
            return {}
        row = min(candidates)
    return {i: v for (i, j), v in sorted(table.entries.items()) if j - i == row and i >= 1}
