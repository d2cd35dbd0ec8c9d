"""一様クラッターとそのクリーク複体

[m] の n 元部分集合(サーキット)からなるクラッター C と、
「n 元部分集合が全てサーキットである集合」を面とする単体的複体 Δ(C) の f 列を扱う。
n 個未満の集合はいずれかのサーキットに含まれるときに面とする。
"""

from __future__ import annotations

import logging
import re
from collections.abc import Sequence
from itertools import combinations

import polars as pl
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from trimcx.builders.matrices import GenericMatrixSpec, IndexSet, all_index_sets, minor
from trimcx.detfacet.formulas import check_sigmas, clique_fvector_formula
from trimcx.ring.polynomial import Polynomial
from trimcx.utils.guards import check_guard

logger = logging.getLogger(__name__)

DEFAULT_MAX_FVECTOR_GROUND = 20

_SPEC_PATTERN = re.compile(r"n=(\d+)\s+m=(\d+)(?:\s+remove=(\S*))?")


class Clutter(BaseModel):
    """[m] 上の n 一様クラッター

    Attributes:
        ground: 頂点数 m
        size: サーキットの大きさ n
        circuits: サーキット(辞書式順)
    """

    model_config = ConfigDict(frozen=True)

    ground: int = Field(..., ge=1, description="頂点数 m")
    size: int = Field(..., ge=1, description="サーキットの大きさ n")
    circuits: tuple[IndexSet, ...] = Field(default=(), description="サーキット")

    @field_validator("circuits")
    @classmethod
    def sort_circuits(cls, v: tuple[IndexSet, ...]) -> tuple[IndexSet, ...]:
        """重複を拒否して辞書式順に並べる"""
        if len({c.indices for c in v}) != len(v):
            raise ValueError("サーキットが重複しています")
        return tuple(sorted(v, key=lambda c: c.indices))

    @model_validator(mode="after")
    def validate_uniform(self) -> Clutter:
        """n <= m と、全てのサーキットが [m] の n 元部分集合であることを検証"""
        if self.size > self.ground:
            raise ValueError(f"n <= m である必要があります: n={self.size}, m={self.ground}")
        for c in self.circuits:
            c.check_within(self.ground, self.size)
        return self

    @classmethod
    def complete_minus(cls, n: int, m: int, removed: Sequence[IndexSet] = ()) -> Clutter:
        """[m] の全ての n 元部分集合から removed を除いたクラッター"""
        drop = {s.indices for s in removed}
        for s in removed:
            s.check_within(m, n)
        return cls(ground=m, size=n, circuits=tuple(c for c in all_index_sets(m, n) if c.indices not in drop))


class ClutterSpec(BaseModel):
    """'n=<n> m=<m> remove=<σ_1;σ_2;...>' 形式のクラッター指定

    Attributes:
        n: サーキットの大きさ
        m: 頂点数
        remove: 除く互いに素な σ
    """

    model_config = ConfigDict(frozen=True)

    n: int = Field(..., ge=1)
    m: int = Field(..., ge=1)
    remove: tuple[IndexSet, ...] = Field(default=())

    @model_validator(mode="after")
    def validate_sigmas(self) -> ClutterSpec:
        check_sigmas(self.n, self.m, self.remove)
        return self

    @classmethod
    def parse(cls, text: str) -> ClutterSpec:
        """文字列から作る

        Raises:
            ValueError: 形式が不正、または σ が条件を満たさない場合
        """
        match = _SPEC_PATTERN.fullmatch(text.strip())
        if not match:
            raise ValueError(f"クラッター指定の形式が不正です: {text!r}(例: 'n=2 m=4 remove=1,2;3,4')")
        n, m, remove = match.groups()
        sigmas = tuple(IndexSet.parse(part) for part in (remove or "").split(";") if part)
        return cls(n=int(n), m=int(m), remove=sigmas)

    def to_string(self) -> str:
        return f"n={self.n} m={self.m} remove={';'.join(s.label() for s in self.remove)}"

    @property
    def r(self) -> int:
        return len(self.remove)

    def clutter(self) -> Clutter:
        return Clutter.complete_minus(self.n, self.m, self.remove)


def clique_fvector_enumerate(c: Clutter, *, max_ground: int = DEFAULT_MAX_FVECTOR_GROUND) -> list[int]:
    """Δ(C) の f 列 (f_0, ..., f_{m-1}) を全列挙で数える

    Raises:
        SizeGuardError: m が max_ground を超える場合
    """
    check_guard("max_fvector_ground", c.ground, max_ground)
    n, m = c.size, c.ground
    circuits = {s.zero_based for s in c.circuits}
    counts = [0] * m

    level: set[tuple[int, ...]] = set()
    for s in range(1, n):
        level = {sub for circuit in circuits for sub in combinations(circuit, s)}
        counts[s - 1] = len(level)
    level = circuits
    counts[n - 1] = len(level)
    for s in range(n + 1, m + 1):
        grown = set()
        for face in level:
            for v in range(face[-1] + 1, m):
                candidate = (*face, v)
                if all(sub in level for sub in combinations(candidate, s - 1)):
                    grown.add(candidate)
        if not grown:
            break
        counts[s - 1] = len(grown)
        level = grown
    logger.debug("f 列: %s", counts)
    return counts


def determinantal_facet_ideal(c: Clutter, spec: GenericMatrixSpec) -> list[Polynomial]:
    """サーキット τ に対応する小行列式 Δ_τ(サーキットの辞書式順)

    Raises:
        ValueError: クラッターと行列の大きさが合わない場合
    """
    if c.size != spec.rows or c.ground != spec.cols:
        raise ValueError(f"クラッター ({c.size}, {c.ground}) と行列 {spec.rows}x{spec.cols} が一致しません")
    return [minor(spec, tau) for tau in c.circuits]


def fvector_frame(spec: ClutterSpec, *, max_ground: int = DEFAULT_MAX_FVECTOR_GROUND) -> pl.DataFrame:
    """二つの閉じた式と全列挙の f_{n+ℓ-2} を並べた表

    列: ell, dim, as_printed, shifted, enumerated, as_printed_mismatch, shifted_mismatch
    """
    enumerated = clique_fvector_enumerate(spec.clutter(), max_ground=max_ground)
    printed = clique_fvector_formula(spec.n, spec.m, spec.r, "as-printed")
    shifted = clique_fvector_formula(spec.n, spec.m, spec.r, "shifted")
    ells = list(range(1, len(printed) + 1))
    dims = [spec.n + ell - 2 for ell in ells]
    counted = [enumerated[d] for d in dims]
    return pl.DataFrame(
        {
            "ell": ells,
            "dim": dims,
            "as_printed": printed,
            "shifted": shifted,
            "enumerated": counted,
            "as_printed_mismatch": [a != e for a, e in zip(printed, counted)],
            "shifted_mismatch": [s != e for s, e in zip(shifted, counted)],
        },
        schema={
            "ell": pl.Int64,
            "dim": pl.Int64,
            "as_printed": pl.Int64,
            "shifted": pl.Int64,
            "enumerated": pl.Int64,
            "as_printed_mismatch": pl.Boolean,
            "shifted_mismatch": pl.Boolean,
        },
    )
