"""行列の入力型

添字集合(IndexSet)、交代行列(SkewMatrix)、一般行列の指定(GenericMatrixSpec)と
極大小行列式を定義する。添字は外部表現では1始まり。
"""

from __future__ import annotations

from itertools import combinations
from typing import Any

from pydantic import BaseModel, ConfigDict, Field, PrivateAttr, field_validator, model_validator

from trimcx.linalg.matrices import PolyMatrix, nonzero_entries, poly_matrix, submatrix
from trimcx.ring.field import CoefficientField
from trimcx.ring.polynomial import Polynomial, PolyRing, homogeneous_degree


class IndexSetError(ValueError):
    """添字集合が不正な場合のエラー"""


class SkewMatrixError(ValueError):
    """交代行列の条件を満たさない場合のエラー"""


class IndexSet(BaseModel):
    """狭義単調増加な正の整数列 σ = (σ_1 < ... < σ_n)

    Attributes:
        indices: 1始まりの添字
    """

    model_config = ConfigDict(frozen=True)

    indices: tuple[int, ...] = Field(..., description="1始まりの添字")

    @field_validator("indices")
    @classmethod
    def validate_indices(cls, v: tuple[int, ...]) -> tuple[int, ...]:
        """正で狭義単調増加であることを検証"""
        if any(i < 1 for i in v):
            raise IndexSetError(f"添字は1以上である必要があります: {v}")
        if any(a >= b for a, b in zip(v, v[1:])):
            raise IndexSetError(f"添字は狭義単調増加である必要があります: {v}")
        return v

    @classmethod
    def of(cls, *indices: int) -> IndexSet:
        return cls(indices=tuple(indices))

    @classmethod
    def parse(cls, text: str) -> IndexSet:
        """'1,3' 形式の文字列から作る

        Raises:
            IndexSetError: 数値でない要素を含む、または単調でない場合
        """
        try:
            values = tuple(int(t) for t in text.replace(" ", "").split(",") if t)
        except ValueError as e:
            raise IndexSetError(f"添字集合の形式が不正です: {text!r}") from e
        return cls(indices=values)

    @classmethod
    def from_zero_based(cls, indices: tuple[int, ...]) -> IndexSet:
        return cls(indices=tuple(i + 1 for i in indices))

    @property
    def size(self) -> int:
        return len(self.indices)

    @property
    def zero_based(self) -> tuple[int, ...]:
        return tuple(i - 1 for i in self.indices)

    def check_within(self, m: int, size: int | None = None) -> None:
        """全ての添字が m 以下で、size 指定時は要素数が一致することを検証

        Raises:
            IndexSetError: 条件を満たさない場合
        """
        if self.indices and self.indices[-1] > m:
            raise IndexSetError(f"添字が範囲外です: {self.indices}(上限 {m})")
        if size is not None and self.size != size:
            raise IndexSetError(f"添字集合の大きさが不正です: {self.size} != {size}")

    def is_disjoint(self, other: IndexSet) -> bool:
        return not set(self.indices) & set(other.indices)

    def label(self) -> str:
        return ",".join(str(i) for i in self.indices)


def all_index_sets(m: int, n: int) -> list[IndexSet]:
    """[m] の n 元部分集合(辞書式順)"""
    return [IndexSet.from_zero_based(c) for c in combinations(range(m), n)]


def generic_variable_name(prefix: str, i: int, j: int, compact: bool) -> str:
    """x{i}{j}(compact)または x_i_j 形式の変数名(1始まり)"""
    return f"{prefix}{i}{j}" if compact else f"{prefix}_{i}_{j}"


class SkewMatrix(BaseModel):
    """交代行列 X(Xᵀ = -X、対角成分0)

    Attributes:
        ring: 多項式環
        matrix: size x size のPolyMatrix
    """

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    ring: PolyRing
    matrix: Any = Field(..., description="PolyMatrix")

    @model_validator(mode="after")
    def validate_skew(self) -> SkewMatrix:
        """正方で交代性が厳密に成り立つことを検証"""
        rows, cols = self.matrix.shape
        if rows != cols:
            raise SkewMatrixError(f"正方行列である必要があります: {self.matrix.shape}")
        dod = self.matrix.to_dod()
        for i, j, value in nonzero_entries(self.matrix):
            if i == j:
                raise SkewMatrixError(f"対角成分は0である必要があります: ({i + 1}, {i + 1})")
            if dod.get(j, {}).get(i, self.ring.zero) != -value:
                raise SkewMatrixError(f"交代行列ではありません: ({i + 1}, {j + 1})")
        return self

    @classmethod
    def from_rows(cls, ring: PolyRing, rows: list[list[Polynomial | str | int]]) -> SkewMatrix:
        return cls(ring=ring, matrix=poly_matrix(ring, rows, len(rows)))

    @classmethod
    def generic(cls, n: int, field: CoefficientField | None = None, prefix: str = "x") -> SkewMatrix:
        """変数 x_{ij}(i < j)を上三角に並べた一般交代行列

        n <= 9 のときは x12、それ以外は x_1_2 の形式の変数名を使う。
        """
        if n < 1:
            raise SkewMatrixError(f"サイズは1以上である必要があります: {n}")
        compact = n <= 9
        names = [generic_variable_name(prefix, i + 1, j + 1, compact) for i, j in combinations(range(n), 2)]
        ring = PolyRing(variables=tuple(names), field=field or CoefficientField.rationals())
        gens = iter(ring.gens)
        rows: list[list[Polynomial | str | int]] = [[0] * n for _ in range(n)]
        for i, j in combinations(range(n), 2):
            g = next(gens)
            rows[i][j] = g
            rows[j][i] = -g
        return cls.from_rows(ring, rows)

    @property
    def size(self) -> int:
        return int(self.matrix.shape[0])

    def entry(self, i: int, j: int) -> Polynomial:
        """0始まりの (i, j) 成分"""
        value = self.matrix.to_dod().get(i, {}).get(j)
        return self.ring.zero if value is None else value

    def remove(self, index: int) -> SkewMatrix:
        """1始まりの第index行・列を除いた交代行列"""
        keep = [k for k in range(self.size) if k != index - 1]
        return SkewMatrix(ring=self.ring, matrix=submatrix(self.matrix, keep, keep))


class GenericMatrixSpec(BaseModel):
    """n x m 行列の指定(n <= m)

    entries を省略すると一般行列 (x_{ij}) を使う。その場合の変数名は
    n, m <= 9 なら x11、それ以外は x_1_1。

    Attributes:
        rows: 行数 n
        cols: 列数 m
        field: 係数体
        entries: 成分の多項式文字列(行ごと)。指定時は variables が必須
        variables: entries を使う場合の変数名
    """

    model_config = ConfigDict(frozen=True)

    rows: int = Field(..., ge=1, description="行数 n")
    cols: int = Field(..., ge=1, description="列数 m")
    field: CoefficientField = Field(default_factory=CoefficientField.rationals, description="係数体")
    entries: tuple[tuple[str, ...], ...] | None = Field(default=None, description="成分")
    variables: tuple[str, ...] | None = Field(default=None, description="変数名")

    _ring: PolyRing | None = PrivateAttr(default=None)
    _matrix: Any = PrivateAttr(default=None)

    @model_validator(mode="after")
    def validate_shape(self) -> GenericMatrixSpec:
        """n <= m と成分の形を検証"""
        if self.rows > self.cols:
            raise ValueError(f"n <= m である必要があります: n={self.rows}, m={self.cols}")
        if self.entries is not None:
            if self.variables is None:
                raise ValueError("entriesを指定する場合はvariablesが必須です")
            if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
                raise ValueError(f"成分の形が {self.rows}x{self.cols} と一致しません")
        return self

    def model_post_init(self, context: Any, /) -> None:
        if self.entries is None:
            compact = self.rows <= 9 and self.cols <= 9
            names = tuple(
                generic_variable_name("x", i + 1, j + 1, compact) for i in range(self.rows) for j in range(self.cols)
            )
            ring = PolyRing(variables=names, field=self.field)
            gens = ring.gens
            rows = [[gens[i * self.cols + j] for j in range(self.cols)] for i in range(self.rows)]
            self._ring = ring
            self._matrix = poly_matrix(ring, rows, self.cols)
        else:
            assert self.variables is not None
            ring = PolyRing(variables=self.variables, field=self.field)
            self._ring = ring
            self._matrix = poly_matrix(ring, [list(r) for r in self.entries], self.cols)

    @property
    def ring(self) -> PolyRing:
        assert self._ring is not None
        return self._ring

    @property
    def matrix(self) -> PolyMatrix:
        return self._matrix

    def entry(self, i: int, j: int) -> Polynomial:
        """0始まりの (i, j) 成分"""
        value = self._matrix.to_dod().get(i, {}).get(j)
        return self.ring.zero if value is None else value

    def entry_degree(self) -> int:
        """全成分に共通の次数(一般行列では1)

        Raises:
            ValueError: 成分が斉次でない、または次数が揃っていない場合
        """
        degrees = {homogeneous_degree(v) for _, _, v in nonzero_entries(self._matrix)}
        if not degrees:
            return 1
        if None in degrees or len(degrees) != 1:
            raise ValueError(f"成分は同じ次数の斉次多項式である必要があります: {degrees}")
        return int(next(iter(degrees)))


def minor(spec: GenericMatrixSpec, tau: IndexSet) -> Polynomial:
    """列 τ からなる n x n 小行列式 Δ_τ

    Raises:
        IndexSetError: τ の大きさが n でない、または m を超える添字を含む場合
    """
    tau.check_within(spec.cols, spec.rows)
    block = submatrix(spec.matrix, list(range(spec.rows)), list(tau.zero_based))
    return determinant(block)


def determinant(m: PolyMatrix) -> Polynomial:
    """多項式行列の行列式(分数なしのBareiss消去)"""
    if m.shape[0] != m.shape[1]:
        raise ValueError(f"正方行列である必要があります: {m.shape}")
    if m.shape[0] == 0:
        return m.domain.one
    return m.to_dense().det()


def maximal_minors(spec: GenericMatrixSpec) -> list[Polynomial]:
    """全ての極大小行列式(τ の辞書式順)"""
    return [minor(spec, tau) for tau in all_index_sets(spec.cols, spec.rows)]
