"""次数を打ち切ったイデアルの比較

斉次イデアルの次数 d の部分を、単項式と生成元の積が張る係数ベクトル空間として
直接計算する。Gröbner基底は使わない。
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from typing import Any

from pydantic import BaseModel, ConfigDict, Field, PrivateAttr, model_validator

from trimcx.linalg.macaulay import SliceSpan, count_multiples, ideal_span
from trimcx.linalg.matrices import ScalarMatrix, from_entries, kernel_basis
from trimcx.ring.polynomial import Polynomial, PolyRing, homogeneous_degree, monomial_basis
from trimcx.utils.guards import check_guard

logger = logging.getLogger(__name__)

DEFAULT_MAX_COLON_MONOMIALS = 4000


class IdealBasis(BaseModel):
    """斉次イデアルの生成系

    Attributes:
        ring: 多項式環
        generators: 非零の斉次多項式
    """

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    ring: PolyRing
    generators: tuple[Polynomial, ...] = Field(..., description="斉次生成元")

    @model_validator(mode="after")
    def validate_generators(self) -> IdealBasis:
        for k, g in enumerate(self.generators):
            if not self.ring.owns(g):
                raise ValueError(f"生成元 {k + 1} の環が一致しません")
            if not g or homogeneous_degree(g) is None:
                raise ValueError(f"生成元 {k + 1} は非零の斉次多項式である必要があります")
        return self

    @classmethod
    def from_polynomials(cls, ring: PolyRing, polynomials: Sequence[Polynomial]) -> IdealBasis:
        """零を捨てて生成系を作る"""
        return cls(ring=ring, generators=tuple(p for p in polynomials if p))

    @property
    def max_degree(self) -> int:
        return max((homogeneous_degree(g) or 0 for g in self.generators), default=0)

    def degrees(self) -> list[int]:
        return [homogeneous_degree(g) or 0 for g in self.generators]


class DegreeSlice(BaseModel):
    """イデアル(または部分空間)の次数 d の部分

    Attributes:
        degree: 次数 d
        basis: 列が基底の係数ベクトル(行は次数 d の単項式、grevlex降順)
    """

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    degree: int
    basis: Any = Field(..., description="ScalarMatrix")

    _span: SliceSpan | None = PrivateAttr(default=None)

    @classmethod
    def from_span(cls, ring: PolyRing, degree: int, span: SliceSpan) -> DegreeSlice:
        monomials = monomial_basis(ring.ngens, degree)
        row_index = {m: k for k, m in enumerate(monomials)}
        entries = {}
        for c, p in enumerate(span.basis()):
            for monom, coeff in p.iterterms():
                entries[(row_index[monom], c)] = coeff
        basis = from_entries(ring.domain, (len(monomials), span.rank), entries)
        out = cls(degree=degree, basis=basis)
        out._span = span
        return out

    @property
    def dimension(self) -> int:
        return int(self.basis.shape[1])

    def contains(self, polynomial: Polynomial) -> bool:
        """polynomial がこの部分空間に含まれるか(次数の異なる非零多項式は含まれない)"""
        if not polynomial:
            return True
        if homogeneous_degree(polynomial) != self.degree:
            return False
        assert self._span is not None
        return self._span.contains(polynomial)

    def polynomials(self) -> list[Polynomial]:
        assert self._span is not None
        return self._span.basis()

    def is_subspace_of(self, other: DegreeSlice) -> bool:
        return all(other.contains(p) for p in self.polynomials())


def ideal_slice(gens: IdealBasis, d: int, *, max_rows: int | None = None) -> DegreeSlice:
    """(gens)_d の基底

    Raises:
        ValueError: d < 0 の場合
    """
    if d < 0:
        raise ValueError(f"次数は非負である必要があります: {d}")
    span = ideal_span(gens.ring.sympy_ring, list(gens.generators), d, full_columns=True, max_rows=max_rows)
    return DegreeSlice.from_span(gens.ring, d, span)


def ideal_equal_upto(a: IdealBasis, b: IdealBasis, dmax: int) -> bool:
    """次数 dmax 以下で (a) と (b) が一致するか

    次数 dmax 以下の各生成元が相手のイデアルに含まれることを確かめる。
    これは全ての d <= dmax で次数 d の部分が一致することと同値。
    """
    for left, right in ((a, b), (b, a)):
        for g in left.generators:
            d = homogeneous_degree(g)
            if d is None or d > dmax:
                continue
            if not ideal_slice(right, d).contains(g):
                logger.debug("次数 %d の生成元が相手のイデアルに含まれません", d)
                return False
    return True


def colon_slice(
    kprime: IdealBasis,
    k0gen: Polynomial,
    d: int,
    *,
    max_monomials: int = DEFAULT_MAX_COLON_MONOMIALS,
) -> DegreeSlice:
    """{r ∈ R_d : r·k0gen ∈ K'} の基底

    各単項式 μ に対し μ·k0gen の (K')_{d+e} による正規形を求め、その線形関係を核として取る。

    Raises:
        ValueError: d < 0、または k0gen が零・非斉次の場合
        SizeGuardError: 単項式や積の個数が上限を超える場合
    """
    if d < 0:
        raise ValueError(f"次数は非負である必要があります: {d}")
    e = homogeneous_degree(k0gen)
    if not k0gen or e is None:
        raise ValueError("k0gen は非零の斉次多項式である必要があります")
    ring = kprime.ring
    monomials = monomial_basis(ring.ngens, d)
    check_guard("max_colon_monomials", len(monomials), max_monomials)
    check_guard("max_colon_monomials", count_multiples(list(kprime.generators), d + e), max_monomials)

    span = ideal_span(ring.sympy_ring, list(kprime.generators), d + e, full_columns=True)
    target_monomials = monomial_basis(ring.ngens, d + e)
    row_index = {m: k for k, m in enumerate(target_monomials)}
    entries = {}
    for c, mu in enumerate(monomials):
        residue = span.reduce(k0gen.mul_monom(mu))
        for monom, coeff in residue.iterterms():
            entries[(row_index[monom], c)] = coeff
    matrix: ScalarMatrix = from_entries(ring.domain, (len(target_monomials), len(monomials)), entries)
    kernel = kernel_basis(matrix)
    polys = [ring.from_terms({monomials[c]: value for c, value in vector.items()}) for vector in kernel]
    result = SliceSpan(ring.sympy_ring, polys, monomials)
    logger.debug("次数 %d のコロン: 次元 %d", d, result.rank)
    return DegreeSlice.from_span(ring, d, result)
