"""次数スライスの線形代数

斉次イデアルの次数dの部分 (I)_d を、生成元と単項式の積
{μ·g | deg μ + deg g = d} が張る係数ベクトル空間として扱う(Macaulay行列)。
列は現れた単項式のみを持つ疎表現で、簡約行階段形を保持して所属判定に使う。
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from typing import Any

from sympy.polys.matrices import DomainMatrix
from sympy.polys.orderings import grevlex

from trimcx.ring.polynomial import Monomial, Polynomial, homogeneous_degree, monomial_basis
from trimcx.utils.guards import check_guard

logger = logging.getLogger(__name__)


class SliceSpan:
    """同じ次数の多項式が張る部分空間の簡約行階段基底

    列(単項式)はgrevlex降順に並べるため、ピボットは各基底元の先頭単項式になる。

    Args:
        ring: sympyの多項式環
        polynomials: 部分空間を張る多項式
        columns: 列に使う単項式(省略時は現れた単項式のみ)
    """

    def __init__(self, ring: Any, polynomials: Sequence[Polynomial], columns: Sequence[Monomial] | None = None) -> None:
        self.ring = ring
        self.domain = ring.domain
        if columns is None:
            seen: set[Monomial] = set()
            for p in polynomials:
                seen.update(p.itermonoms())
            columns = sorted(seen, key=grevlex, reverse=True)
        self.columns: tuple[Monomial, ...] = tuple(columns)
        self._column_index = {m: k for k, m in enumerate(self.columns)}
        self._rows: list[dict[Monomial, Any]] = []
        self._pivots: list[Monomial] = []
        self._reduce_rows(polynomials)

    def _reduce_rows(self, polynomials: Sequence[Polynomial]) -> None:
        dod: dict[int, dict[int, Any]] = {}
        for r, p in enumerate(polynomials):
            row = {}
            for monom, coeff in p.iterterms():
                if monom not in self._column_index:
                    raise ValueError(f"列に含まれない単項式です: {monom}")
                row[self._column_index[monom]] = coeff
            if row:
                dod[r] = row
        if not dod:
            return
        matrix = DomainMatrix.from_dod(dod, (len(polynomials), len(self.columns)), self.domain)
        reduced, pivots = matrix.rref()
        reduced_rows = reduced.to_dod()
        for k, p in enumerate(pivots):
            row = reduced_rows.get(k, {})
            self._rows.append({self.columns[j]: v for j, v in row.items()})
            self._pivots.append(self.columns[p])

    @property
    def rank(self) -> int:
        return len(self._pivots)

    @property
    def pivot_monomials(self) -> tuple[Monomial, ...]:
        return tuple(self._pivots)

    def reduce(self, polynomial: Polynomial) -> Polynomial:
        """部分空間による正規形(ピボット単項式の係数を消した剰余)"""
        residue: dict[Monomial, Any] = dict(polynomial.iterterms())
        for pivot, row in zip(self._pivots, self._rows):
            c = residue.get(pivot)
            if not c:
                continue
            for monom, value in row.items():
                updated = residue.get(monom, self.domain.zero) - c * value
                if updated:
                    residue[monom] = updated
                else:
                    residue.pop(monom, None)
        return self.ring.from_dict(residue)

    def contains(self, polynomial: Polynomial) -> bool:
        return not self.reduce(polynomial)

    def basis(self) -> list[Polynomial]:
        return [self.ring.from_dict(row) for row in self._rows]


def slice_multiples(generators: Sequence[Polynomial], degree: int) -> list[Polynomial]:
    """次数degreeの積 μ·g を列挙する(次数の合わない生成元は除く)"""
    products: list[Polynomial] = []
    for g in generators:
        if not g:
            continue
        e = homogeneous_degree(g)
        if e is None:
            raise ValueError(f"斉次でない生成元です: {g}")
        if e > degree:
            continue
        for mu in monomial_basis(g.ring.ngens, degree - e):
            products.append(g.mul_monom(mu))
    return products


def count_multiples(generators: Sequence[Polynomial], degree: int) -> int:
    total = 0
    for g in generators:
        e = homogeneous_degree(g)
        if g and e is not None and e <= degree:
            total += len(monomial_basis(g.ring.ngens, degree - e))
    return total


def ideal_span(
    ring: Any,
    generators: Sequence[Polynomial],
    degree: int,
    *,
    full_columns: bool = False,
    max_rows: int | None = None,
    guard_name: str = "max_colon_monomials",
) -> SliceSpan:
    """イデアルの次数degreeの部分の簡約基底

    Args:
        ring: sympyの多項式環
        generators: 斉次生成元
        degree: 次数
        full_columns: Trueなら列を R_degree の単項式全体にする
        max_rows: 積の個数の上限(超えるとSizeGuardError)
        guard_name: 上限超過時に報告するガード名

    Returns:
        SliceSpan
    """
    if max_rows is not None:
        check_guard(guard_name, count_multiples(generators, degree), max_rows)
    products = slice_multiples(generators, degree)
    columns = monomial_basis(ring.ngens, degree) if full_columns else None
    span = SliceSpan(ring, products, columns)
    logger.debug("次数 %d のスライス: 積 %d 個, 次元 %d", degree, len(products), span.rank)
    return span
