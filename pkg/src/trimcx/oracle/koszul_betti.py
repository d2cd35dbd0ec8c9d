"""Koszulホモロジーによる次数付きBetti数

β_{i,j}(R/J) = dim_k H_i(K(x_1, ..., x_N) ⊗ R/J)_j。
(R/J)_d の基底には、(J)_d の簡約行階段形のピボットでない単項式(標準単項式)を使う。
"""

from __future__ import annotations

import logging
from functools import lru_cache
from itertools import combinations
from typing import Any

from trimcx.chain.betti import BettiTable
from trimcx.linalg.macaulay import SliceSpan, ideal_span
from trimcx.linalg.matrices import from_entries, rank_over_field
from trimcx.oracle.slices import IdealBasis
from trimcx.ring.polynomial import Monomial, monomial_basis
from trimcx.utils.guards import check_guard

logger = logging.getLogger(__name__)

DEFAULT_MAX_VARS = 10
DEFAULT_MAX_DEGREE = 12


class _Quotient:
    """R/J の次数ごとの標準単項式と正規形"""

    def __init__(self, gens: IdealBasis) -> None:
        self.gens = gens
        self.ring = gens.ring.sympy_ring
        self.nvars = gens.ring.ngens
        self._spans: dict[int, SliceSpan] = {}
        self._standard: dict[int, tuple[Monomial, ...]] = {}

    def span(self, d: int) -> SliceSpan:
        if d not in self._spans:
            self._spans[d] = ideal_span(self.ring, list(self.gens.generators), d, full_columns=True)
        return self._spans[d]

    def standard(self, d: int) -> tuple[Monomial, ...]:
        if d < 0:
            return ()
        if d not in self._standard:
            pivots = set(self.span(d).pivot_monomials)
            self._standard[d] = tuple(m for m in monomial_basis(self.nvars, d) if m not in pivots)
        return self._standard[d]

    def times_variable(self, monomial: Monomial, k: int) -> list[tuple[Monomial, Any]]:
        """x_k·μ の正規形の項"""
        exponents = list(monomial)
        exponents[k] += 1
        product = self.ring.from_dict({tuple(exponents): self.ring.domain.one})
        return list(self.span(sum(exponents)).reduce(product).iterterms())


@lru_cache(maxsize=64)
def _subsets(n: int, i: int) -> tuple[tuple[int, ...], ...]:
    return tuple(combinations(range(n), i))


def _koszul_rank(quotient: _Quotient, i: int, j: int) -> int:
    """∂_i: Λ^i ⊗ (R/J)_{j-i} -> Λ^{i-1} ⊗ (R/J)_{j-i+1} のランク"""
    n = quotient.nvars
    if i < 1 or i > n or j - i < 0:
        return 0
    sources = quotient.standard(j - i)
    targets = quotient.standard(j - i + 1)
    if not sources or not targets:
        return 0
    target_subsets = {t: r for r, t in enumerate(_subsets(n, i - 1))}
    target_monomials = {m: r for r, m in enumerate(targets)}
    width = len(targets)
    entries: dict[tuple[int, int], Any] = {}
    column = 0
    for subset in _subsets(n, i):
        for mu in sources:
            for pos, k in enumerate(subset):
                face = target_subsets[subset[:pos] + subset[pos + 1 :]]
                for monom, coeff in quotient.times_variable(mu, k):
                    key = (face * width + target_monomials[monom], column)
                    value = entries.get(key, quotient.ring.domain.zero) + (coeff if pos % 2 == 0 else -coeff)
                    entries[key] = value
            column += 1
    matrix = from_entries(quotient.ring.domain, (len(target_subsets) * width, column), entries)
    return rank_over_field(matrix)


def koszul_betti(
    gens: IdealBasis,
    imax: int | None = None,
    dmax: int | None = None,
    *,
    max_row: int | None = None,
    max_vars: int = DEFAULT_MAX_VARS,
    max_degree: int = DEFAULT_MAX_DEGREE,
) -> BettiTable:
    """R/J のBetti数 β_{i,j}(i <= imax、j <= dmax)

    変数の数の既定の上限 10 は、一般 5 x 5 交代行列から生成元を取り除いた例(変数10個)が
    そのまま検証できる大きさとして決めている。

    Args:
        gens: J の生成系
        imax: ホモロジー次数の上限(省略時は変数の数)
        dmax: 内部次数の上限(省略時は最大生成元次数 + 変数の数、max_degree で頭打ち)
        max_row: 指定すると j - i <= max_row の成分だけを計算する
        max_vars: 変数の数の上限
        max_degree: dmax の上限

    Returns:
        計算した範囲のBetti表

    Raises:
        SizeGuardError: 変数の数または dmax が上限を超える場合
    """
    n = gens.ring.ngens
    check_guard("max_oracle_vars", n, max_vars)
    if dmax is None:
        dmax = min(gens.max_degree + n, max_degree)
    check_guard("max_oracle_degree", dmax, max_degree)
    imax = n if imax is None else min(imax, n)

    quotient = _Quotient(gens)
    ranks: dict[tuple[int, int], int] = {}

    def rank(i: int, j: int) -> int:
        if (i, j) not in ranks:
            ranks[(i, j)] = _koszul_rank(quotient, i, j)
        return ranks[(i, j)]

    counts: dict[tuple[int, int], int] = {}
    for i in range(imax + 1):
        for j in range(i, dmax + 1):
            if max_row is not None and j - i > max_row:
                continue
            dim = len(_subsets(n, i)) * len(quotient.standard(j - i))
            if dim == 0:
                continue
            counts[(i, j)] = dim - rank(i, j) - rank(i + 1, j)
    logger.debug("Koszulオラクル: 変数 %d, i <= %d, j <= %d", n, imax, dmax)
    return BettiTable.from_counts(counts)
