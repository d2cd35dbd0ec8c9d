"""厳密な線形方程式の求解

solve_scalar は係数体上の a·X = b を、solve_poly_homogeneous は多項式環上の
斉次方程式 a·X = b を単項式係数についての連立方程式に直して解く。
解が存在しない場合はNoneを返す(例外にはしない)。
"""

from __future__ import annotations

import logging
import random
from collections.abc import Sequence
from typing import Any

from sympy.polys.matrices import DomainMatrix

from trimcx.linalg.matrices import (
    PolyMatrix,
    ScalarMatrix,
    ShapeMismatchError,
    column,
    from_entries,
    nonzero_entries,
)
from trimcx.ring.polynomial import Monomial, monomial_basis
from trimcx.utils.guards import check_guard

logger = logging.getLogger(__name__)

DEFAULT_MAX_UNKNOWNS = 60000
_WIDENING_ROUNDS = 2


def _solve_augmented(
    domain: Any,
    rows: dict[int, dict[int, Any]],
    nrows: int,
    nunknowns: int,
    nrhs: int,
    rng: random.Random | None,
) -> dict[int, dict[int, Any]] | None:
    """拡大係数行列 [A | B] を簡約して解 X を {未知数: {右辺列: 値}} で返す

    自由変数は rng があれば乱数、なければ0を割り当てる。
    """
    if nrows == 0:
        return {}
    aug = DomainMatrix.from_dod(rows, (nrows, nunknowns + nrhs), domain)
    reduced, pivots = aug.rref()
    if any(p >= nunknowns for p in pivots):
        return None
    reduced_rows = reduced.to_dod()
    pivot_set = set(pivots)
    free_values: dict[int, list[Any]] = {}
    if rng is not None:
        free_values = {
            f: [domain.convert(rng.randint(1, 97)) for _ in range(nrhs)] for f in range(nunknowns) if f not in pivot_set
        }
    solution: dict[int, dict[int, Any]] = {}
    for f, values in free_values.items():
        solution[f] = {c: v for c, v in enumerate(values) if v}
    for k, p in enumerate(pivots):
        row = reduced_rows.get(k, {})
        values = {}
        for c in range(nrhs):
            value = row.get(nunknowns + c, domain.zero)
            for f, free in free_values.items():
                coeff = row.get(f)
                if coeff:
                    value = value - coeff * free[c]
            if value:
                values[c] = value
        solution[p] = values
    return solution


def solve_scalar(a: ScalarMatrix, b: ScalarMatrix, *, seed: int | None = None) -> ScalarMatrix | None:
    """係数体上で a·X = b を解く

    Args:
        a: 係数行列(r x n)
        b: 右辺(r x k)
        seed: 指定すると自由変数に乱数を割り当てる(解の非一意性の検証用)

    Returns:
        a·X = b を満たす X(n x k)。解がなければNone

    Raises:
        ShapeMismatchError: a.rows != b.rows の場合
    """
    if a.shape[0] != b.shape[0]:
        raise ShapeMismatchError(f"行数が一致しません: {a.shape} と {b.shape}")
    nrows, nunknowns = a.shape
    nrhs = b.shape[1]
    rows: dict[int, dict[int, Any]] = {}
    for i, j, value in nonzero_entries(a):
        rows.setdefault(i, {})[j] = value
    for i, j, value in nonzero_entries(b):
        rows.setdefault(i, {})[nunknowns + j] = value
    rng = random.Random(seed) if seed is not None else None
    solution = _solve_augmented(a.domain, rows, nrows, nunknowns, nrhs, rng)
    if solution is None:
        return None
    entries = {(j, c): value for j, values in solution.items() for c, value in values.items()}
    return from_entries(a.domain, (nunknowns, nrhs), entries)


def _divide(monomial: Monomial, divisor: Monomial) -> Monomial | None:
    quotient = tuple(m - d for m, d in zip(monomial, divisor))
    if any(e < 0 for e in quotient):
        return None
    return quotient


def _multiply(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def _quotient_supports(
    a_cols: dict[int, dict[int, Any]],
    active: dict[int, int],
    row_monomials: dict[int, set[Monomial]],
) -> dict[int, set[Monomial]]:
    """各未知数 X_j の候補単項式 ν/t(ν は行iの単項式、t は a_ij の単項式)"""
    supports: dict[int, set[Monomial]] = {j: set() for j in active}
    for j, degree in active.items():
        for i, aij in a_cols[j].items():
            for nu in row_monomials.get(i, ()):
                for t in aij.itermonoms():
                    mu = _divide(nu, t)
                    if mu is not None and sum(mu) == degree:
                        supports[j].add(mu)
    return supports


def _solve_with_supports(
    ring: Any,
    a_cols: dict[int, dict[int, Any]],
    target: dict[int, Any],
    supports: dict[int, set[Monomial]],
    rng: random.Random | None,
) -> dict[int, Any] | None:
    domain = ring.domain
    unknowns = [(j, mu) for j in sorted(supports) for mu in sorted(supports[j])]
    equation_index: dict[tuple[int, Monomial], int] = {}
    rows: dict[int, dict[int, Any]] = {}

    def row_of(i: int, nu: Monomial) -> int:
        key = (i, nu)
        if key not in equation_index:
            equation_index[key] = len(equation_index)
        return equation_index[key]

    for col, (j, mu) in enumerate(unknowns):
        for i, aij in a_cols[j].items():
            for t, coeff in aij.iterterms():
                r = row_of(i, _multiply(t, mu))
                row = rows.setdefault(r, {})
                value = row.get(col, domain.zero) + coeff
                if value:
                    row[col] = value
                else:
                    row.pop(col, None)
    nunknowns = len(unknowns)
    for i, bi in target.items():
        for nu, coeff in bi.iterterms():
            rows.setdefault(row_of(i, nu), {})[nunknowns] = coeff

    solution = _solve_augmented(domain, rows, len(equation_index), nunknowns, 1, rng)
    if solution is None:
        return None
    terms: dict[int, dict[Monomial, Any]] = {}
    for col, values in solution.items():
        value = values.get(0)
        if value:
            j, mu = unknowns[col]
            terms.setdefault(j, {})[mu] = value
    return {j: ring.from_dict(t) for j, t in terms.items()}


def _solve_column(
    ring: Any,
    a_cols: dict[int, dict[int, Any]],
    target: dict[int, Any],
    active: dict[int, int],
    rng: random.Random | None,
    max_unknowns: int,
) -> dict[int, Any] | None:
    row_monomials = {i: set(bi.itermonoms()) for i, bi in target.items()}
    supports = _quotient_supports(a_cols, active, row_monomials)
    for round_index in range(_WIDENING_ROUNDS + 1):
        size = sum(len(s) for s in supports.values())
        check_guard("max_lift_unknowns", size, max_unknowns)
        solved = _solve_with_supports(ring, a_cols, target, supports, rng)
        if solved is not None:
            return solved
        if round_index == _WIDENING_ROUNDS:
            break
        # 台を閉包で広げる: a·(現在の候補) に現れる単項式から商を取り直す
        for j, mus in supports.items():
            for i, aij in a_cols[j].items():
                monomials = row_monomials.setdefault(i, set())
                for t in aij.itermonoms():
                    monomials.update(_multiply(t, mu) for mu in mus)
        widened = _quotient_supports(a_cols, active, row_monomials)
        if all(widened[j] == supports[j] for j in supports):
            break
        logger.debug("持ち上げの候補単項式を拡張します: %d -> %d", size, sum(len(s) for s in widened.values()))
        supports = widened

    full = {j: set(monomial_basis(ring.ngens, degree)) for j, degree in active.items()}
    size = sum(len(s) for s in full.values())
    check_guard("max_lift_unknowns", size, max_unknowns)
    logger.debug("次数スライス全体で持ち上げを解きます: 未知数 %d", size)
    return _solve_with_supports(ring, a_cols, target, full, rng)


def solve_poly_homogeneous(
    a: PolyMatrix,
    b: PolyMatrix,
    col_degrees_a: Sequence[int],
    col_degrees_b: Sequence[int],
    *,
    seed: int | None = None,
    max_unknowns: int = DEFAULT_MAX_UNKNOWNS,
) -> PolyMatrix | None:
    """多項式環上の斉次方程式 a·X = b を解く

    X の (j, c) 成分は次数 col_degrees_b[c] - col_degrees_a[j] の斉次多項式
    (負なら0)。列ごとに、未知の単項式係数についての連立方程式を
    b の台から見積もった候補単項式で解き、不整合なら候補を広げ、
    最後は次数スライス全体で解く。

    Args:
        a: 係数行列(r x n)
        b: 右辺(r x k)
        col_degrees_a: a の列(定義域の生成元)の次数
        col_degrees_b: b の列の次数
        seed: 指定すると自由変数に乱数を割り当て、異なる持ち上げを得る
        max_unknowns: 1列あたりの未知数の上限

    Returns:
        a·X = b を厳密に満たす X(n x k)。解がなければNone

    Raises:
        ShapeMismatchError: 形・次数列の長さが不整合な場合
        SizeGuardError: 未知数が上限を超える場合
    """
    if a.shape[0] != b.shape[0]:
        raise ShapeMismatchError(f"行数が一致しません: {a.shape} と {b.shape}")
    if len(col_degrees_a) != a.shape[1] or len(col_degrees_b) != b.shape[1]:
        raise ShapeMismatchError("列の次数の個数が行列の列数と一致しません")
    ring = a.domain.ring
    rng = random.Random(seed) if seed is not None else None
    a_cols = {j: column(a, j) for j in range(a.shape[1])}
    entries: dict[tuple[int, int], Any] = {}
    for c in range(b.shape[1]):
        target = column(b, c)
        if not target:
            continue
        active = {
            j: col_degrees_b[c] - col_degrees_a[j]
            for j in range(a.shape[1])
            if a_cols[j] and col_degrees_b[c] - col_degrees_a[j] >= 0
        }
        if not active:
            return None
        solved = _solve_column(ring, a_cols, target, active, rng, max_unknowns)
        if solved is None:
            logger.debug("列 %d の持ち上げは不整合です", c)
            return None
        for j, value in solved.items():
            entries[(j, c)] = value
    return from_entries(a.domain, (a.shape[1], b.shape[1]), entries)
