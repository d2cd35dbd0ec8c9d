"""スカラー行列と多項式行列

ScalarMatrixは係数体上、PolyMatrixは多項式環上のsympy DomainMatrix(疎形式)。
ブロック組立て・部分行列・定数項への還元・ランダム点での特殊化を提供する。
"""

from __future__ import annotations

import random
from collections.abc import Iterator, Mapping, Sequence
from typing import Any

from sympy.polys.matrices import DomainMatrix

from trimcx.ring.field import DEFAULT_PRIME
from trimcx.ring.polynomial import Polynomial, PolyRing, RingMismatchError, specialize

# 係数体上の行列
ScalarMatrix = DomainMatrix
# 多項式環上の行列(全要素が同じ環)
PolyMatrix = DomainMatrix

Entries = Mapping[tuple[int, int], Any]


class ShapeMismatchError(ValueError):
    """行列の形が演算と整合しない場合のエラー"""


def from_entries(domain: Any, shape: tuple[int, int], entries: Entries | None = None) -> DomainMatrix:
    """(行, 列) -> 要素 の辞書から疎行列を作る。零要素は捨てる"""
    rows, cols = shape
    dod: dict[int, dict[int, Any]] = {}
    for (i, j), value in (entries or {}).items():
        if not 0 <= i < rows or not 0 <= j < cols:
            raise ShapeMismatchError(f"要素の位置が行列の範囲外です: ({i}, {j}) / {shape}")
        if value:
            dod.setdefault(i, {})[j] = value
    return DomainMatrix.from_dod(dod, shape, domain)


def zero_matrix(domain: Any, shape: tuple[int, int]) -> DomainMatrix:
    return DomainMatrix.from_dod({}, shape, domain)


def poly_matrix(
    ring: PolyRing, rows: Sequence[Sequence[Polynomial | str | int]], ncols: int | None = None
) -> PolyMatrix:
    """行のリストから多項式行列を作る

    Args:
        ring: 多項式環
        rows: 各行の要素(多項式、文字列、整数)
        ncols: 列数。rowsが空のとき必須

    Returns:
        ring上の疎なPolyMatrix
    """
    width = ncols if ncols is not None else (len(rows[0]) if rows else 0)
    entries: dict[tuple[int, int], Any] = {}
    for i, row in enumerate(rows):
        if len(row) != width:
            raise ShapeMismatchError(f"行の長さが一致しません: {len(row)} != {width}")
        for j, value in enumerate(row):
            entries[(i, j)] = _coerce_poly(ring, value)
    return from_entries(ring.poly_domain, (len(rows), width), entries)


def _coerce_poly(ring: PolyRing, value: Polynomial | str | int) -> Polynomial:
    if isinstance(value, str):
        return ring.parse(value)
    if isinstance(value, int):
        return ring.constant(value)
    if not ring.owns(value):
        raise RingMismatchError(f"環が一致しません: {value.ring}")
    return value


def scalar_matrix(domain: Any, rows: Sequence[Sequence[Any]], ncols: int | None = None) -> ScalarMatrix:
    """行のリストから係数体上の行列を作る"""
    width = ncols if ncols is not None else (len(rows[0]) if rows else 0)
    entries = {(i, j): domain.convert(v) for i, row in enumerate(rows) for j, v in enumerate(row)}
    return from_entries(domain, (len(rows), width), entries)


def nonzero_entries(m: DomainMatrix) -> Iterator[tuple[int, int, Any]]:
    """非零要素を(行, 列, 値)で列挙する"""
    for i, row in m.to_dod().items():
        for j, value in row.items():
            if value:
                yield i, j, value


def entry(m: DomainMatrix, i: int, j: int) -> Any:
    value = m.to_dod().get(i, {}).get(j)
    return m.domain.zero if value is None else value


def column(m: DomainMatrix, j: int) -> dict[int, Any]:
    return {i: row[j] for i, row in m.to_dod().items() if row.get(j)}


def is_zero_matrix(m: DomainMatrix) -> bool:
    return not any(True for _ in nonzero_entries(m))


def matmul(a: DomainMatrix, b: DomainMatrix) -> DomainMatrix:
    """行列積 a·b(疎形式のまま計算)

    Raises:
        ShapeMismatchError: a.cols != b.rows の場合
        RingMismatchError: ドメインが異なる場合
    """
    if a.shape[1] != b.shape[0]:
        raise ShapeMismatchError(f"行列積の形が不整合です: {a.shape} x {b.shape}")
    if a.domain != b.domain:
        raise RingMismatchError(f"ドメインが一致しません: {a.domain} と {b.domain}")
    return a.to_sparse().matmul(b.to_sparse())


def add(a: DomainMatrix, b: DomainMatrix) -> DomainMatrix:
    if a.shape != b.shape:
        raise ShapeMismatchError(f"行列和の形が不整合です: {a.shape} + {b.shape}")
    if a.domain != b.domain:
        raise RingMismatchError(f"ドメインが一致しません: {a.domain} と {b.domain}")
    return a.to_sparse() + b.to_sparse()


def negate(m: DomainMatrix) -> DomainMatrix:
    return -m


def transpose(m: DomainMatrix) -> DomainMatrix:
    return m.transpose()


def submatrix(m: DomainMatrix, rows: Sequence[int], cols: Sequence[int]) -> DomainMatrix:
    """指定した行・列(この順序)からなる部分行列"""
    row_pos = {r: k for k, r in enumerate(rows)}
    col_pos = {c: k for k, c in enumerate(cols)}
    entries = {}
    for i, j, value in nonzero_entries(m):
        if i in row_pos and j in col_pos:
            entries[(row_pos[i], col_pos[j])] = value
    return from_entries(m.domain, (len(rows), len(cols)), entries)


def block_matrix(
    domain: Any,
    blocks: Sequence[Sequence[DomainMatrix | None]],
    row_sizes: Sequence[int],
    col_sizes: Sequence[int],
) -> DomainMatrix:
    """ブロック行列を組み立てる

    Args:
        domain: 要素ドメイン
        blocks: blocks[r][c] はサイズ row_sizes[r] x col_sizes[c] の行列、またはNone(零ブロック)
        row_sizes: ブロック行の高さ
        col_sizes: ブロック列の幅

    Returns:
        組み立てた疎行列
    """
    row_offsets = [sum(row_sizes[:k]) for k in range(len(row_sizes))]
    col_offsets = [sum(col_sizes[:k]) for k in range(len(col_sizes))]
    entries: dict[tuple[int, int], Any] = {}
    for r, block_row in enumerate(blocks):
        for c, block in enumerate(block_row):
            if block is None:
                continue
            if block.shape != (row_sizes[r], col_sizes[c]):
                raise ShapeMismatchError(f"ブロック({r}, {c})の形が不整合です: {block.shape}")
            for i, j, value in nonzero_entries(block):
                entries[(row_offsets[r] + i, col_offsets[c] + j)] = value
    return from_entries(domain, (sum(row_sizes), sum(col_sizes)), entries)


def vstack(domain: Any, matrices: Sequence[DomainMatrix], ncols: int) -> DomainMatrix:
    return block_matrix(domain, [[m] for m in matrices], [m.shape[0] for m in matrices], [ncols])


def coefficient_domain(m: DomainMatrix) -> Any:
    """PolyMatrixの係数体ドメイン"""
    return m.domain.domain


def constant_part(m: PolyMatrix) -> ScalarMatrix:
    """各要素の定数項からなる係数体上の行列(m ⊗ k)"""
    entries = {(i, j): value.const() for i, j, value in nonzero_entries(m)}
    return from_entries(coefficient_domain(m), m.shape, entries)


def specialize_matrix(m: PolyMatrix, point: Sequence[Any]) -> ScalarMatrix:
    entries = {(i, j): specialize(value, point) for i, j, value in nonzero_entries(m)}
    return from_entries(coefficient_domain(m), m.shape, entries)


def rank_over_field(m: ScalarMatrix) -> int:
    """係数体上の厳密なランク"""
    if m.shape[0] == 0 or m.shape[1] == 0 or is_zero_matrix(m):
        return 0
    return int(m.rank())


def random_point(domain: Any, nvars: int, seed: int, prime: int = DEFAULT_PRIME) -> list[Any]:
    """シード付き一様乱数点

    有限体ドメインではその体の一様な元、QQでは [1, prime) の整数を返す。
    """
    rng = random.Random(seed)
    if domain.is_FiniteField:
        p = int(domain.mod)
        return [domain.convert(rng.randrange(p)) for _ in range(nvars)]
    return [domain.convert(rng.randrange(1, prime)) for _ in range(nvars)]


def rank_at_random_point(m: PolyMatrix, seed: int, prime: int = DEFAULT_PRIME) -> int:
    """シード付きランダム点で特殊化した行列のランク

    結果は常に分数体上のランク以下で、一致しない確率は 次数/p 程度(Schwartz–Zippel)。
    """
    if m.shape[0] == 0 or m.shape[1] == 0:
        return 0
    ring = m.domain.ring
    point = random_point(ring.domain, ring.ngens, seed, prime)
    return rank_over_field(specialize_matrix(m, point))


def kernel_basis(m: ScalarMatrix) -> list[dict[int, Any]]:
    """係数体上の行列の核の基底(各ベクトルは {列: 値} の疎表現)

    自由列ごとに、その列を1、他の自由列を0としたベクトルを返す。
    """
    ncols = m.shape[1]
    if m.shape[0] == 0 or is_zero_matrix(m):
        return [{j: m.domain.one} for j in range(ncols)]
    reduced, pivots = m.rref()
    rows = reduced.to_dod()
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vector = {free: m.domain.one}
        for k, p in enumerate(pivots):
            value = rows.get(k, {}).get(free)
            if value:
                vector[p] = -value
        basis.append(vector)
    return basis
