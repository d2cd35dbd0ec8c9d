"""パフィアンとBuchsbaum–Eisenbud分解

奇数次交代行列 X(n x n)に対し
0 -> R -> R^n -> R^n -> R、d_1 = (Pf_1, -Pf_2, ..., (-1)^{n+1} Pf_n)、d_2 = X、d_3 = d_1ᵀ。
"""

from __future__ import annotations

import logging

from trimcx.builders.matrices import SkewMatrix, SkewMatrixError
from trimcx.chain.complex import GradedFreeComplex, GradedFreeModule, GradedMap
from trimcx.linalg.matrices import from_entries, transpose
from trimcx.ring.polynomial import Polynomial, homogeneous_degree

logger = logging.getLogger(__name__)


def pfaffian_of(x: SkewMatrix, indices: tuple[int, ...]) -> Polynomial:
    """行・列 indices(0始まり)からなる主小行列のパフィアン

    第1行に沿った再帰展開 Pf = Σ_{j>=2} (-1)^j a_{1j} Pf(1, j を除いた行列) をメモ化して計算する。
    [[0, a], [-a, 0]] のパフィアンは a。奇数個なら0。
    """
    memo: dict[tuple[int, ...], Polynomial] = {}
    zero, one = x.ring.zero, x.ring.one
    dod = x.matrix.to_dod()

    def expand(rest: tuple[int, ...]) -> Polynomial:
        if not rest:
            return one
        if len(rest) % 2 == 1:
            return zero
        if rest in memo:
            return memo[rest]
        first, others = rest[0], rest[1:]
        row = dod.get(first, {})
        total = zero
        for k, j in enumerate(others):
            a = row.get(j)
            if not a:
                continue
            # k = 0 が1始まりの第2列に当たる
            term = a * expand(others[:k] + others[k + 1 :])
            total = total + term if k % 2 == 0 else total - term
        memo[rest] = total
        return total

    return expand(tuple(indices))


def pfaffian(x: SkewMatrix, j: int) -> Polynomial:
    """Pf_j(X): 第j行・列(1始まり)を除いた行列のパフィアン

    Raises:
        SkewMatrixError: n が偶数、または j が範囲外の場合
    """
    n = x.size
    if n % 2 == 0:
        raise SkewMatrixError(f"Pf_j はサイズが奇数の行列に対してのみ定義されます: n={n}")
    if not 1 <= j <= n:
        raise SkewMatrixError(f"添字が範囲外です: j={j}, n={n}")
    return pfaffian_of(x, tuple(k for k in range(n) if k != j - 1))


def signed_pfaffians(x: SkewMatrix) -> list[Polynomial]:
    """((-1)^{j+1} Pf_j(X))_{j=1..n}"""
    return [pfaffian(x, j) if j % 2 == 1 else -pfaffian(x, j) for j in range(1, x.size + 1)]


def pfaffian_resolution(x: SkewMatrix) -> GradedFreeComplex:
    """部分極大パフィアンのイデアルのBuchsbaum–Eisenbud複体

    生成元の次数は成分から推定する(d_1 の成分次数 → F_1、X → F_2、d_1ᵀ → F_3)。

    Raises:
        SkewMatrixError: n が偶数または3未満、あるいは全てのパフィアンが0の場合
    """
    n = x.size
    if n % 2 == 0 or n < 3:
        raise SkewMatrixError(f"サイズは3以上の奇数である必要があります: n={n}")
    ring = x.ring
    domain = ring.poly_domain
    pfs = signed_pfaffians(x)
    if not any(pfs):
        raise SkewMatrixError("全てのパフィアンが0です")
    for k, p in enumerate(pfs):
        if p and homogeneous_degree(p) is None:
            raise SkewMatrixError(f"Pf_{k + 1} が斉次ではありません")

    f0 = GradedFreeModule(generator_degrees=(0,))
    d1_matrix = from_entries(domain, (1, n), {(0, j): p for j, p in enumerate(pfs)})
    d1 = GradedMap.infer_source(ring, f0, d1_matrix)
    d2 = GradedMap.infer_source(ring, d1.source, x.matrix)
    d3 = GradedMap.infer_source(ring, d2.source, transpose(d1_matrix))
    logger.debug("パフィアン分解の生成元次数: %s", [m.generator_degrees for m in (d1.source, d2.source, d3.source)])
    return GradedFreeComplex.from_differentials(ring, [d1, d2, d3])
