"""閉じた式によるランクとBetti表

二項係数は拡張規約 C(a, b) = 0(b < 0、b > a、a < 0)で評価する。
零の成分はBetti表に含めない。
"""

from __future__ import annotations

from collections import defaultdict
from collections.abc import Sequence
from math import comb

from trimcx.builders.matrices import IndexSet
from trimcx.chain.betti import BettiTable


def binom(a: int, b: int) -> int:
    """拡張規約の二項係数"""
    if a < 0 or b < 0 or b > a:
        return 0
    return comb(a, b)


def rank_formula(n: int, m: int, r: int, ell: int) -> int:
    """縦に積んだ q_ℓ ⊗ k のランク

    rk_ℓ = C(n+ℓ-1, ℓ) · Σ_{i=1}^{r} (-1)^{i+1} C(r, i) C(m-in, ℓ-(i-1)n)。
    r = 1 では C(n+ℓ-1, ℓ)·C(m-n, ℓ)。ℓ = 0 では r になる。
    """
    total = 0
    for i in range(1, r + 1):
        total += (-1) ** (i + 1) * binom(r, i) * binom(m - i * n, ell - (i - 1) * n)
    return binom(n + ell - 1, ell) * total


def betti_pfaffian_trim(n: int) -> BettiTable:
    """一般 n x n 交代行列の部分極大パフィアンから1つを除いたイデアルのBetti表

    Raises:
        ValueError: n が偶数または5未満の場合
    """
    if n % 2 == 0 or n < 5:
        raise ValueError(f"n は5以上の奇数である必要があります: {n}")
    half = (n - 1) // 2
    counts: dict[tuple[int, int], int] = defaultdict(int)
    counts[(0, 0)] = 1
    counts[(1, half)] += n - 1
    counts[(2, half + 1)] += 1
    for k in range(2, n):
        counts[(k, k + half)] += binom(n - 1, k)
    counts[(3, n)] += 1
    return BettiTable.from_counts(counts)


def check_sigmas(n: int, m: int, sigmas: Sequence[IndexSet]) -> None:
    """σ_1, ..., σ_r が [m] の互いに素な n 元部分集合で r·n <= m であることを検証

    Raises:
        ValueError: 条件を満たさない場合
    """
    if n < 1 or n > m:
        raise ValueError(f"1 <= n <= m である必要があります: n={n}, m={m}")
    if len(sigmas) * n > m:
        raise ValueError(f"r·n <= m である必要があります: r={len(sigmas)}, n={n}, m={m}")
    for s in sigmas:
        s.check_within(m, n)
    for a in range(len(sigmas)):
        for b in range(a + 1, len(sigmas)):
            if not sigmas[a].is_disjoint(sigmas[b]):
                raise ValueError(f"σ は互いに素である必要があります: {sigmas[a].indices}, {sigmas[b].indices}")


def _minor_table(n: int, m: int, r: int) -> BettiTable:
    counts: dict[tuple[int, int], int] = {(0, 0): 1}
    top = n * (m - n)
    for ell in range(1, max(top, 1) + 1):
        linear = binom(n + ell - 2, ell - 1) * binom(m, n + ell - 1) - rank_formula(n, m, r, ell - 1)
        quadratic = r * binom(top, ell) - rank_formula(n, m, r, ell)
        if linear < 0 or quadratic < 0:
            raise ValueError(f"負のBetti数になりました: n={n}, m={m}, r={r}, ℓ={ell}")
        counts[(ell, n - 1 + ell)] = linear
        counts[(ell, n + ell)] = quadratic
    return BettiTable.from_counts(counts)


def betti_single_minor(n: int, m: int) -> BettiTable:
    """一般 n x m 行列の極大小行列式から1つを除いたイデアルのBetti表

    Raises:
        ValueError: n > m の場合
    """
    if n < 1 or n > m:
        raise ValueError(f"1 <= n <= m である必要があります: n={n}, m={m}")
    return _minor_table(n, m, 1)


def betti_multi_minor(n: int, m: int, sigmas: Sequence[IndexSet]) -> BettiTable:
    """互いに素な r 個の σ_j に対応する小行列式を除いたイデアルのBetti表

    行 n-1 の列 ℓ は C(n+ℓ-2, ℓ-1)·C(m, n+ℓ-1) - rk_{ℓ-1}、
    行 n の列 ℓ は r·C(n(m-n), ℓ) - rk_ℓ。

    Raises:
        ValueError: σ が重なる、r·n > m、または大きさが n でない場合
    """
    check_sigmas(n, m, sigmas)
    return _minor_table(n, m, len(sigmas))


def clique_fvector_formula(n: int, m: int, r: int, index_convention: str = "shifted") -> list[int]:
    """f_{n+ℓ-2}(Δ(C)) の閉じた式(ℓ = 1, ..., m-n+1)

    as-printed: C(m, n+ℓ-1) - Σ (-1)^{i+1} C(r, i) C(m-in, ℓ-(i-1)n)
    shifted:    内側の引数を (ℓ-1)-(i-1)n に置き換えたもの

    Raises:
        ValueError: 未知の規約名の場合
    """
    if index_convention not in ("as-printed", "shifted"):
        raise ValueError(f"index_conventionは 'as-printed' または 'shifted' です: {index_convention}")
    offset = 1 if index_convention == "shifted" else 0
    values = []
    for ell in range(1, m - n + 2):
        removed = sum(
            (-1) ** (i + 1) * binom(r, i) * binom(m - i * n, ell - offset - (i - 1) * n) for i in range(1, r + 1)
        )
        values.append(binom(m, n + ell - 1) - removed)
    return values


def linear_strand_from_fvector(n: int, fvector: Sequence[int]) -> dict[int, int]:
    """C(n+ℓ-2, ℓ-1)·f_{n+ℓ-2} を ℓ ごとに返す(一般化Eagon–Northcott項の階数)

    Args:
        n: 小行列式のサイズ
        fvector: f_0, f_1, ... (次元の昇順)
    """
    out = {}
    for dim in range(n - 1, len(fvector)):
        ell = dim - n + 2
        value = binom(n + ell - 2, ell - 1) * fvector[dim]
        if value:
            out[ell] = value
    return out
