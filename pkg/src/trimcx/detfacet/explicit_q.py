"""小行列式を除く場合の q の明示式

一般 n x m 行列の Eagon–Northcott 分解 F から σ に対応する生成元 f_σ を除くとき、
𝔞 = (x_{ij} | j ∉ σ) は n(m-n) 変数の完全交叉で、G はその Koszul 複体。
U の基底 e_{ij}(j ∉ σ)は (i, j) の辞書式順(行優先)に並べる。
q_ℓ: D_{ℓ-1}(G*) ⊗ Λ^{n+ℓ}F -> Λ^ℓ U は、T ⊇ σ、τ = T∖σ のとき
g^{*(α)} ⊗ f_T ↦ sgn(τ, σ) Σ_{L ∈ L_{α,τ}} e_{L_1} ∧ ... ∧ e_{L_ℓ}、それ以外は0。
sgn(τ, σ) は f_τ ∧ f_σ = sgn(τ, σ) f_T の符号。
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from itertools import combinations

from trimcx.builders.eagon_northcott import eagon_northcott, en_basis
from trimcx.builders.koszul import koszul_complex
from trimcx.builders.matrices import GenericMatrixSpec, IndexSet
from trimcx.chain.complex import GradedMap, free_module
from trimcx.detfacet.combinatorics import ExponentAlpha, l_set
from trimcx.detfacet.formulas import check_sigmas
from trimcx.linalg.matrices import from_entries, rank_over_field
from trimcx.ring.field import CoefficientField
from trimcx.trim.lifts import LiftFamily
from trimcx.trim.setup import TrimSetup, build_setup

logger = logging.getLogger(__name__)


def permutation_sign(values: Sequence[int]) -> int:
    """values を昇順に並べ替える置換の符号(値は相異なること)"""
    inversions = sum(1 for a, b in combinations(values, 2) if a > b)
    return -1 if inversions % 2 else 1


def complement_pairs(n: int, m: int, sigma: IndexSet) -> list[tuple[int, int]]:
    """U の基底 (i, j)(j ∉ σ、1始まり、行優先)"""
    removed = set(sigma.indices)
    return [(i, j) for i in range(1, n + 1) for j in range(1, m + 1) if j not in removed]


def _q_entries(
    n: int, m: int, sigma: IndexSet, ell: int, printed_sign: bool
) -> tuple[int, dict[tuple[int, int], int]]:
    """q_ℓ の非零成分 {(行, 列): ±1} と行数 C(|U|, ℓ)"""
    pairs = complement_pairs(n, m, sigma)
    u_index = {p: k for k, p in enumerate(pairs)}
    target_index = {subset: r for r, subset in enumerate(combinations(range(len(pairs)), ell))}
    sigma_set = set(sigma.indices)
    global_sign = -1 if printed_sign and ell >= 2 and n % 2 == 1 else 1

    entries: dict[tuple[int, int], int] = {}
    for c, (alpha, subset) in enumerate(en_basis(n, m, ell + 1)):
        t_set = tuple(k + 1 for k in subset)
        if not sigma_set <= set(t_set):
            continue
        tau = tuple(k for k in t_set if k not in sigma_set)
        sign = permutation_sign(tau + sigma.indices) * global_sign
        for matching in l_set(ExponentAlpha(alpha=alpha), IndexSet(indices=tau)):
            wedge = [u_index[p] for p in matching.pairs]
            r = target_index[tuple(sorted(wedge))]
            value = entries.get((r, c), 0) + sign * permutation_sign(wedge)
            if value:
                entries[(r, c)] = value
            else:
                entries.pop((r, c), None)
    return len(target_index), entries


def _explicit_maps(
    spec: GenericMatrixSpec, sigmas: Sequence[IndexSet], ell: int, printed_sign: bool
) -> list[GradedMap]:
    n, m = spec.rows, spec.cols
    ring = spec.ring
    rank = len(en_basis(n, m, ell + 1))
    source = free_module(*([n + ell] * rank))
    maps = []
    for sigma in sigmas:
        nrows, entries = _q_entries(n, m, sigma, ell, printed_sign)
        target = free_module(*([n + ell] * nrows))
        domain_entries = {key: ring.constant(v) for key, v in entries.items()}
        matrix = from_entries(ring.poly_domain, (nrows, rank), domain_entries)
        maps.append(GradedMap(ring=ring, source=source, target=target, matrix=matrix))
    return maps


def explicit_q(
    n: int,
    m: int,
    sigmas: Sequence[IndexSet],
    ell: int,
    *,
    field: CoefficientField | None = None,
    printed_sign: bool = False,
) -> list[GradedMap]:
    """各 σ_j の q_ℓ: F_{ℓ+1} -> Λ^ℓ U_j(-n)(成分は 0, ±1)

    Args:
        n: 行数
        m: 列数
        sigmas: 互いに素な σ_j
        ell: ℓ >= 1
        field: 係数体(省略時は QQ)
        printed_sign: Trueなら ℓ >= 2 で全体に (-1)^n を掛ける

    Returns:
        σ ごとの写像。ℓ > m - n では定義域が零

    Raises:
        ValueError: ℓ < 1、または σ が重なる場合
    """
    if ell < 1:
        raise ValueError(f"ℓ は1以上である必要があります: {ell}")
    check_sigmas(n, m, sigmas)
    spec = GenericMatrixSpec(rows=n, cols=m, field=field or CoefficientField.rationals())
    return _explicit_maps(spec, sigmas, ell, printed_sign)


def stacked_constant_rank(
    n: int,
    m: int,
    sigmas: Sequence[IndexSet],
    ell: int,
    *,
    field: CoefficientField | None = None,
) -> int:
    """(q_ℓ^1; ...; q_ℓ^r) ⊗ k のランク(係数体上で直接組み立てる)"""
    if ell < 1:
        raise ValueError(f"ℓ は1以上である必要があります: {ell}")
    check_sigmas(n, m, sigmas)
    domain = (field or CoefficientField.rationals()).domain
    ncols = len(en_basis(n, m, ell + 1))
    entries = {}
    offset = 0
    for sigma in sigmas:
        nrows, block = _q_entries(n, m, sigma, ell, printed_sign=False)
        for (r, c), v in block.items():
            entries[(offset + r, c)] = domain.convert(v)
        offset += nrows
    return rank_over_field(from_entries(domain, (offset, ncols), entries))


def explicit_lift_family(
    n: int,
    m: int,
    sigmas: Sequence[IndexSet],
    *,
    field: CoefficientField | None = None,
    printed_sign: bool = False,
) -> tuple[TrimSetup, LiftFamily]:
    """Eagon–Northcott 分解から σ_j の生成元を除くトリミングの入力と明示的な q の族

    Raises:
        ValueError: σ が重なる場合
    """
    check_sigmas(n, m, sigmas)
    spec = GenericMatrixSpec(rows=n, cols=m, field=field or CoefficientField.rationals())
    f = eagon_northcott(spec)
    first = [subset for _, subset in en_basis(n, m, 1)]
    indices = [first.index(sigma.zero_based) for sigma in sigmas]
    a_ideals = [[spec.entry(i - 1, j - 1) for i, j in complement_pairs(n, m, sigma)] for sigma in sigmas]
    g_complexes = [koszul_complex(gens, spec.ring) for gens in a_ideals]
    setup = build_setup(f, indices, a_ideals, g_complexes)
    maps = tuple(
        tuple(_explicit_maps(spec, [sigma], k, printed_sign)[0] for k in range(1, f.length))
        for sigma in sigmas
    )
    logger.debug("明示的な q の族: n=%d, m=%d, r=%d, 長さ %d", n, m, len(sigmas), f.length - 1)
    return setup, LiftFamily(setup=setup, maps=maps)
