"""Eagon–Northcott複体

n x m 行列 M(n <= m)の極大小行列式のイデアルの分解:
F_0 = R、F_{ℓ+1} = D_ℓ(G*) ⊗ Λ^{n+ℓ}F(0 <= ℓ <= m-n)。
基底は α(|α| = ℓ、降順)を外側、T(辞書式順)を内側に並べる。
d_1(f_T) = Δ_T、ℓ >= 1 では
d(g^{*(α)} ⊗ f_T) = Σ_{i: α_i>0} Σ_j (-1)^{j+1} x_{i,t_j} g^{*(α-e_i)} ⊗ f_{T∖t_j}。
"""

from __future__ import annotations

import logging
from functools import lru_cache
from itertools import combinations
from typing import Any

from trimcx.builders.matrices import GenericMatrixSpec, determinant
from trimcx.chain.complex import GradedFreeComplex, GradedFreeModule, GradedMap
from trimcx.linalg.matrices import from_entries, submatrix

logger = logging.getLogger(__name__)

# (α, T): α は長さ n の指数、T は0始まりの列添字集合
BasisElement = tuple[tuple[int, ...], tuple[int, ...]]


@lru_cache(maxsize=256)
def divided_power_basis(n: int, ell: int) -> tuple[tuple[int, ...], ...]:
    """D_ℓ(G*) の基底 {α : |α| = ℓ}(辞書式降順、g_1^{*(ℓ)} が先頭)"""
    if ell < 0:
        return ()
    if n == 1:
        return ((ell,),)
    out = []
    for first in range(ell, -1, -1):
        for rest in divided_power_basis(n - 1, ell - first):
            out.append((first, *rest))
    return tuple(out)


@lru_cache(maxsize=256)
def en_basis(n: int, m: int, k: int) -> tuple[BasisElement, ...]:
    """F_k の基底(k >= 1)。k = ℓ+1 で D_ℓ(G*) ⊗ Λ^{n+ℓ}F"""
    ell = k - 1
    if k < 1 or n + ell > m:
        return ()
    return tuple((alpha, subset) for alpha in divided_power_basis(n, ell) for subset in combinations(range(m), n + ell))


def en_ranks(n: int, m: int) -> list[int]:
    """(rank F_0, rank F_1, ..., rank F_{m-n+1})"""
    return [1] + [len(en_basis(n, m, k)) for k in range(1, m - n + 2)]


def eagon_northcott(spec: GenericMatrixSpec) -> GradedFreeComplex:
    """行列 spec の極大小行列式のEagon–Northcott複体

    Raises:
        ValueError: 成分の次数が揃っていない場合
    """
    n, m = spec.rows, spec.cols
    ring = spec.ring
    domain = ring.poly_domain
    e = spec.entry_degree()
    length = m - n + 1

    modules = [GradedFreeModule(generator_degrees=(0,))]
    for k in range(1, length + 1):
        modules.append(GradedFreeModule(generator_degrees=((n + k - 1) * e,) * len(en_basis(n, m, k))))

    dod = spec.matrix.to_dod()
    differentials = []
    d1_entries = {}
    for c, (_, subset) in enumerate(en_basis(n, m, 1)):
        d1_entries[(0, c)] = determinant(submatrix(spec.matrix, list(range(n)), list(subset)))
    d1_matrix = from_entries(domain, (1, modules[1].rank), d1_entries)
    differentials.append(GradedMap(ring=ring, source=modules[1], target=modules[0], matrix=d1_matrix))

    for k in range(2, length + 1):
        target_index = {b: r for r, b in enumerate(en_basis(n, m, k - 1))}
        entries: dict[tuple[int, int], Any] = {}
        for c, (alpha, subset) in enumerate(en_basis(n, m, k)):
            for i in range(n):
                if alpha[i] == 0:
                    continue
                lowered = alpha[:i] + (alpha[i] - 1,) + alpha[i + 1 :]
                for j, t in enumerate(subset):
                    value = dod.get(i, {}).get(t)
                    if not value:
                        continue
                    r = target_index[(lowered, subset[:j] + subset[j + 1 :])]
                    term = value if j % 2 == 0 else -value
                    entries[(r, c)] = entries.get((r, c), ring.zero) + term
        matrix = from_entries(domain, (modules[k - 1].rank, modules[k].rank), entries)
        differentials.append(GradedMap(ring=ring, source=modules[k], target=modules[k - 1], matrix=matrix))

    logger.debug("Eagon–Northcott(%d, %d) の階数: %s", n, m, [mod.rank for mod in modules])
    return GradedFreeComplex(ring=ring, modules=tuple(modules), differentials=tuple(differentials))
