"""Koszul複体

生成元 g_1, ..., g_q 上の外積代数の複体。Λ^ℓ の基底は添字集合の辞書式順で、
d(e_T) = Σ_k (-1)^{k+1} g_{t_k} e_{T∖t_k}(k は T 内の1始まりの位置)。
"""

from __future__ import annotations

from collections.abc import Sequence
from functools import lru_cache
from itertools import combinations

from trimcx.chain.complex import ComplexError, GradedFreeComplex, GradedFreeModule, GradedMap
from trimcx.linalg.matrices import from_entries
from trimcx.ring.polynomial import Polynomial, PolyRing, homogeneous_degree


@lru_cache(maxsize=256)
def exterior_basis(q: int, ell: int) -> tuple[tuple[int, ...], ...]:
    """Λ^ℓ(R^q) の基底(0始まりの添字集合、辞書式順)"""
    return tuple(combinations(range(q), ell))


def koszul_complex(gens: Sequence[Polynomial], ring: PolyRing | None = None) -> GradedFreeComplex:
    """斉次元の列上のKoszul複体

    Args:
        gens: 非零の斉次多項式(空でないこと)
        ring: 多項式環(省略時は gens から復元)

    Returns:
        長さ len(gens) の複体。F_ℓ の階数は C(q, ℓ)

    Raises:
        ComplexError: 生成元が空、零、または斉次でない場合
    """
    if not gens:
        raise ComplexError("Koszul複体の生成元が空です")
    ring = ring or PolyRing.of(gens[0])
    degrees = []
    for k, g in enumerate(gens):
        if not g:
            raise ComplexError(f"零の生成元があります: 位置 {k + 1}")
        d = homogeneous_degree(g)
        if d is None:
            raise ComplexError(f"斉次でない生成元があります: 位置 {k + 1}")
        degrees.append(d)

    q = len(gens)
    modules = [
        GradedFreeModule(generator_degrees=tuple(sum(degrees[t] for t in subset) for subset in exterior_basis(q, ell)))
        for ell in range(q + 1)
    ]
    differentials = []
    for ell in range(1, q + 1):
        target_index = {subset: r for r, subset in enumerate(exterior_basis(q, ell - 1))}
        entries = {}
        for c, subset in enumerate(exterior_basis(q, ell)):
            for k, t in enumerate(subset):
                face = subset[:k] + subset[k + 1 :]
                entries[(target_index[face], c)] = gens[t] if k % 2 == 0 else -gens[t]
        matrix = from_entries(ring.poly_domain, (modules[ell - 1].rank, modules[ell].rank), entries)
        differentials.append(GradedMap(ring=ring, source=modules[ell], target=modules[ell - 1], matrix=matrix))
    return GradedFreeComplex(ring=ring, modules=tuple(modules), differentials=tuple(differentials))
