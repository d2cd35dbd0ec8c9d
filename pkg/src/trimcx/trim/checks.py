"""トリミングの前提と結論の有限次数での検証

J = K' + Σ_s 𝔞_s·K_0^s(K' = d_1(F_1')、K_0^s = (d_1(e_0^s)))の生成元、
写像錐の H_0 の生成元、コロン (K' : K_0^s) ⊆ 𝔞_s の次数ごとの包含を扱う。
"""

from __future__ import annotations

import logging

from trimcx.chain.complex import GradedFreeComplex
from trimcx.linalg.matrices import entry
from trimcx.oracle.slices import DEFAULT_MAX_COLON_MONOMIALS, IdealBasis, colon_slice, ideal_equal_upto, ideal_slice
from trimcx.ring.polynomial import Polynomial
from trimcx.trim.setup import TrimSetup

logger = logging.getLogger(__name__)

DEFAULT_DMAX_SLACK = 3


def kprime_generators(setup: TrimSetup) -> list[Polynomial]:
    """K' の生成元 d_1(e) (e ∈ F_1')"""
    d1 = setup.f_complex.differential(1).matrix
    return [p for p in (entry(d1, 0, k) for k in setup.kept_indices) if p]


def trimming_ideal_generators(setup: TrimSetup) -> list[Polynomial]:
    """J = K' + Σ_s 𝔞_s·d_1(e_0^s) の生成元"""
    gens = kprime_generators(setup)
    for s in range(setup.t):
        k0 = setup.e0_image(s)
        gens.extend(a * k0 for a in setup.a_ideals[s] if a * k0)
    return gens


def h0_generators(cone: GradedFreeComplex) -> list[Polynomial]:
    """写像錐の d_1 の非零成分(H_0 = R/J の J の生成元)"""
    d1 = cone.differential(1).matrix
    return [p for p in (entry(d1, 0, k) for k in range(d1.shape[1])) if p]


def default_dmax(setup: TrimSetup, slack: int = DEFAULT_DMAX_SLACK) -> int:
    """J の最大生成元次数 + slack"""
    return IdealBasis.from_polynomials(setup.ring, trimming_ideal_generators(setup)).max_degree + slack


def h0_matches(setup: TrimSetup, cone: GradedFreeComplex, dmax: int) -> bool:
    """写像錐の H_0 のイデアルが次数 dmax 以下で J と一致するか"""
    ring = setup.ring
    return ideal_equal_upto(
        IdealBasis.from_polynomials(ring, h0_generators(cone)),
        IdealBasis.from_polynomials(ring, trimming_ideal_generators(setup)),
        dmax,
    )


def colon_containment(
    setup: TrimSetup,
    bound: int,
    *,
    max_monomials: int = DEFAULT_MAX_COLON_MONOMIALS,
) -> bool:
    """全ての s と d <= bound で (K' : K_0^s)_d ⊆ (𝔞_s)_d が成り立つか

    Raises:
        SizeGuardError: コロンの計算規模が上限を超える場合
    """
    ring = setup.ring
    kprime = IdealBasis.from_polynomials(ring, kprime_generators(setup))
    for s in range(setup.t):
        a = IdealBasis(ring=ring, generators=setup.a_ideals[s])
        k0 = setup.e0_image(s)
        for d in range(bound + 1):
            colon = colon_slice(kprime, k0, d, max_monomials=max_monomials)
            if not colon.is_subspace_of(ideal_slice(a, d)):
                logger.debug("次数 %d で (K' : K_0^%d) ⊄ 𝔞_%d", d, s + 1, s + 1)
                return False
    return True


def resolves_kprime(setup: TrimSetup, dmax: int) -> bool:
    """次数 dmax 以下で J = K' か

    t = 1 で d_0(F_2) = 𝔞·e_0 のとき、d_1 ∘ d_2 = 0 から 𝔞·K_0 ⊆ K' となり成り立つ。
    """
    ring = setup.ring
    return ideal_equal_upto(
        IdealBasis.from_polynomials(ring, trimming_ideal_generators(setup)),
        IdealBasis.from_polynomials(ring, kprime_generators(setup)),
        dmax,
    )
