"""Reciprocal zeta polynomials of lattice skeletons and their free-energy limit."""

from cubezeta.zeta.closed_form import (
    Prefactor,
    SkeletonConstants,
    ZetaFactor,
    ZetaInverse,
    apply_prefactors,
    skeleton_constants,
    zeta_codim1,
    zeta_general_d,
    zeta_inverse,
    zeta_top,
    zeta_top_direct,
)
from cubezeta.zeta.mahler import (
    free_energy_check,
    free_energy_limit,
    integrand_vanishes,
    mahler_limit_integral,
)

__all__ = [
    "Prefactor",
    "SkeletonConstants",
    "ZetaFactor",
    "ZetaInverse",
    "apply_prefactors",
    "free_energy_check",
    "free_energy_limit",
    "integrand_vanishes",
    "mahler_limit_integral",
    "skeleton_constants",
    "zeta_codim1",
    "zeta_general_d",
    "zeta_inverse",
    "zeta_top",
    "zeta_top_direct",
]
