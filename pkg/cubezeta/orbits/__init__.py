"""Galois orbits on index boxes and character sets, and the pair families."""

from cubezeta.orbits.families import (
    iota,
    iota_exponents,
    iota_orbit_analysis,
    is_diagonal,
    is_iota_invariant,
    q2_family_representatives,
)
from cubezeta.orbits.galois import (
    DVec,
    DVecLike,
    GcdGraph,
    Orbit,
    OrbitDecomposition,
    SubgroupH,
    as_dvec,
    character_orbits,
    gcd_graph,
    orb_count_formula,
    orbit_decompose,
    subgroup_h,
)

__all__ = [
    "DVec",
    "DVecLike",
    "GcdGraph",
    "Orbit",
    "OrbitDecomposition",
    "SubgroupH",
    "as_dvec",
    "character_orbits",
    "gcd_graph",
    "iota",
    "iota_exponents",
    "iota_orbit_analysis",
    "is_diagonal",
    "is_iota_invariant",
    "orb_count_formula",
    "orbit_decompose",
    "q2_family_representatives",
    "subgroup_h",
]
