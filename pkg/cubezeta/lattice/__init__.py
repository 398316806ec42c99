"""Cubes of the periodic lattice, twisted operators and their spectra."""

from cubezeta.lattice.cubes import (
    Character,
    LatticeSpec,
    boundary_sign,
    cube_count,
    cube_faces,
    cubes,
    simplices,
)
from cubezeta.lattice.spectra import (
    Spectrum,
    assembled_adjacency_spectrum,
    assembled_laplacian_spectrum,
    charpoly_aup1_closed,
    coboundary_kernels,
    coboundary_square_norm,
    down_up_defect,
    expand_spectrum,
    group_eigenvalues,
    hodge_defect,
    kernel_dimension,
    laplacian_spectrum,
    spectra_match,
    spectrum_adown_q,
    spectrum_report,
    twisted_union_spectrum,
)
from cubezeta.lattice.twisted import (
    TwistedMatrix,
    assembled_coboundary,
    assembled_incidence,
    exact_adjacency,
    exact_incidence,
    facet_pattern,
    twisted_adjacency,
    twisted_coboundary,
    twisted_incidence,
    twisted_laplacian,
)

__all__ = [
    "Character",
    "LatticeSpec",
    "Spectrum",
    "TwistedMatrix",
    "assembled_adjacency_spectrum",
    "assembled_coboundary",
    "assembled_incidence",
    "assembled_laplacian_spectrum",
    "boundary_sign",
    "charpoly_aup1_closed",
    "coboundary_kernels",
    "coboundary_square_norm",
    "cube_count",
    "cube_faces",
    "cubes",
    "down_up_defect",
    "exact_adjacency",
    "exact_incidence",
    "expand_spectrum",
    "facet_pattern",
    "group_eigenvalues",
    "hodge_defect",
    "kernel_dimension",
    "laplacian_spectrum",
    "simplices",
    "spectra_match",
    "spectrum_adown_q",
    "spectrum_report",
    "twisted_adjacency",
    "twisted_coboundary",
    "twisted_incidence",
    "twisted_laplacian",
    "twisted_union_spectrum",
]
