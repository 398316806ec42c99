"""The hypergraph H = (Y_(d-1), Y_d) as a bipartite graph and its Bass determinant.

Nothing here uses characters or the Fourier block structure: the incidence
is assembled cube by cube over the whole torus and every determinant is taken
over the integers.
"""

import logging
from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np

from cubezeta.algebra import IntPoly, poly_matrix_det
from cubezeta.core.errors import DomainError, ResourceLimitError
from cubezeta.core.models import ResourceLimits
from cubezeta.lattice import LatticeSpec, assembled_incidence, cube_count, cubes
from cubezeta.psi import evaluate_homogeneous

logger = logging.getLogger(__name__)

# Largest |V| + |E| for which det(I - vA + v^2 Q) is interpolated in v directly.
BASS_DIRECT_MAX = 64


@dataclass(frozen=True)
class BipartiteIncidence:
    """B_H: hypervertices Y_(d-1), hyperedges Y_d, incidence[v, e] = 1 iff v is a face of e."""

    spec: LatticeSpec
    d: int
    v_side: Tuple[Tuple, ...]
    e_side: Tuple[Tuple, ...]
    incidence: np.ndarray

    @property
    def num_vertices(self) -> int:
        return len(self.v_side)

    @property
    def num_edges(self) -> int:
        return len(self.e_side)

    @property
    def size(self) -> int:
        """Number of nodes of B_H."""
        return self.num_vertices + self.num_edges

    @property
    def num_arcs(self) -> int:
        """Undirected edges of B_H, one per incidence."""
        return int(self.incidence.sum())

    def vertex_degrees(self) -> np.ndarray:
        return self.incidence.sum(axis=1)

    def edge_degrees(self) -> np.ndarray:
        return self.incidence.sum(axis=0)

    def euler_characteristic(self) -> int:
        """|V_B| - |E_B| of the bipartite graph."""
        return self.size - self.num_arcs

    def regular_degrees(self) -> Optional[Tuple[int, int]]:
        """(a, b) when every hypervertex has degree a and every hyperedge degree b."""
        vdeg, edeg = self.vertex_degrees(), self.edge_degrees()
        if len(set(vdeg.tolist())) == 1 and len(set(edeg.tolist())) == 1:
            return int(vdeg[0]), int(edeg[0])
        return None

    def adjacency(self) -> np.ndarray:
        """Symmetric 0/1 adjacency of B_H, hypervertices first."""
        nv, ne = self.num_vertices, self.num_edges
        out = np.zeros((nv + ne, nv + ne), dtype=np.int64)
        out[:nv, nv:] = self.incidence
        out[nv:, :nv] = self.incidence.T
        return out


def build_bh(
    spec: LatticeSpec, d: int, limits: Optional[ResourceLimits] = None
) -> BipartiteIncidence:
    """Assemble B_H for the d-skeleton.

    Args:
        spec: Lattice side lengths
        d: Skeleton dimension in [1, q]
        limits: |Y_(d-1)| + |Y_d| may not exceed max_bipartite_size

    Raises:
        DomainError: If d is out of range
        ResourceLimitError: If B_H is too large
    """
    limits = limits or ResourceLimits()
    if not 1 <= d <= spec.q:
        raise DomainError(f"Skeleton dimension must lie in [1, {spec.q}], got {d}")
    size = cube_count(spec, d - 1) + cube_count(spec, d)
    if size > limits.max_bipartite_size:
        raise ResourceLimitError("bipartite graph B_H", size, limits.max_bipartite_size)
    # rows of the assembled map are d-cubes, columns (d-1)-cubes
    incidence = assembled_incidence(spec, d - 1, limits).T.copy()
    bh = BipartiteIncidence(
        spec=spec,
        d=d,
        v_side=tuple(cubes(spec, d - 1)),
        e_side=tuple(cubes(spec, d)),
        incidence=incidence,
    )
    logger.debug(f"B_H for {spec} d={d}: |V|={bh.num_vertices}, |E|={bh.num_edges}")
    return bh


def _check_degrees(bh: BipartiteIncidence) -> None:
    low = int(bh.vertex_degrees().min()) if bh.num_vertices else 0
    if low < 2:
        raise DomainError(f"Every hypervertex needs degree >= 2, found {low}")


def bass_determinant(bh: BipartiteIncidence) -> IntPoly:
    """det(I - vA + v^2 Q) of B_H as a polynomial in v, Q = D - I."""
    adjacency = bh.adjacency()
    degrees = adjacency.sum(axis=1)
    size = bh.size
    matrix: List[List[IntPoly]] = []
    for i in range(size):
        row = []
        for j in range(size):
            if i == j:
                row.append(IntPoly([1, 0, int(degrees[i]) - 1]))
            elif adjacency[i, j]:
                row.append(IntPoly([0, -1]))
            else:
                row.append(IntPoly())
        matrix.append(row)
    return poly_matrix_det(matrix)


def integer_charpoly(matrix: np.ndarray) -> IntPoly:
    """det(x I - M) of a square integer matrix."""
    size = matrix.shape[0]
    rows = [
        [IntPoly([-int(matrix[i, j]), 1]) if i == j else IntPoly([-int(matrix[i, j])]) for j in range(size)]
        for i in range(size)
    ]
    return poly_matrix_det(rows)


def _bass_schur(bh: BipartiteIncidence, degrees: Tuple[int, int]) -> Tuple[IntPoly, IntPoly, int]:
    """Reduce det(I - vA + v^2 Q) for an (a, b)-regular B_H to the smaller Gram matrix.

    With u = v^2, alpha = 1 + (a-1)u and beta = 1 + (b-1)u the determinant is
    alpha^(|V|-|E|) det(alpha beta I - u B^T B), or symmetrically
    beta^(|E|-|V|) det(alpha beta I - u B B^T).

    Returns:
        (determinant part, base, exponent) with the base power still to apply
    """
    a, b = degrees
    alpha = IntPoly([1, a - 1])
    beta = IntPoly([1, b - 1])
    incidence = bh.incidence.astype(np.int64)
    if bh.num_edges <= bh.num_vertices:
        gram = incidence.T @ incidence
        base, exponent = alpha, bh.num_vertices - bh.num_edges
    else:
        gram = incidence @ incidence.T
        base, exponent = beta, bh.num_edges - bh.num_vertices
    charpoly = integer_charpoly(gram)
    value = evaluate_homogeneous(charpoly, alpha * beta, IntPoly([0, 1]))
    return value, base, exponent


def bass_zeta(
    spec: LatticeSpec,
    d: int,
    limits: Optional[ResourceLimits] = None,
    direct: Optional[bool] = None,
) -> IntPoly:
    """1/zeta of the d-skeleton from the Bass determinant of B_H.

    1/zeta_H(u) = (1-u)^(-chi(B_H)) det(I - sqrt(u) A + u Q). The direct route
    interpolates the determinant in v = sqrt(u), checks that its odd part
    vanishes and substitutes v^2 = u; larger graphs go through the Gram-matrix
    reduction, which needs B_H to be biregular.

    Args:
        spec: Lattice side lengths
        d: Skeleton dimension
        limits: Resource bounds
        direct: Force the direct (True) or reduced (False) route; None picks by size

    Raises:
        DomainError: If some hypervertex has degree < 2, or B_H is irregular on the reduced route
        InvariantViolation: If an odd coefficient or a division remainder is nonzero
    """
    bh = build_bh(spec, d, limits)
    _check_degrees(bh)
    chi = bh.euler_characteristic()
    use_direct = bh.size <= BASS_DIRECT_MAX if direct is None else direct
    if use_direct:
        det_u = bass_determinant(bh).even_part_halved()
        base, exponent = IntPoly([1]), 0
    else:
        degrees = bh.regular_degrees()
        if degrees is None:
            raise DomainError("The reduced Bass route needs a biregular hypergraph")
        det_u, base, exponent = _bass_schur(bh, degrees)

    numerator, denominator = det_u, IntPoly([1])
    one_minus_u = IntPoly([1, -1])
    if chi < 0:
        numerator = numerator * one_minus_u ** (-chi)
    else:
        denominator = denominator * one_minus_u**chi
    if exponent > 0:
        numerator = numerator * base**exponent
    else:
        denominator = denominator * base ** (-exponent)
    result = numerator.exact_div(denominator)
    logger.debug(
        f"Bass zeta {spec} d={d}: chi(B_H)={chi}, {'direct' if use_direct else 'reduced'} "
        f"route, degree {result.degree}"
    )
    return result
