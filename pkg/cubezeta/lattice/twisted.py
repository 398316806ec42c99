"""Twisted incidence, adjacency, coboundary and Laplacian matrices.

After Fourier transform over the torus every operator splits into blocks
indexed by a character z. All blocks come from one sparsity pattern: the
entry (eta, sigma) with sigma a facet of eta, missing direction j, is
1 + z_j for the incidence operator and sgn(eta, sigma) (z_j - 1) for the
coboundary. Numeric blocks are complex numpy arrays; exact blocks hold
elements of Z[zeta_N'].
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Any, List, Optional, Sequence, Tuple

import numpy as np

from cubezeta.algebra import CycElem, cyclotomic_ring
from cubezeta.core.errors import DomainError, ResourceLimitError
from cubezeta.core.models import Direction, MatrixKind, ResourceLimits
from cubezeta.lattice.cubes import Character, LatticeSpec, boundary_sign, cube_count, simplices

logger = logging.getLogger(__name__)

# (row, col, missing direction, sign)
Pattern = Tuple[Tuple[int, int, int, int], ...]


@lru_cache(maxsize=256)
def facet_pattern(q: int, d: int) -> Pattern:
    """Nonzero positions of the maps from d-simplices to (d+1)-simplices."""
    rows = simplices(q, d + 1)
    cols = {sigma: c for c, sigma in enumerate(simplices(q, d))}
    entries = []
    for r, eta in enumerate(rows):
        for j in eta:
            sigma = tuple(i for i in eta if i != j)
            entries.append((r, cols[sigma], j, boundary_sign(eta, sigma)))
    return tuple(entries)


def _shape(q: int, d: int) -> Tuple[int, int]:
    return len(simplices(q, d + 1)), len(simplices(q, d))


@dataclass(frozen=True)
class TwistedMatrix:
    """One character block of a lattice operator."""

    kind: MatrixKind
    d: int
    character: Character
    data: np.ndarray

    @property
    def size(self) -> Tuple[int, int]:
        return self.data.shape

    def is_hermitian(self, tol: float = 1e-12) -> bool:
        return self.data.shape[0] == self.data.shape[1] and bool(
            np.allclose(self.data, self.data.conj().T, atol=tol)
        )

    def eigenvalues(self) -> np.ndarray:
        """Ascending eigenvalues of a Hermitian block."""
        return np.linalg.eigvalsh(self.data) if self.data.size else np.zeros(0)


def _check_character(spec: LatticeSpec, chi: Character) -> None:
    if chi.sides != spec.sides:
        raise DomainError(f"Character for sides {chi.sides} used on lattice {spec.sides}")


def _incidence_array(q: int, d: int, z: np.ndarray) -> np.ndarray:
    out = np.zeros(_shape(q, d), dtype=complex)
    for r, c, j, _ in facet_pattern(q, d):
        out[r, c] = 1.0 + z[j]
    return out


def _coboundary_array(q: int, d: int, z: np.ndarray) -> np.ndarray:
    out = np.zeros(_shape(q, d), dtype=complex)
    for r, c, j, sign in facet_pattern(q, d):
        out[r, c] = sign * (z[j] - 1.0)
    return out


def twisted_incidence(
    spec: LatticeSpec, d: int, chi: Character, dual: bool = False
) -> TwistedMatrix:
    """M_d(z) of size C(q, d+1) x C(q, d), or its adjoint M_d(z)* when ``dual``.

    Raises:
        DomainError: If d is not in [0, q-1]
    """
    _check_character(spec, chi)
    if not 0 <= d <= spec.q - 1:
        raise DomainError(f"Incidence M_d needs 0 <= d <= {spec.q - 1}, got {d}")
    data = _incidence_array(spec.q, d, chi.z())
    if dual:
        return TwistedMatrix(MatrixKind.INCIDENCE_DUAL, d, chi, data.conj().T)
    return TwistedMatrix(MatrixKind.INCIDENCE, d, chi, data)


def adjacency_array(q: int, d: int, z: np.ndarray, direction: Direction) -> np.ndarray:
    """A^up_d = M_d* M_d or A^down_d = M_(d-1) M_(d-1)*, any d in [0, q]."""
    if direction == Direction.UP:
        m = _incidence_array(q, d, z)
        return m.conj().T @ m
    m = _incidence_array(q, d - 1, z)
    return m @ m.conj().T


def twisted_adjacency(
    spec: LatticeSpec, d: int, chi: Character, direction: Direction
) -> TwistedMatrix:
    """Hermitian block A^up_d(z) (0 <= d <= q-1) or A^down_d(z) (1 <= d <= q).

    Raises:
        DomainError: If d is out of range for the direction
    """
    _check_character(spec, chi)
    direction = Direction(direction)
    if direction == Direction.UP and not 0 <= d <= spec.q - 1:
        raise DomainError(f"A^up_d needs 0 <= d <= {spec.q - 1}, got {d}")
    if direction == Direction.DOWN and not 1 <= d <= spec.q:
        raise DomainError(f"A^down_d needs 1 <= d <= {spec.q}, got {d}")
    kind = MatrixKind.ADJACENCY_UP if direction == Direction.UP else MatrixKind.ADJACENCY_DOWN
    return TwistedMatrix(kind, d, chi, adjacency_array(spec.q, d, chi.z(), direction))


def twisted_coboundary(
    spec: LatticeSpec, d: int, chi: Character, dual: bool = False
) -> TwistedMatrix:
    """delta_d(z), entries sgn(eta, sigma)(z_j - 1); empty outside 0 <= d <= q-1."""
    _check_character(spec, chi)
    if not -1 <= d <= spec.q:
        raise DomainError(f"delta_d needs -1 <= d <= {spec.q}, got {d}")
    data = _coboundary_array(spec.q, d, chi.z())
    if dual:
        return TwistedMatrix(MatrixKind.COBOUNDARY_DUAL, d, chi, data.conj().T)
    return TwistedMatrix(MatrixKind.COBOUNDARY, d, chi, data)


def twisted_laplacian(
    spec: LatticeSpec, d: int, chi: Character, direction: Direction
) -> TwistedMatrix:
    """L^up_d(z) = delta_d* delta_d or L^down_d(z) = delta_(d-1) delta_(d-1)*.

    Raises:
        DomainError: If d is not in [0, q]
    """
    _check_character(spec, chi)
    direction = Direction(direction)
    if not 0 <= d <= spec.q:
        raise DomainError(f"Laplacians need 0 <= d <= {spec.q}, got {d}")
    z = chi.z()
    if direction == Direction.UP:
        m = _coboundary_array(spec.q, d, z)
        return TwistedMatrix(MatrixKind.LAPLACIAN_UP, d, chi, m.conj().T @ m)
    m = _coboundary_array(spec.q, d - 1, z)
    return TwistedMatrix(MatrixKind.LAPLACIAN_DOWN, d, chi, m @ m.conj().T)


# Exact blocks over Z[zeta_N']


def _ring_matmul(a: Sequence[Sequence[Any]], b: Sequence[Sequence[Any]], zero: Any) -> List[List[Any]]:
    rows, inner = len(a), len(b)
    cols = len(b[0]) if b else 0
    out = [[zero for _ in range(cols)] for _ in range(rows)]
    for i in range(rows):
        for t in range(inner):
            x = a[i][t]
            if x.is_zero():
                continue
            for j in range(cols):
                y = b[t][j]
                if not y.is_zero():
                    out[i][j] = out[i][j] + x * y
    return out


def exact_incidence(
    spec: LatticeSpec, d: int, chi: Character, modulus: int = 0
) -> Tuple[List[List[CycElem]], List[List[CycElem]]]:
    """M_d(z) and M_d(z)* with entries in Z[zeta_M], M = lcm of the sides by default."""
    _check_character(spec, chi)
    z, zinv = chi.exact_z(modulus)
    ring = z[0].ring
    rows, cols = _shape(spec.q, d)
    m = [[ring.zero() for _ in range(cols)] for _ in range(rows)]
    m_dual = [[ring.zero() for _ in range(rows)] for _ in range(cols)]
    for r, c, j, _ in facet_pattern(spec.q, d):
        m[r][c] = z[j] + 1
        m_dual[c][r] = zinv[j] + 1
    return m, m_dual


def exact_adjacency(
    spec: LatticeSpec, d: int, chi: Character, direction: Direction, modulus: int = 0
) -> List[List[CycElem]]:
    """A^up_d(z) or A^down_d(z) over Z[zeta_M], same index ranges as the numeric block."""
    direction = Direction(direction)
    ring = cyclotomic_ring(modulus or spec.n_prime)
    if direction == Direction.UP:
        m, m_dual = exact_incidence(spec, d, chi, ring.modulus)
        if not m:
            size = len(simplices(spec.q, d))
            return [[ring.zero() for _ in range(size)] for _ in range(size)]
        return _ring_matmul(m_dual, m, ring.zero())
    m, m_dual = exact_incidence(spec, d - 1, chi, ring.modulus)
    if not m_dual:
        size = len(simplices(spec.q, d))
        return [[ring.zero() for _ in range(size)] for _ in range(size)]
    return _ring_matmul(m, m_dual, ring.zero())


# Untwisted operators on the whole lattice


def _cube_index(spec: LatticeSpec, d: int):
    sigma_index = {sigma: i for i, sigma in enumerate(simplices(spec.q, d))}
    volume = spec.volume

    def index(sigma, v) -> int:
        return sigma_index[sigma] * volume + int(np.ravel_multi_index(v, spec.sides))

    return index


def _assembled(spec: LatticeSpec, d: int, signed: bool, limits: Optional[ResourceLimits]) -> np.ndarray:
    limits = limits or ResourceLimits()
    if not 0 <= d <= spec.q - 1:
        raise DomainError(f"Assembled maps need 0 <= d <= {spec.q - 1}, got {d}")
    rows, cols = cube_count(spec, d + 1), cube_count(spec, d)
    if rows + cols > limits.max_bipartite_size:
        raise ResourceLimitError("assembled lattice operator", rows + cols, limits.max_bipartite_size)
    lo = _cube_index(spec, d)
    hi = _cube_index(spec, d + 1)
    out = np.zeros((rows, cols), dtype=np.int64)
    for eta in simplices(spec.q, d + 1):
        for w in spec.vertices():
            r = hi(eta, w)
            for j in eta:
                sigma = tuple(i for i in eta if i != j)
                sign = boundary_sign(eta, sigma) if signed else 1
                shifted = list(w)
                shifted[j] = (w[j] + 1) % spec.sides[j]
                out[r, lo(sigma, tuple(shifted))] += sign
                out[r, lo(sigma, w)] += -sign if signed else sign
    return out


def assembled_incidence(
    spec: LatticeSpec, d: int, limits: Optional[ResourceLimits] = None
) -> np.ndarray:
    """0/1 matrix of the face relation between Y_d (columns) and Y_(d+1) (rows)."""
    return _assembled(spec, d, signed=False, limits=limits)


def assembled_coboundary(
    spec: LatticeSpec, d: int, limits: Optional[ResourceLimits] = None
) -> np.ndarray:
    """Signed coboundary from d-cochains to (d+1)-cochains of the whole lattice."""
    return _assembled(spec, d, signed=True, limits=limits)
