"""Closed-form spectra of the lattice operators and their numerical cross-checks."""

import logging
from math import comb
from typing import List, Optional, Sequence, Tuple

import numpy as np

from cubezeta.core.models import Direction, ResourceLimits, SpectrumReport
from cubezeta.lattice.cubes import Character, LatticeSpec, cube_count
from cubezeta.lattice.twisted import (
    adjacency_array,
    assembled_coboundary,
    assembled_incidence,
    twisted_adjacency,
    twisted_coboundary,
    twisted_laplacian,
)

logger = logging.getLogger(__name__)

DEFAULT_TOLERANCE = 1e-9

Spectrum = List[Tuple[float, int]]


def group_eigenvalues(values: Sequence[float], tol: float = DEFAULT_TOLERANCE) -> Spectrum:
    """Sort and merge values closer than tol into (value, multiplicity) pairs."""
    grouped: Spectrum = []
    for value in sorted(float(v) for v in values):
        if grouped and abs(value - grouped[-1][0]) <= tol:
            grouped[-1] = (grouped[-1][0], grouped[-1][1] + 1)
        else:
            grouped.append((value, 1))
    # snap values that are zero up to rounding
    return [(0.0 if abs(v) <= tol else v, m) for v, m in grouped]


def expand_spectrum(spectrum: Spectrum) -> np.ndarray:
    """Flat ascending array with every value repeated by its multiplicity."""
    values = [v for v, m in spectrum for _ in range(m)]
    return np.sort(np.array(values, dtype=float))


def spectra_match(a: Sequence[float], b: Sequence[float], tol: float = DEFAULT_TOLERANCE) -> bool:
    """Check if two multisets of reals agree after sorting."""
    a, b = np.sort(np.asarray(a, dtype=float)), np.sort(np.asarray(b, dtype=float))
    return a.shape == b.shape and bool(np.all(np.abs(a - b) < tol))


def spectrum_adown_q(spec: LatticeSpec) -> List[float]:
    """Eigenvalues sum_j 2(1 + cos(2*pi*k_j/n_j)) of A^down_q, one per character."""
    return sorted(float(np.sum(chi.w())) for chi in spec.characters())


def laplacian_spectrum(
    spec: LatticeSpec, d: int, tol: float = DEFAULT_TOLERANCE
) -> Spectrum:
    """Spectrum of L^up_d on the whole lattice.

    Each character contributes 2q - 2 sum cos(2*pi*k_i/n_i) with multiplicity
    C(q-1, d); the kernel adds C(q-1, d-1) |n| further zeros.
    """
    cube_count(spec, d)
    q = spec.q
    values: List[float] = []
    generic = comb(q - 1, d)
    for chi in spec.characters():
        values.extend([2 * q - chi.two_cos_sum()] * generic)
    extra = (comb(q - 1, d - 1) if d >= 1 else 0) * spec.volume
    values.extend([0.0] * extra)
    return group_eigenvalues(values, tol)


def twisted_union_spectrum(
    spec: LatticeSpec, d: int, operator: str, direction: Direction = Direction.UP
) -> List[float]:
    """Union over all characters of the block eigenvalues of one operator."""
    values: List[float] = []
    for chi in spec.characters():
        if operator == "adjacency":
            block = twisted_adjacency(spec, d, chi, direction)
        else:
            block = twisted_laplacian(spec, d, chi, direction)
        values.extend(block.eigenvalues().tolist())
    return sorted(values)


def assembled_adjacency_spectrum(
    spec: LatticeSpec, d: int, direction: Direction, limits: Optional[ResourceLimits] = None
) -> List[float]:
    """Eigenvalues of the untwisted A^up_d or A^down_d built from the full incidence."""
    if Direction(direction) == Direction.UP:
        b = assembled_incidence(spec, d, limits).astype(float)
        matrix = b.T @ b
    else:
        b = assembled_incidence(spec, d - 1, limits).astype(float)
        matrix = b @ b.T
    return sorted(np.linalg.eigvalsh(matrix).tolist())


def assembled_laplacian_spectrum(
    spec: LatticeSpec, d: int, limits: Optional[ResourceLimits] = None
) -> List[float]:
    """Eigenvalues of the untwisted L^up_d = delta_d^T delta_d, 0 <= d <= q-1."""
    b = assembled_coboundary(spec, d, limits).astype(float)
    return sorted(np.linalg.eigvalsh(b.T @ b).tolist())


def kernel_dimension(matrix: np.ndarray, tol: float = DEFAULT_TOLERANCE) -> int:
    """Dimension of the kernel of a linear map, singular values below tol counted as zero."""
    cols = matrix.shape[1]
    if matrix.shape[0] == 0 or cols == 0:
        return cols
    singular = np.linalg.svd(matrix, compute_uv=False)
    return cols - int(np.sum(singular > tol))


def coboundary_kernels(spec: LatticeSpec, d: int, chi: Character) -> Tuple[int, int]:
    """(dim ker delta_d(z), dim ker delta_(d-1)(z)*), both on d-cochains."""
    delta = twisted_coboundary(spec, d, chi).data
    delta_prev_dual = twisted_coboundary(spec, d - 1, chi, dual=True).data
    return kernel_dimension(delta), kernel_dimension(delta_prev_dual)


def coboundary_square_norm(spec: LatticeSpec, d: int, chi: Character) -> float:
    """Largest entry of delta_(d+1)(z) delta_d(z) in absolute value."""
    product = twisted_coboundary(spec, d + 1, chi).data @ twisted_coboundary(spec, d, chi).data
    return float(np.max(np.abs(product))) if product.size else 0.0


def hodge_defect(spec: LatticeSpec, d: int, chi: Character) -> float:
    """Largest deviation of L^up_d + L^down_d from (2q - sum(z + 1/z)) I."""
    total = (
        twisted_laplacian(spec, d, chi, Direction.UP).data
        + twisted_laplacian(spec, d, chi, Direction.DOWN).data
    )
    scalar = 2 * spec.q - chi.two_cos_sum()
    return float(np.max(np.abs(total - scalar * np.eye(total.shape[0])))) if total.size else 0.0


def down_up_defect(spec: LatticeSpec, d: int, chi: Character) -> float:
    """Compare Spec A^down_d(z) with Spec A^up_(d-1)(z) padded by zeros.

    Only meaningful when C(q, d) >= C(q, d-1), i.e. q >= 2d - 1.
    """
    down = twisted_adjacency(spec, d, chi, Direction.DOWN).eigenvalues()
    up = twisted_adjacency(spec, d - 1, chi, Direction.UP).eigenvalues()
    padded = np.concatenate([up, np.zeros(len(down) - len(up))])
    return float(np.max(np.abs(np.sort(down) - np.sort(padded))))


def charpoly_aup1_closed(q: int, chi: Character, u: float) -> float:
    """Discrepancy between det(t - u A^up_1(z)) and its closed form, coefficientwise in t.

    The closed form is sum_k (2-k) 2^(k-1) e_k(w) (t - u e_1(w))^(q-k) u^k with
    w_i = 2 + z_i + 1/z_i.
    """
    matrix = adjacency_array(q, 1, chi.z(), Direction.UP)
    lhs = np.real_if_close(np.poly(u * matrix)) if matrix.size else np.array([1.0])
    w = chi.w()
    e = np.poly(-w)  # e[k] = e_k(w)
    base = np.array([1.0, -u * e[1]])
    rhs = np.zeros(q + 1)
    for k in range(q + 1):
        coef = (2 - k) * 2.0 ** (k - 1) * e[k] * u**k
        term = np.array([1.0])
        for _ in range(q - k):
            term = np.polymul(term, base)
        rhs[q + 1 - len(term) :] += coef * term
    return float(np.max(np.abs(np.asarray(lhs, dtype=complex) - rhs)))


def spectrum_report(spec: LatticeSpec, d: int, operator: str, spectrum: Spectrum) -> SpectrumReport:
    return SpectrumReport(
        n=list(spec.sides),
        d=d,
        operator=operator,
        eigenvalues=[(float(v), int(m)) for v, m in spectrum],
    )
