"""Exact determinants: Bareiss for integers, evaluation-interpolation for
integer polynomial matrices, and division-free expansion over any ring."""

import logging
from typing import Any, Dict, List, Sequence, Union

from cubezeta.algebra.polynomial import IntPoly, newton_interpolate
from cubezeta.core.errors import DomainError, ResourceLimitError

logger = logging.getLogger(__name__)

# Laplace expansion visits 2^n column subsets.
RING_DET_MAX_SIZE = 16

PolyEntry = Union[IntPoly, int]


def _check_square(matrix: Sequence[Sequence[Any]]) -> int:
    n = len(matrix)
    for row in matrix:
        if len(row) != n:
            raise DomainError(f"Matrix is not square: {n} rows, a row of length {len(row)}")
    return n


def bareiss_det(matrix: Sequence[Sequence[int]]) -> int:
    """Determinant of an integer matrix by fraction-free elimination.

    Args:
        matrix: Square matrix of Python ints

    Returns:
        The exact determinant
    """
    n = _check_square(matrix)
    if n == 0:
        return 1
    a = [list(row) for row in matrix]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        pivot = a[k][k]
        row_k = a[k]
        for i in range(k + 1, n):
            row_i = a[i]
            lead = row_i[k]
            if lead == 0:
                for j in range(k + 1, n):
                    row_i[j] = (pivot * row_i[j]) // prev
                continue
            for j in range(k + 1, n):
                row_i[j] = (pivot * row_i[j] - lead * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def _is_zero(entry: Any) -> bool:
    if isinstance(entry, int):
        return entry == 0
    return entry.is_zero()


def ring_det(matrix: Sequence[Sequence[Any]], one: Any = 1, zero: Any = 0) -> Any:
    """Division-free determinant over any commutative ring.

    Laplace expansion along rows with minors memoized by their column set, so
    the cost is n * 2^n ring multiplications. Works for ints, IntPoly, CycElem
    and CycPoly entries alike.

    Args:
        matrix: Square matrix
        one: Value returned for the empty matrix
        zero: Value returned when every expansion term vanishes

    Raises:
        ResourceLimitError: If the matrix is larger than RING_DET_MAX_SIZE
    """
    n = _check_square(matrix)
    if n == 0:
        return one
    if n > RING_DET_MAX_SIZE:
        raise ResourceLimitError("ring_det matrix size", n, RING_DET_MAX_SIZE)

    memo: Dict[int, Any] = {}

    def minor(mask: int) -> Any:
        if mask == 0:
            return one
        if mask in memo:
            return memo[mask]
        row = n - bin(mask).count("1")
        total = None
        position = 0
        for col in range(n):
            if not (mask >> col) & 1:
                continue
            entry = matrix[row][col]
            if not _is_zero(entry):
                sub = minor(mask & ~(1 << col))
                if not (isinstance(sub, int) and sub == 0):
                    term = entry * sub
                    if position % 2:
                        total = -term if total is None else total - term
                    else:
                        total = term if total is None else total + term
            position += 1
        result = zero if total is None else total
        memo[mask] = result
        return result

    return minor((1 << n) - 1)


def _interpolation_points(count: int) -> List[int]:
    """0, 1, -1, 2, -2, ... keeping the sample values small."""
    points = [0]
    k = 1
    while len(points) < count:
        points.append(k)
        if len(points) < count:
            points.append(-k)
        k += 1
    return points


def poly_matrix_det(matrix: Sequence[Sequence[PolyEntry]]) -> IntPoly:
    """Exact determinant of a matrix of integer polynomials.

    The determinant has degree at most the sum of the row-wise maximal entry
    degrees; it is sampled at that many plus one integer points with Bareiss
    elimination and recovered by Newton interpolation.

    Args:
        matrix: Square matrix of IntPoly (or int) entries

    Returns:
        The determinant as an IntPoly (the zero polynomial for singular input)
    """
    n = _check_square(matrix)
    if n == 0:
        return IntPoly([1])
    rows = [[e if isinstance(e, IntPoly) else IntPoly([e]) for e in row] for row in matrix]
    bound = 0
    for row in rows:
        row_degree = max(e.degree for e in row)
        if row_degree < 0:
            return IntPoly()
        bound += row_degree

    points = _interpolation_points(bound + 1)
    logger.debug(f"poly_matrix_det: size {n}, degree bound {bound}, {len(points)} samples")
    values = [bareiss_det([[e(t) for e in row] for row in rows]) for t in points]
    return newton_interpolate(points, values)
