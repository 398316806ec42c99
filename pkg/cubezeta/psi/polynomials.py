"""Cyclotomic-like polynomials of divisor vectors and of their Galois orbits.

For d = (d_1, ..., d_q) the roots are c(j) = sum_i 2cos(2*pi*j_i/d_i) over the
index box J_d1 x ... x J_dq. Every root is handled exactly in Z[zeta_N'] with
N' = lcm(d); equal roots are detected by comparing coordinates, never numerically.
"""

import logging
from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from cubezeta.algebra import (
    CycElem,
    IntPoly,
    descend_to_integers,
    embed_two_cos,
    poly_product,
    product_of_linear_factors,
)
from cubezeta.core.errors import DomainError, InvariantViolation, ResourceLimitError
from cubezeta.core.models import OrbitPolynomialRecord, PsiReport, ResourceLimits
from cubezeta.numtheory import j_set, phi_tilde
from cubezeta.orbits import (
    DVec,
    DVecLike,
    Orbit,
    as_dvec,
    is_diagonal,
    is_iota_invariant,
    orbit_decompose,
)

logger = logging.getLogger(__name__)


def c_value(dvec: DVecLike, j: Sequence[int], modulus: Optional[int] = None) -> CycElem:
    """The root c(j) = sum_i 2cos(2*pi*j_i/d_i) as an element of Z[zeta_N'].

    Args:
        dvec: Divisor vector
        j: Index tuple with j_i in J_di
        modulus: Ring modulus, a multiple of every d_i; defaults to N'
    """
    dvec = as_dvec(dvec)
    if len(j) != dvec.q:
        raise DomainError(f"Index tuple {tuple(j)} does not match {dvec}")
    N = modulus or dvec.n_prime
    terms = [embed_two_cos(N, d, ji) for d, ji in zip(dvec, j)]
    total = terms[0]
    for term in terms[1:]:
        total = total + term
    return total


@dataclass(frozen=True)
class OrbitPolynomial:
    """Psi_d(x; O) for a Galois-stable set O, kept as its fiber factorization.

    ``fibers`` pairs each fiber size k with the product of the distinct roots
    whose fiber has k elements, so Psi_d(x; O) = prod_k core_k ** k. A single
    Galois orbit has one fiber size; unions of orbits may have several.
    """

    dvec: DVec
    orbit: Orbit
    roots: Tuple[CycElem, ...]
    fibers: Tuple[Tuple[int, IntPoly], ...]

    @cached_property
    def poly(self) -> IntPoly:
        """Psi_d(x; O) = prod over fiber sizes k of core_k ** k."""
        return poly_product(core**k for k, core in self.fibers)

    @property
    def irr_core(self) -> IntPoly:
        """Product of x - c over the distinct roots, the irreducible core of an orbit."""
        return poly_product(core for _, core in self.fibers)

    @property
    def multiplicity(self) -> Optional[int]:
        """Common fiber size, None when the fibers of O differ in size."""
        return self.fibers[0][0] if len(self.fibers) == 1 else None

    @property
    def representative(self) -> Tuple[int, ...]:
        return self.orbit[0]

    @property
    def distinct_roots(self) -> int:
        return len({r.key() for r in self.roots})

    def root_multiset(self) -> Counter:
        """Exact root multiset, comparable between orbits of the same divisor vector."""
        return Counter(r.key() for r in self.roots)

    def to_record(self) -> OrbitPolynomialRecord:
        return OrbitPolynomialRecord(
            orbit_rep=list(self.representative),
            poly=self.poly.to_list(),
            irr_core=self.irr_core.to_list(),
            multiplicity=self.multiplicity,
            irreducible=is_irreducible(self),
        )


@dataclass(frozen=True)
class PsiPolynomial:
    """Psi_d(x), optionally with its factorization over the Galois orbits."""

    dvec: DVec
    poly: IntPoly
    orbit_polys: Optional[Tuple[OrbitPolynomial, ...]] = None

    @property
    def degree(self) -> int:
        return self.poly.degree

    def homogeneous(self) -> Dict[Tuple[int, int], int]:
        """Coefficients of y^deg * Psi(x/y)."""
        return homogenize(self.poly)

    def to_report(self, orbit_split: bool = False) -> PsiReport:
        orbits = None
        if orbit_split and self.orbit_polys is not None:
            orbits = [op.to_record() for op in self.orbit_polys]
        return PsiReport(
            dvec=list(self.dvec.entries),
            poly=self.poly.to_list(),
            degree=self.degree,
            orbits=orbits,
        )


def psi_orbit(
    dvec: DVecLike, orbit: Iterable[Sequence[int]], limits: Optional[ResourceLimits] = None
) -> OrbitPolynomial:
    """Psi_d(x; O) for a Galois-stable set O of index tuples.

    Roots are grouped into fibers of equal value. The Galois action preserves
    fiber sizes, so the distinct roots of each size form a stable set whose
    product descends to Z[x] on its own.

    Raises:
        NotGaloisStableError: If O is not closed under the Galois action
        ResourceLimitError: If |O| exceeds max_degree
    """
    dvec = as_dvec(dvec)
    limits = limits or ResourceLimits()
    members = tuple(sorted(tuple(j) for j in orbit))
    if not members:
        raise DomainError("An orbit must not be empty")
    if len(members) > limits.max_degree:
        raise ResourceLimitError("orbit polynomial degree", len(members), limits.max_degree)

    roots = tuple(c_value(dvec, j) for j in members)
    fibers: Dict[Tuple[int, ...], int] = {}
    first: Dict[Tuple[int, ...], CycElem] = {}
    for root in roots:
        key = root.key()
        first.setdefault(key, root)
        fibers[key] = fibers.get(key, 0) + 1

    by_size: Dict[int, List[CycElem]] = {}
    for key, size in fibers.items():
        by_size.setdefault(size, []).append(first[key])
    cores = tuple(
        (size, descend_to_integers(product_of_linear_factors(by_size[size])))
        for size in sorted(by_size)
    )
    return OrbitPolynomial(dvec=dvec, orbit=members, roots=roots, fibers=cores)


def psi_multi(
    dvec: DVecLike,
    limits: Optional[ResourceLimits] = None,
    by_orbit: bool = True,
) -> PsiPolynomial:
    """Psi_d(x) = prod over the index box of (x - c(j)).

    Args:
        dvec: Divisor vector
        limits: Resource bounds; the degree prod phi~(d_i) may not exceed max_degree
        by_orbit: Multiply per Galois orbit, each descended to Z[x] first.
            Otherwise the whole box is multiplied out in Z[zeta_N'][x] and
            descended once.

    Raises:
        ResourceLimitError: If the degree bound is exceeded
    """
    dvec = as_dvec(dvec)
    limits = limits or ResourceLimits()
    if dvec.box_size > limits.max_degree:
        raise ResourceLimitError("Psi degree", dvec.box_size, limits.max_degree)

    if not by_orbit:
        axes = [j_set(d).members for d in dvec]
        roots = [c_value(dvec, j) for j in _box(axes)]
        poly = descend_to_integers(product_of_linear_factors(roots))
        return PsiPolynomial(dvec=dvec, poly=poly)

    decomposition = orbit_decompose(dvec, limits)
    orbit_polys = tuple(psi_orbit(dvec, orbit, limits) for orbit in decomposition)
    for op in orbit_polys:
        # a single orbit always has fibers of one size
        if op.multiplicity is None:
            sizes = [k for k, _ in op.fibers]
            raise InvariantViolation(
                f"Fibers of unequal sizes {sizes} on {dvec} {op.representative}"
            )
    poly = poly_product(op.poly for op in orbit_polys)
    logger.debug(f"Psi{dvec}: degree {poly.degree} from {len(orbit_polys)} orbit(s)")
    return PsiPolynomial(dvec=dvec, poly=poly, orbit_polys=orbit_polys)


def _box(axes: Sequence[Sequence[int]]) -> List[Tuple[int, ...]]:
    result: List[Tuple[int, ...]] = [()]
    for values in axes:
        result = [t + (v,) for t in result for v in values]
    return result


def is_irreducible(orbit_poly: OrbitPolynomial) -> bool:
    """True iff the orbit has multiplicity one and pairwise distinct roots."""
    return orbit_poly.multiplicity == 1 and orbit_poly.distinct_roots == len(orbit_poly.orbit)


def half_polynomial(
    m: int, orbit: Iterable[Sequence[int]], limits: Optional[ResourceLimits] = None
) -> IntPoly:
    """Square root of Psi_(m,m)(x; O) for a swap-invariant, non-diagonal orbit.

    Raises:
        DomainError: If O is not an orbit of (m, m), is diagonal, is not
            swap-invariant, or phi~(m) is odd
    """
    members = tuple(sorted(tuple(j) for j in orbit))
    if not members or any(len(j) != 2 for j in members):
        raise DomainError("half_polynomial needs a non-empty orbit of pairs")
    if phi_tilde(m) % 2:
        raise DomainError(f"phi~({m}) = {phi_tilde(m)} is odd")
    decomposition = orbit_decompose((m, m), limits)
    if decomposition.orbit_of(members[0]) != members:
        raise DomainError(f"{members[0]}... is not a Galois orbit of ({m}, {m})")
    if is_diagonal(members):
        raise DomainError("The diagonal orbit has no half polynomial")
    if not is_iota_invariant(members):
        raise DomainError("The orbit is not invariant under swapping coordinates")
    return psi_orbit((m, m), members, limits).poly.sqrt()


def homogenize(p: Union[IntPoly, PsiPolynomial]) -> Dict[Tuple[int, int], int]:
    """Bivariate coefficient table {(i, deg - i): c_i} of y^deg * p(x/y)."""
    poly = p.poly if isinstance(p, PsiPolynomial) else p
    D = poly.degree
    return {(i, D - i): c for i, c in enumerate(poly.coeffs) if c}


def evaluate_homogeneous(p: IntPoly, x_value, y_value):
    """Evaluate y^deg * p(x/y) at ring elements X and Y by homogeneous Horner steps."""
    D = p.degree
    if D < 0:
        return 0
    y_powers = [1]
    for _ in range(D):
        y_powers.append(y_powers[-1] * y_value)
    result = p.coeffs[D]
    for i in range(D - 1, -1, -1):
        result = result * x_value + p.coeffs[i] * y_powers[D - i]
    return result
