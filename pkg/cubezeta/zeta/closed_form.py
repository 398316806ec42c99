"""Reciprocal zeta polynomials of the skeletons Y^(d) of a periodic cubical lattice.

Every route multiplies one factor per character z. Characters are grouped
into Galois orbits; the product over an orbit is formed in Z[zeta_N'][u] and
descended to Z[u] before the orbit products are multiplied together, so the
only floating point in this package lives in the quadrature module.
"""

import logging
from dataclasses import dataclass, field
from itertools import product
from math import comb
from typing import Dict, List, Optional, Tuple

from cubezeta.algebra import (
    CycPoly,
    CyclotomicRing,
    IntPoly,
    cyclotomic_ring,
    descend_to_integers,
    poly_product,
    ring_det,
)
from cubezeta.core.errors import DomainError, InvariantViolation
from cubezeta.core.models import (
    Direction,
    ResourceLimits,
    ZetaFactorRecord,
    ZetaMethod,
    ZetaReport,
)
from cubezeta.lattice import Character, LatticeSpec, exact_adjacency
from cubezeta.numtheory import divisors
from cubezeta.orbits import character_orbits
from cubezeta.psi import evaluate_homogeneous, psi_multi

logger = logging.getLogger(__name__)

LABEL_ONE_MINUS_U2 = "(1-u^2)"
LABEL_ONE_MINUS_U = "(1-u)"
LABEL_ONE_PLUS_BU = "(1+bu)"


@dataclass(frozen=True)
class SkeletonConstants:
    """alpha, beta, gamma and kappa of the d-skeleton in dimension q."""

    q: int
    d: int
    alpha: int
    beta: int
    gamma: int
    kappa: int


def skeleton_constants(q: int, d: int) -> SkeletonConstants:
    """Constants of the hypergraph (Y_(d-1), Y_d).

    alpha = 2q - 2d + 1 and beta = 2d - 1 are one less than the vertex and
    edge degrees, gamma = C(q, d) - C(q, d-1) and
    kappa = (q - d) C(q, d-1) + (d - 1) C(q, d).

    Raises:
        DomainError: If d is not in [1, q]
    """
    if q < 1 or not 1 <= d <= q:
        raise DomainError(f"Skeleton dimension must lie in [1, {q}], got {d}")
    return SkeletonConstants(
        q=q,
        d=d,
        alpha=2 * q - 2 * d + 1,
        beta=2 * d - 1,
        gamma=comb(q, d) - comb(q, d - 1),
        kappa=(q - d) * comb(q, d - 1) + (d - 1) * comb(q, d),
    )


@dataclass(frozen=True)
class Prefactor:
    """A power of 1 - u^2, 1 - u or 1 + b*u; negative exponents divide."""

    label: str
    base: IntPoly
    exponent: int
    b: Optional[int] = None

    @classmethod
    def one_minus_u2(cls, exponent: int) -> "Prefactor":
        return cls(LABEL_ONE_MINUS_U2, IntPoly([1, 0, -1]), exponent)

    @classmethod
    def one_minus_u(cls, exponent: int) -> "Prefactor":
        return cls(LABEL_ONE_MINUS_U, IntPoly([1, -1]), exponent)

    @classmethod
    def one_plus_bu(cls, b: int, exponent: int) -> "Prefactor":
        return cls(LABEL_ONE_PLUS_BU, IntPoly([1, b]), exponent, b)


@dataclass(frozen=True)
class ZetaFactor:
    """Psi_d(1 + (2q-1)u^2, u) raised to the fold multiplicity of d."""

    dvec: Tuple[int, ...]
    exponent: int
    psi: IntPoly
    value: IntPoly


def apply_prefactors(core: IntPoly, prefactors: Tuple[Prefactor, ...]) -> IntPoly:
    """Multiply by the positive powers, then divide the negative ones out exactly.

    Raises:
        InvariantViolation: If a negative power does not divide
    """
    result = core
    for pre in prefactors:
        if pre.exponent > 0:
            result = result * pre.base**pre.exponent
    for pre in prefactors:
        if pre.exponent < 0:
            result = result.exact_div(pre.base ** (-pre.exponent))
    return result


@dataclass(frozen=True)
class ZetaInverse:
    """1/zeta of a skeleton as a polynomial in u, with its factored form.

    ``core`` is the product over characters (or, for the top skeleton, over
    divisor tuples); ``poly`` is the core combined with the prefactors.
    """

    spec: LatticeSpec
    d: int
    method: str
    poly: IntPoly
    core: IntPoly
    prefactors: Tuple[Prefactor, ...] = ()
    factors: Tuple[ZetaFactor, ...] = field(default=())

    def __post_init__(self) -> None:
        if self.poly.coefficient(0) != 1:
            raise InvariantViolation(
                f"1/zeta of {self.spec} (d={self.d}) has constant term {self.poly.coefficient(0)}"
            )

    @property
    def degree(self) -> int:
        return self.poly.degree

    def expand(self) -> IntPoly:
        """Re-multiply the factored form from scratch."""
        if self.factors:
            core = poly_product(f.value**f.exponent for f in self.factors)
        else:
            core = self.core
        return apply_prefactors(core, self.prefactors)

    def prefactor_dict(self) -> Dict[str, object]:
        out: Dict[str, object] = {}
        for pre in self.prefactors:
            out[pre.label] = [pre.b, pre.exponent] if pre.label == LABEL_ONE_PLUS_BU else pre.exponent
        return out

    def to_report(self) -> ZetaReport:
        return ZetaReport(
            n=list(self.spec.sides),
            d=self.d,
            method=self.method,
            zeta_inverse=self.poly.to_list(),
            factors=[
                ZetaFactorRecord(dvec=list(f.dvec), exponent=f.exponent, psi=f.psi.to_list())
                for f in self.factors
            ],
            prefactors=self.prefactor_dict(),
        )


def _build(
    spec: LatticeSpec,
    d: int,
    method: ZetaMethod,
    core: IntPoly,
    prefactors: Tuple[Prefactor, ...],
    factors: Tuple[ZetaFactor, ...] = (),
) -> ZetaInverse:
    poly = apply_prefactors(core, prefactors)
    logger.debug(f"1/zeta {spec} d={d} via {method.value}: degree {poly.degree}")
    return ZetaInverse(
        spec=spec,
        d=d,
        method=method.value,
        poly=poly,
        core=core,
        prefactors=prefactors,
        factors=factors,
    )


def _orbit_product(
    spec: LatticeSpec,
    ring: CyclotomicRing,
    factor,
    limits: Optional[ResourceLimits],
) -> IntPoly:
    """prod over all characters of factor(chi), descended orbit by orbit."""
    orbits = character_orbits(spec.sides, limits)
    parts: List[IntPoly] = []
    for orbit in orbits:
        acc = CycPoly(ring, [1])
        for k in orbit:
            acc = acc * factor(Character(spec.sides, k))
        parts.append(descend_to_integers(acc))
    logger.debug(f"{spec}: {len(orbits)} character orbit(s)")
    return poly_product(parts)


def _fold_multiplicity(dvec: Tuple[int, ...]) -> int:
    return 2 ** sum(1 for d in dvec if d >= 3)


def zeta_top(spec: LatticeSpec, limits: Optional[ResourceLimits] = None) -> ZetaInverse:
    """1/zeta_Y(u) of the top skeleton through the divisor-tuple factorization.

    (1-u^2)^((q-1)|n|) * prod over d | n of Psi_d(1 + (2q-1)u^2, u)^eps(d),
    eps(d) = 2^#{i: d_i >= 3}, each Psi evaluated in homogeneous form.

    Raises:
        ResourceLimitError: If a Psi factor exceeds the degree bound
    """
    q = spec.q
    x_value = IntPoly([1, 0, 2 * q - 1])
    y_value = IntPoly([0, 1])
    factors: List[ZetaFactor] = []
    for dvec in product(*(divisors(n) for n in spec.sides)):
        psi = psi_multi(dvec, limits).poly
        value = evaluate_homogeneous(psi, x_value, y_value)
        if isinstance(value, int):
            value = IntPoly.constant(value)
        factors.append(ZetaFactor(tuple(dvec), _fold_multiplicity(dvec), psi, value))
    core = poly_product(f.value**f.exponent for f in factors)
    prefactors = (Prefactor.one_minus_u2((q - 1) * spec.volume),)
    return _build(spec, q, ZetaMethod.TOP, core, prefactors, tuple(factors))


def zeta_top_direct(spec: LatticeSpec, limits: Optional[ResourceLimits] = None) -> ZetaInverse:
    """1/zeta_Y(u) as the product of 1 - u sum(z_i + 1/z_i) + (2q-1)u^2 over all characters."""
    q = spec.q
    ring = cyclotomic_ring(spec.n_prime)

    def factor(chi: Character) -> CycPoly:
        z, zinv = chi.exact_z(ring.modulus)
        s = sum((a + b for a, b in zip(z, zinv)), ring.zero())
        return CycPoly(ring, [1, -s, 2 * q - 1])

    core = _orbit_product(spec, ring, factor, limits)
    prefactors = (Prefactor.one_minus_u2((q - 1) * spec.volume),)
    return _build(spec, q, ZetaMethod.TOP_DIRECT, core, prefactors)


def _skeleton_det(adjacency, constants: SkeletonConstants, ring: CyclotomicRing) -> CycPoly:
    """det((1 + alpha u)(1 + beta u) I - u A) over Z[zeta][u]."""
    a, b = constants.alpha, constants.beta
    size = len(adjacency)
    matrix = [
        [
            CycPoly(ring, [1, (a + b) - adjacency[i][j], a * b])
            if i == j
            else CycPoly(ring, [0, -adjacency[i][j]])
            for j in range(size)
        ]
        for i in range(size)
    ]
    return ring_det(matrix, one=CycPoly(ring, [1]), zero=CycPoly(ring))


def zeta_general_d(
    spec: LatticeSpec, d: int, limits: Optional[ResourceLimits] = None
) -> ZetaInverse:
    """1/zeta of the d-skeleton from the twisted adjacency determinants.

    With gamma >= 0 the up-form
        (1-u)^(kappa|n|) (1+beta u)^(gamma|n|) prod_z det((1+alpha u)(1+beta u) - u A^up_(d-1)(z))
    is used, otherwise the down-form with A^down_d(z) and (1+alpha u)^(-gamma|n|).
    Either way the determinant is taken over the smaller of the two matrices.

    Raises:
        DomainError: If d is not in [1, q]
    """
    constants = skeleton_constants(spec.q, d)
    ring = cyclotomic_ring(spec.n_prime)
    if constants.gamma >= 0:
        direction, matrix_d = Direction.UP, d - 1
        scaled = Prefactor.one_plus_bu(constants.beta, constants.gamma * spec.volume)
    else:
        direction, matrix_d = Direction.DOWN, d
        scaled = Prefactor.one_plus_bu(constants.alpha, -constants.gamma * spec.volume)

    def factor(chi: Character) -> CycPoly:
        adjacency = exact_adjacency(spec, matrix_d, chi, direction, ring.modulus)
        return _skeleton_det(adjacency, constants, ring)

    core = _orbit_product(spec, ring, factor, limits)
    prefactors = (Prefactor.one_minus_u(constants.kappa * spec.volume), scaled)
    return _build(spec, d, ZetaMethod.GENERAL, core, prefactors)


def _codim1_weight(ell: int) -> int:
    """(2 - l) 2^(l-1), equal to 1 at l = 0."""
    return 1 if ell == 0 else (2 - ell) * 2 ** (ell - 1)


def zeta_codim1(spec: LatticeSpec, limits: Optional[ResourceLimits] = None) -> ZetaInverse:
    """1/zeta of the (q-1)-skeleton from the closed form of its determinant.

    (1-u)^(kappa|n|) (1+3u)^(gamma|n|) prod_z F(u, z) with kappa = q(3q-5)/2,
    gamma = q(q-3)/2 and
        F = sum_l (2-l) 2^(l-1) e_l(w) X^(q-l) u^l,  X = 1 - u S + 3(2q-3) u^2,
    where w_i = 2 + z_i + 1/z_i and S = sum_i (z_i + 1/z_i). For q = 2 the
    exponent gamma is negative and the division is exact.

    Raises:
        DomainError: If q < 2
    """
    q = spec.q
    if q < 2:
        raise DomainError(f"The codimension-one skeleton needs q >= 2, got q={q}")
    ring = cyclotomic_ring(spec.n_prime)
    kappa = q * (3 * q - 5) // 2
    gamma = q * (q - 3) // 2

    def factor(chi: Character) -> CycPoly:
        z, zinv = chi.exact_z(ring.modulus)
        two_cos = [a + b for a, b in zip(z, zinv)]
        s = sum(two_cos, ring.zero())
        elementary = [ring.one()] + [ring.zero()] * q
        for t in two_cos:
            w = t + 2
            for ell in range(q, 0, -1):
                elementary[ell] = elementary[ell] + w * elementary[ell - 1]
        x_poly = CycPoly(ring, [1, -s, 3 * (2 * q - 3)])
        x_powers = [CycPoly(ring, [1])]
        for _ in range(q):
            x_powers.append(x_powers[-1] * x_poly)
        total = CycPoly(ring)
        for ell in range(q + 1):
            weight = _codim1_weight(ell)
            if weight == 0:
                continue
            u_power = CycPoly(ring, [0] * ell + [elementary[ell] * weight])
            total = total + x_powers[q - ell] * u_power
        return total

    core = _orbit_product(spec, ring, factor, limits)
    prefactors = (
        Prefactor.one_minus_u(kappa * spec.volume),
        Prefactor.one_plus_bu(3, gamma * spec.volume),
    )
    return _build(spec, q - 1, ZetaMethod.CODIM1, core, prefactors)


def zeta_inverse(
    spec: LatticeSpec,
    d: Optional[int] = None,
    method: ZetaMethod = ZetaMethod.AUTO,
    limits: Optional[ResourceLimits] = None,
) -> ZetaInverse:
    """Dispatch to one of the closed-form routes; d defaults to the top dimension.

    ``auto`` picks the divisor factorization for d = q and the determinant
    form otherwise.

    Raises:
        DomainError: If the route does not apply to d
    """
    method = ZetaMethod(method)
    d = spec.q if d is None else d
    skeleton_constants(spec.q, d)
    if method == ZetaMethod.AUTO:
        method = ZetaMethod.TOP if d == spec.q else ZetaMethod.GENERAL
    if method in (ZetaMethod.TOP, ZetaMethod.TOP_DIRECT):
        if d != spec.q:
            raise DomainError(f"Method {method.value} computes d = q = {spec.q}, got d={d}")
        return zeta_top(spec, limits) if method == ZetaMethod.TOP else zeta_top_direct(spec, limits)
    if method == ZetaMethod.CODIM1:
        if d != spec.q - 1:
            raise DomainError(f"Method codim1 computes d = q-1 = {spec.q - 1}, got d={d}")
        return zeta_codim1(spec, limits)
    if method == ZetaMethod.GENERAL:
        return zeta_general_d(spec, d, limits)
    raise DomainError(f"Method {method.value} is not a closed-form route")
