"""The zeta, psi, orbits and spectrum subcommands as plain functions returning reports."""

import logging
from typing import Optional, Sequence, Union

from cubezeta.core.errors import DomainError
from cubezeta.core.models import (
    Direction,
    OrbitReport,
    PsiReport,
    ResourceLimits,
    SpectrumReport,
    ZetaMethod,
    ZetaReport,
)
from cubezeta.lattice import (
    LatticeSpec,
    group_eigenvalues,
    laplacian_spectrum,
    spectrum_adown_q,
    spectrum_report,
    twisted_union_spectrum,
)
from cubezeta.oracle import bass_zeta
from cubezeta.orbits import DVec, orbit_decompose
from cubezeta.psi import psi_multi
from cubezeta.zeta import zeta_inverse

logger = logging.getLogger(__name__)

SPECTRUM_OPERATORS = ("laplacian-up", "adown-top", "adjacency-up", "adjacency-down")

Sides = Union[str, Sequence[int]]


def _spec(n: Sides) -> LatticeSpec:
    return LatticeSpec.parse(n) if isinstance(n, str) else LatticeSpec(tuple(n))


def _dvec(d: Union[str, Sequence[int]]) -> DVec:
    return DVec.parse(d) if isinstance(d, str) else DVec(tuple(d))


def cmd_zeta(
    n: Sides,
    d: Optional[int] = None,
    method: Union[str, ZetaMethod] = ZetaMethod.AUTO,
    limits: Optional[ResourceLimits] = None,
) -> ZetaReport:
    """1/zeta of the d-skeleton (default d = q) with its factored form.

    Raises:
        DomainError: On malformed sides or d outside [1, q]
        ResourceLimitError: If a bound is exceeded
    """
    spec = _spec(n)
    method = ZetaMethod(method)
    d = spec.q if d is None else d
    if method == ZetaMethod.BASS:
        if not 1 <= d <= spec.q:
            raise DomainError(f"Skeleton dimension must lie in [1, {spec.q}], got {d}")
        poly = bass_zeta(spec, d, limits)
        return ZetaReport(n=list(spec.sides), d=d, method=method.value, zeta_inverse=poly.to_list())
    report = zeta_inverse(spec, d, method, limits).to_report()
    logger.info(f"zeta {spec} d={d}: degree {len(report.zeta_inverse) - 1}")
    return report


def cmd_psi(
    d: Union[str, Sequence[int]], orbit_split: bool = False, limits: Optional[ResourceLimits] = None
) -> PsiReport:
    """Psi_d and, with ``orbit_split``, its factors over the Galois orbits."""
    psi = psi_multi(_dvec(d), limits, by_orbit=True)
    return psi.to_report(orbit_split=orbit_split)


def cmd_orbits(d: Union[str, Sequence[int]], limits: Optional[ResourceLimits] = None) -> OrbitReport:
    """Galois-orbit decomposition of the index box of d."""
    return orbit_decompose(_dvec(d), limits).to_report()


def cmd_spectrum(
    n: Sides, d: int, operator: str = "laplacian-up", tol: float = 1e-9
) -> SpectrumReport:
    """Spectrum of one lattice operator, grouped into (value, multiplicity) pairs.

    ``laplacian-up`` and ``adown-top`` use the closed forms; the adjacency
    operators are diagonalized block by block.

    Raises:
        DomainError: On an unknown operator or d out of range
    """
    spec = _spec(n)
    if operator == "laplacian-up":
        spectrum = laplacian_spectrum(spec, d, tol)
    elif operator == "adown-top":
        if d != spec.q:
            raise DomainError(f"adown-top is the operator A^down_q, got d={d} for q={spec.q}")
        spectrum = group_eigenvalues(spectrum_adown_q(spec), tol)
    elif operator in ("adjacency-up", "adjacency-down"):
        direction = Direction.UP if operator == "adjacency-up" else Direction.DOWN
        values = twisted_union_spectrum(spec, d, "adjacency", direction)
        spectrum = group_eigenvalues(values, tol)
    else:
        raise DomainError(f"Unknown operator {operator!r}; expected one of {SPECTRUM_OPERATORS}")
    return spectrum_report(spec, d, operator, spectrum)
