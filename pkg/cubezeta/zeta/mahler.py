"""Free energy of the top skeleton and its infinite-volume limit.

As every side length grows, -log zeta_Y(u) / |n| tends to
(q-1) log(1 - u^2) plus the logarithmic Mahler measure of
1 - u sum_i (z_i + 1/z_i) + (2q-1) u^2 over the unit torus.
"""

import logging
from functools import reduce
from typing import Optional

import numpy as np

from cubezeta.core.errors import DomainError, ResourceLimitError
from cubezeta.core.models import ResourceLimits
from cubezeta.lattice import LatticeSpec

logger = logging.getLogger(__name__)

DEFAULT_MAX_EXPONENT = 22
DEFAULT_MIN_LEVEL = 3


def _log_abs(values: np.ndarray) -> np.ndarray:
    # a node landing exactly on the zero set is clamped instead of producing -inf
    return np.log(np.maximum(np.abs(values), np.finfo(float).tiny))


def _midpoint_mean(q: int, u: float, level: int) -> float:
    """Mean of log|f| over 2^level midpoints per axis.

    The midpoint set is symmetric under theta -> 1 - theta, so only the first
    half of each axis is evaluated.
    """
    count = 2**level
    theta = (np.arange(count // 2) + 0.5) / count
    cosines = 2.0 * np.cos(2.0 * np.pi * theta)
    total = reduce(np.add.outer, [cosines] * q)
    values = 1.0 - u * total + (2 * q - 1) * u * u
    return float(np.mean(_log_abs(values)))


def integrand_vanishes(q: int, u: float) -> bool:
    """True when 1 - 2u sum cos + (2q-1)u^2 has zeros on the torus."""
    return u >= 1.0 / (2 * q - 1)


def mahler_limit_integral(
    q: int,
    u: float,
    max_exponent: int = DEFAULT_MAX_EXPONENT,
    min_level: int = DEFAULT_MIN_LEVEL,
) -> float:
    """Integral of log|1 - 2u sum_i cos(2 pi theta_i) + (2q-1)u^2| over [0,1]^q.

    Tensor midpoint rule with 2^k nodes per axis, k = max(min_level,
    max_exponent // q). When the integrand is zero-free it is a smooth
    periodic function and the midpoint rule converges geometrically, so the
    fine level is returned as is. Otherwise the logarithmic singularity makes
    the error algebraic in the mesh width and the two finest levels are
    Richardson-combined: order 1 for a singular hypersurface (or q = 1), order
    q for the isolated zero at theta = 0 when u = 1. At q = 2, u = 1 the value
    is 4G/pi with G Catalan's constant.

    Args:
        q: Dimension, at least 1
        u: Point in [0, 1]
        max_exponent: Budget for k*q
        min_level: Floor for k

    Raises:
        DomainError: If q < 1 or u is outside [0, 1]
    """
    if q < 1:
        raise DomainError(f"Dimension must be positive, got {q}")
    if not 0.0 <= u <= 1.0:
        raise DomainError(f"The limit integral is taken for 0 <= u <= 1, got {u}")
    if u == 0.0:
        return 0.0
    level = max(min_level, max_exponent // q, 2)
    fine = _midpoint_mean(q, u, level)
    if not integrand_vanishes(q, u):
        logger.debug(f"Mahler integral q={q} u={u}: plain midpoint, level {level}")
        return fine
    coarse = _midpoint_mean(q, u, level - 1)
    order = q if (u == 1.0 and q > 1) else 1
    scale = 2.0**order
    logger.debug(f"Mahler integral q={q} u={u}: Richardson order {order}, level {level}")
    return (scale * fine - coarse) / (scale - 1.0)


def free_energy_check(
    spec: LatticeSpec, u: float, limits: Optional[ResourceLimits] = None
) -> float:
    """-log|zeta_Y(u)| / |n| of the finite lattice, summed over characters in floating point.

    Raises:
        DomainError: If |u| >= 1
        ResourceLimitError: If the lattice has more characters than max_orbit_box
    """
    if abs(u) >= 1.0:
        raise DomainError(f"The free energy needs |u| < 1, got {u}")
    if u == 0.0:
        return 0.0
    limits = limits or ResourceLimits()
    if spec.volume > limits.max_orbit_box:
        raise ResourceLimitError("character set", spec.volume, limits.max_orbit_box)
    q = spec.q
    axes = [2.0 * np.cos(2.0 * np.pi * np.arange(n) / n) for n in spec.sides]
    total = reduce(np.add.outer, axes)
    values = 1.0 - u * total + (2 * q - 1) * u * u
    return float((q - 1) * np.log(1.0 - u * u) + np.mean(_log_abs(values)))


def free_energy_limit(
    q: int,
    u: float,
    max_exponent: int = DEFAULT_MAX_EXPONENT,
    min_level: int = DEFAULT_MIN_LEVEL,
) -> float:
    """(q-1) log(1 - u^2) + mahler_limit_integral(q, |u|) for |u| < 1.

    Shifting every theta_i by 1/2 flips the sign of u, hence the |u|.
    """
    if abs(u) >= 1.0:
        raise DomainError(f"The free energy needs |u| < 1, got {u}")
    return (q - 1) * float(np.log(1.0 - u * u)) + mahler_limit_integral(
        q, abs(u), max_exponent, min_level
    )
