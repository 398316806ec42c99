"""Orbit families of pairs (d1, d2): the coordinate swap and the known
complete systems of representatives."""

import logging
from typing import List, Optional, Tuple

from cubezeta.core.errors import DomainError
from cubezeta.core.models import IotaOrbitReport, ResourceLimits
from cubezeta.numtheory import factorize, j_set, phi_tilde
from cubezeta.orbits.galois import Orbit, orbit_decompose

logger = logging.getLogger(__name__)

# For phi~(d2) = 2 the non-trivial orbit is represented by (1, a).
_SECOND_REPRESENTATIVE = {5: 2, 8: 3, 10: 3, 12: 5}


def iota(j: Tuple[int, int]) -> Tuple[int, int]:
    """Swap the two coordinates."""
    return (j[1], j[0])


def is_iota_invariant(orbit: Orbit) -> bool:
    """Check if the orbit is mapped onto itself by the coordinate swap."""
    members = set(orbit)
    return all(iota(j) in members for j in orbit)


def is_diagonal(orbit: Orbit) -> bool:
    """Check if the orbit contains a point with equal coordinates."""
    return any(j[0] == j[1] for j in orbit)


def iota_exponents(m: int) -> Tuple[int, int, int]:
    """The exponents (f1, f2, f3) entering the swap-invariant orbit count of (m, m).

    f1 is 0, 1 or 2 as 4 does not divide m, 4 | m but 8 does not, or 8 | m;
    f2 is the number of odd prime factors; f3 is 1 exactly when 4 does not
    divide m, m has odd prime factors and all of them are 1 mod 4.
    """
    if m % 8 == 0:
        f1 = 2
    elif m % 4 == 0:
        f1 = 1
    else:
        f1 = 0
    odd_primes = [p for p, _ in factorize(m) if p % 2]
    f2 = len(odd_primes)
    f3 = int(m % 4 != 0 and f2 >= 1 and all(p % 4 == 1 for p in odd_primes))
    return f1, f2, f3


def iota_orbit_analysis(m: int, limits: Optional[ResourceLimits] = None) -> IotaOrbitReport:
    """Count swap-invariant orbits of J_m x J_m and compare with 2^(f1+f2+f3-1).

    When phi~(m) is odd only the diagonal orbit can be invariant, so the
    formula is reported but marked not applicable and agreement means a count
    of one.

    Raises:
        DomainError: If m < 3
    """
    if m < 3:
        raise DomainError(f"iota_orbit_analysis needs m >= 3, got {m}")
    decomposition = orbit_decompose((m, m), limits)
    count = sum(1 for orbit in decomposition if is_iota_invariant(orbit))
    f1, f2, f3 = iota_exponents(m)
    exponent = f1 + f2 + f3 - 1
    formula = 2**exponent if exponent >= 0 else 1
    applicable = phi_tilde(m) % 2 == 0
    agrees = count == formula if applicable else count == 1
    if not agrees:
        logger.info(f"m={m}: {count} swap-invariant orbit(s), formula gives {formula}")
    return IotaOrbitReport(
        m=m,
        invariant_orbit_count=count,
        formula_A=formula,
        f1=f1,
        f2=f2,
        f3=f3,
        formula_applicable=applicable,
        agrees=agrees,
    )


def q2_family_representatives(d1: int, d2: int) -> List[Tuple[int, int]]:
    """Complete orbit representatives for the families (m, m), (m, 2m) and phi~(d2) = 2.

    Args:
        d1: First side
        d2: Second side

    Returns:
        Representatives (1, a), one per orbit

    Raises:
        DomainError: If (d1, d2) belongs to none of the families
    """
    if d1 == d2:
        return [(1, a) for a in j_set(d1).members]
    if d2 == 2 * d1:
        m = d1
        source = j_set(m) if m % 2 == 0 else j_set(2 * m)
        return [(1, a) for a in source.members]
    if d2 >= 3 and phi_tilde(d2) == 2:
        a = _SECOND_REPRESENTATIVE[d2]
        splits = d1 % 5 == 0 if d2 == 10 else d1 % d2 == 0
        return [(1, 1), (1, a)] if splits else [(1, 1)]
    raise DomainError(f"({d1}, {d2}) lies outside the (m,m), (m,2m) and phi~(d2)=2 families")
