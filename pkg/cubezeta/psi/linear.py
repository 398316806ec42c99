"""Orbits of pairs (d1, d2) whose irreducible core is linear."""

import logging
from math import gcd
from typing import List, Optional, Tuple

from cubezeta.algebra import IntPoly
from cubezeta.core.models import LinearCaseRecord, LinearNecessaryReport, ResourceLimits
from cubezeta.numtheory import factorize
from cubezeta.orbits import Orbit, iota, orbit_decompose
from cubezeta.psi.polynomials import c_value

logger = logging.getLogger(__name__)

SMALL_SIDES = frozenset({1, 2, 3, 4, 6})

TAG_SMALL = "x-lambda"
TAG_MM = "(m,m):x"
TAG_M2M = "(m,2m):x"
TAG_55 = "(5,5):x+1"
TAG_1010 = "(10,10):x-1"

# Irreducible core each tagged family must have; None means any integer root.
FAMILY_CORES = {
    TAG_SMALL: None,
    TAG_MM: IntPoly([0, 1]),
    TAG_M2M: IntPoly([0, 1]),
    TAG_55: IntPoly([1, 1]),
    TAG_1010: IntPoly([-1, 1]),
}


def _family_tag(d1: int, d2: int, members: frozenset) -> Optional[str]:
    if d1 in SMALL_SIDES and d2 in SMALL_SIDES:
        return TAG_SMALL
    if d1 == d2 and d1 % 4 == 0 and (1, d1 // 2 - 1) in members:
        return TAG_MM
    if d2 == 2 * d1 and d1 % 2 == 1 and (1, d1 - 2) in members:
        return TAG_M2M
    if (d1, d2) == (5, 5) and (1, 2) in members:
        return TAG_55
    if (d1, d2) == (10, 10) and (1, 3) in members:
        return TAG_1010
    return None


def family_tag(d1: int, d2: int, orbit: Orbit) -> Tuple[Optional[str], bool]:
    """Row of the linear-case table an orbit belongs to, up to swapping coordinates.

    Returns:
        (tag, swapped), tag None when no row matches
    """
    members = frozenset(orbit)
    tag = _family_tag(d1, d2, members)
    if tag is not None:
        return tag, False
    tag = _family_tag(d2, d1, frozenset(iota(j) for j in members))
    return tag, tag is not None


def linear_case_classify(
    d1: int, d2: int, limits: Optional[ResourceLimits] = None
) -> List[LinearCaseRecord]:
    """All orbits of (d1, d2) with a degree-one irreducible core, tagged by family.

    An orbit has a linear core exactly when all of its roots coincide. The
    roots of an orbit are Galois conjugates, so they coincide exactly when the
    root of the representative is a rational integer lambda; the core is then
    x - lambda.
    """
    records: List[LinearCaseRecord] = []
    for orbit in orbit_decompose((d1, d2), limits):
        root = c_value((d1, d2), orbit[0])
        if not root.is_rational_integer():
            continue
        lam = root.to_int()
        tag, swapped = family_tag(d1, d2, orbit)
        records.append(
            LinearCaseRecord(
                d1=d1,
                d2=d2,
                orbit_rep=list(orbit[0]),
                irr_core=IntPoly.linear(lam).to_list(),
                family_tag=tag,
                swapped=swapped,
            )
        )
    return records


def check_linear_necessary(d1: int, d2: int) -> LinearNecessaryReport:
    """Necessary conditions on (d1, d2) for some orbit to have a linear core.

    g_i collects the full prime powers of d_i over the primes dividing
    g = gcd(d1, d2), and m_i = d_i / g_i is coprime to g.
    """
    g = gcd(d1, d2)
    primes = [p for p, _ in factorize(g)]

    def common_part(d: int) -> int:
        part = 1
        for p in primes:
            while d % (part * p) == 0:
                part *= p
        return part

    g1, g2 = common_part(d1), common_part(d2)
    m1, m2 = d1 // g1, d2 // g2
    passes = (
        all(gi <= 2 or mi <= 2 for gi, mi in ((g1, m1), (g2, m2)))
        and m1 in SMALL_SIDES
        and m2 in SMALL_SIDES
        and (g1 == g2 or {g1, g2} == {2, 4})
    )
    return LinearNecessaryReport(d1=d1, d2=d2, g=g, g1=g1, g2=g2, m1=m1, m2=m2, passes=passes)


def scan_linear_cases(dmax: int, limits: Optional[ResourceLimits] = None) -> List[LinearCaseRecord]:
    """Linear-core orbits of every ordered pair 1 <= d1, d2 <= dmax."""
    hits: List[LinearCaseRecord] = []
    for d1 in range(1, dmax + 1):
        for d2 in range(1, dmax + 1):
            hits.extend(linear_case_classify(d1, d2, limits))
    logger.info(f"Linear-case scan up to {dmax}: {len(hits)} orbit(s)")
    return hits
