"""Sweeps over the pair families that report where empirical irreducibility
and distinctness patterns fail. Nothing here asserts; every scan returns findings."""

import logging
from typing import List, Optional

from cubezeta.core.models import ObservationFinding, ResourceLimits
from cubezeta.numtheory import phi_tilde
from cubezeta.orbits import is_diagonal, is_iota_invariant, iota, orbit_decompose
from cubezeta.psi.linear import family_tag
from cubezeta.psi.polynomials import is_irreducible, psi_orbit

logger = logging.getLogger(__name__)


def _finding(observation: str, d1: int, d2: int, rep, detail: str) -> ObservationFinding:
    logger.warning(f"{observation} ({d1},{d2}) {tuple(rep)}: {detail}")
    return ObservationFinding(
        observation=observation, dvec=[d1, d2], orbit_rep=list(rep), detail=detail
    )


def scan_m_2m(m_values, limits: Optional[ResourceLimits] = None) -> List[ObservationFinding]:
    """(m, 2m): every orbit polynomial outside the linear family is irreducible
    and distinct orbits have distinct polynomials."""
    findings: List[ObservationFinding] = []
    for m in m_values:
        d1, d2 = m, 2 * m
        polys = [psi_orbit((d1, d2), orbit, limits) for orbit in orbit_decompose((d1, d2), limits)]
        for op in polys:
            tag, _ = family_tag(d1, d2, op.orbit)
            if tag is None and not is_irreducible(op):
                findings.append(
                    _finding("m-2m-irreducible", d1, d2, op.representative,
                             f"multiplicity {op.multiplicity}")
                )
        findings.extend(_duplicates("m-2m-distinct", d1, d2, polys, allow_swap=False))
    return findings


def scan_m_m(m_values, limits: Optional[ResourceLimits] = None) -> List[ObservationFinding]:
    """(m, m): orbits not fixed by the swap are irreducible, half polynomials of
    swap-invariant non-diagonal orbits are irreducible, and orbit polynomials
    differ unless the orbits are swapped images of each other."""
    findings: List[ObservationFinding] = []
    for m in m_values:
        if m < 3:
            continue
        polys = [psi_orbit((m, m), orbit, limits) for orbit in orbit_decompose((m, m), limits)]
        for op in polys:
            if is_diagonal(op.orbit):
                if not is_irreducible(op):
                    findings.append(
                        _finding("m-m-diagonal", m, m, op.representative,
                                 f"multiplicity {op.multiplicity}")
                    )
            elif not is_iota_invariant(op.orbit):
                if not is_irreducible(op):
                    findings.append(
                        _finding("m-m-irreducible", m, m, op.representative,
                                 f"multiplicity {op.multiplicity}")
                    )
            elif m % 4 == 0 and (1, m // 2 - 1) in op.orbit:
                continue
            elif phi_tilde(m) % 2 == 0 and op.multiplicity != 2:
                # the half polynomial is irr_core^(multiplicity/2)
                findings.append(
                    _finding("m-m-half-irreducible", m, m, op.representative,
                             f"multiplicity {op.multiplicity}")
                )
        findings.extend(_duplicates("m-m-distinct", m, m, polys, allow_swap=True))
    return findings


def scan_phi_tilde_two(
    d1_values, limits: Optional[ResourceLimits] = None
) -> List[ObservationFinding]:
    """(d1, d2) with phi~(d2) = 2: orbit polynomials are irreducible apart from
    the linear-case table entries."""
    findings: List[ObservationFinding] = []
    for d2 in (5, 8, 10, 12):
        for d1 in d1_values:
            for orbit in orbit_decompose((d1, d2), limits):
                tag, _ = family_tag(d1, d2, orbit)
                if tag is not None:
                    continue
                op = psi_orbit((d1, d2), orbit, limits)
                if not is_irreducible(op):
                    findings.append(
                        _finding("phi-tilde-two-irreducible", d1, d2, op.representative,
                                 f"multiplicity {op.multiplicity}")
                    )
    return findings


def _duplicates(observation: str, d1: int, d2: int, polys, allow_swap: bool):
    findings = []
    for a in range(len(polys)):
        for b in range(a + 1, len(polys)):
            if polys[a].root_multiset() != polys[b].root_multiset():
                continue
            if allow_swap and set(polys[b].orbit) == {iota(j) for j in polys[a].orbit}:
                continue
            findings.append(
                _finding(observation, d1, d2, polys[a].representative,
                         f"same polynomial as orbit {tuple(polys[b].representative)}")
            )
    return findings
