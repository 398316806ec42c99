"""Verification suites: every closed form against an independent computation.

Each suite is a list of independent cases run on the CaseRunner. A case
returns PASS or FAIL for hard checks, REPORT for findings that are only
recorded, and ERROR when an exactness invariant broke while computing it.
"""

import logging
import time
from dataclasses import dataclass
from itertools import product
from math import comb, gcd
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from cubezeta.core.errors import InvariantViolation, NotGaloisStableError
from cubezeta.core.models import (
    CaseResult,
    CaseStatus,
    Direction,
    LinearCaseRecord,
    ResourceLimits,
    VerificationReport,
    VerifySuite,
)
from cubezeta.core.runner import CaseRunner
from cubezeta.lattice import (
    LatticeSpec,
    assembled_adjacency_spectrum,
    assembled_laplacian_spectrum,
    charpoly_aup1_closed,
    coboundary_square_norm,
    cube_count,
    down_up_defect,
    expand_spectrum,
    hodge_defect,
    laplacian_spectrum,
    spectra_match,
    spectrum_adown_q,
    twisted_union_spectrum,
)
from cubezeta.numtheory import phi_tilde
from cubezeta.oracle import (
    DFS_MAX_LENGTH,
    bass_zeta,
    build_bh,
    geodesic_counts,
    geodesic_counts_dfs,
    log_derivative_series,
    prime_cycle_counts,
)
from cubezeta.orbits import (
    iota_orbit_analysis,
    orb_count_formula,
    orbit_decompose,
    q2_family_representatives,
)
from cubezeta.psi import (
    FAMILY_CORES,
    check_linear_necessary,
    linear_case_classify,
    scan_m_2m,
    scan_m_m,
    scan_phi_tilde_two,
)
from cubezeta.zeta import (
    skeleton_constants,
    zeta_codim1,
    zeta_general_d,
    zeta_inverse,
    zeta_top,
    zeta_top_direct,
)

logger = logging.getLogger(__name__)

Outcome = Tuple[CaseStatus, str, Dict[str, Any]]
Case = Callable[[], CaseResult]

IOTA_CHECK_MAX_M = 200

COR13_CASES: Tuple[Tuple[int, ...], ...] = (
    (5,), (6,), (8,), (2, 3), (4, 4), (3, 5), (4, 6), (2, 2, 3),
)

BASS_CASES: Tuple[Tuple[Tuple[int, ...], int], ...] = (
    ((3,), 1), ((4,), 1), ((5,), 1), ((6,), 1),
    ((2, 2), 1), ((2, 2), 2), ((2, 3), 1), ((2, 3), 2),
    ((3, 3), 1), ((3, 3), 2), ((2, 4), 1), ((2, 4), 2),
    ((2, 2, 2), 1), ((2, 2, 2), 2), ((2, 2, 2), 3),
)

BASS_EXTENDED_CASES = BASS_CASES + (
    ((3, 4), 1), ((3, 4), 2), ((4, 4), 1), ((4, 4), 2),
)

GEODESIC_CASES: Tuple[Tuple[Tuple[int, ...], int], ...] = (
    ((3,), 1), ((2, 2), 1), ((2, 2), 2), ((3, 3), 1), ((3, 3), 2),
)

SPECTRA_CASES: Tuple[Tuple[int, ...], ...] = ((4,), (3, 3), (2, 4), (2, 2, 2), (2, 2, 3))

LINEAR_TAGS = tuple(FAMILY_CORES)


@dataclass(frozen=True)
class SuiteOptions:
    """Bounds of a verification sweep; None picks the suite's default."""

    qmax: int = 3
    dmax: Optional[int] = None
    mmax: int = 8
    cases: str = "default"
    tolerance: float = 1e-9


def _passed(ok: bool, message: str = "", **data: Any) -> Outcome:
    return (CaseStatus.PASS if ok else CaseStatus.FAIL), message, data


def _make_case(suite: VerifySuite, case: Dict[str, Any], check: Callable[[], Outcome]) -> Case:
    def run() -> CaseResult:
        start_time = time.perf_counter()
        try:
            status, message, data = check()
        except (InvariantViolation, NotGaloisStableError) as e:
            status, message, data = CaseStatus.ERROR, f"{type(e).__name__}: {e}", {}
        processing_time_ms = (time.perf_counter() - start_time) * 1000
        logger.info(f"{suite.value} {case}: {status.value} in {processing_time_ms:.2f}ms")
        return CaseResult(suite=suite, case=case, status=status, message=message, data=data)

    return run


# orbits


def _orbit_count_check(dvec: Tuple[int, ...], limits: Optional[ResourceLimits]) -> Outcome:
    count = len(orbit_decompose(dvec, limits))
    formula = orb_count_formula(dvec)
    return _passed(count == formula, f"{count} orbit(s), formula {formula}")


def _iota_check(m: int, limits: Optional[ResourceLimits]) -> Outcome:
    report = iota_orbit_analysis(m, limits)
    return _passed(
        report.agrees,
        f"{report.invariant_orbit_count} swap-invariant orbit(s)",
        **report.model_dump(),
    )


def _family_check(d1: int, d2: int, limits: Optional[ResourceLimits]) -> Outcome:
    decomposition = orbit_decompose((d1, d2), limits)
    reps = q2_family_representatives(d1, d2)
    hit = {decomposition.orbit_index(j) for j in reps}
    ok = len(hit) == len(reps) == len(decomposition)
    return _passed(ok, f"{len(reps)} representative(s) for {len(decomposition)} orbit(s)")


def _in_q2_family(d1: int, d2: int) -> bool:
    return d1 == d2 or d2 == 2 * d1 or (d2 >= 3 and phi_tilde(d2) == 2)


def _gcd_count_check(d1: int, d2: int, limits: Optional[ResourceLimits]) -> Outcome:
    count = len(orbit_decompose((d1, d2), limits))
    expected = phi_tilde(gcd(d1, d2))
    return _passed(count == expected, f"{count} orbit(s), phi~(gcd) = {expected}")


def _diagonal_count_check(d: int, q: int, limits: Optional[ResourceLimits]) -> Outcome:
    count = len(orbit_decompose((d,) * q, limits))
    expected = phi_tilde(d) ** (q - 1)
    return _passed(count == expected, f"{count} orbit(s), phi~(d)^(q-1) = {expected}")


def orbit_cases(options: SuiteOptions, limits: Optional[ResourceLimits]) -> List[Case]:
    """Orbit counts against the closed formula for every ordered d with
    q <= qmax, its two-entry and diagonal specializations, the family
    representatives for q = 2, and the swap-invariant orbits of (m, m) when
    phi~(m) is odd."""
    dmax = options.dmax or 20
    suite = VerifySuite.ORBITS
    cases: List[Case] = []
    for q in range(1, options.qmax + 1):
        for dvec in product(range(1, dmax + 1), repeat=q):
            cases.append(
                _make_case(suite, {"d": list(dvec)}, lambda dv=dvec: _orbit_count_check(dv, limits))
            )
    if options.qmax >= 2:
        for d1, d2 in product(range(1, dmax + 1), repeat=2):
            cases.append(
                _make_case(
                    suite, {"gcd": [d1, d2]}, lambda a=d1, b=d2: _gcd_count_check(a, b, limits)
                )
            )
        for q in range(2, options.qmax + 1):
            for d in range(1, dmax + 1):
                cases.append(
                    _make_case(
                        suite,
                        {"diagonal": [d] * q},
                        lambda dd=d, qq=q: _diagonal_count_check(dd, qq, limits),
                    )
                )
        for d1 in range(1, dmax + 1):
            for d2 in range(1, dmax + 1):
                if _in_q2_family(d1, d2):
                    cases.append(
                        _make_case(
                            suite,
                            {"family": [d1, d2]},
                            lambda a=d1, b=d2: _family_check(a, b, limits),
                        )
                    )
    for m in range(3, IOTA_CHECK_MAX_M + 1):
        if phi_tilde(m) % 2:
            cases.append(_make_case(suite, {"iota_m": m}, lambda mm=m: _iota_check(mm, limits)))
    return cases


# cor13


def _cor13_check(sides: Tuple[int, ...], limits: Optional[ResourceLimits]) -> Outcome:
    spec = LatticeSpec(sides)
    factored = zeta_top(spec, limits)
    direct = zeta_top_direct(spec, limits)
    ok = factored.poly == direct.poly and factored.expand() == factored.poly
    return _passed(
        ok,
        f"degree {factored.degree}, {len(factored.factors)} divisor tuple(s)",
        factored_poly=factored.poly.to_list(),
        direct_poly=direct.poly.to_list(),
    )


def cor13_cases(options: SuiteOptions, limits: Optional[ResourceLimits]) -> List[Case]:
    """Divisor-tuple factorization against the character product."""
    return [
        _make_case(VerifySuite.COR13, {"n": list(n)}, lambda s=n: _cor13_check(s, limits))
        for n in COR13_CASES
    ]


# bass


def _bass_check(sides: Tuple[int, ...], d: int, limits: Optional[ResourceLimits]) -> Outcome:
    spec = LatticeSpec(sides)
    q = spec.q
    bass = bass_zeta(spec, d, limits)
    closed = zeta_general_d(spec, d, limits).poly
    failures: List[str] = []
    if bass != closed:
        failures.append("bass != general")
    if d == q and zeta_top(spec, limits).poly != closed:
        failures.append("top != general")
    if zeta_general_d(spec, q - d + 1, limits).poly != closed:
        failures.append("skeleton symmetry")
    if q >= 2 and d == q - 1 and zeta_codim1(spec, limits).poly != closed:
        failures.append("codim1 != general")
    bh = build_bh(spec, d, limits)
    constants = skeleton_constants(q, d)
    chi = bh.euler_characteristic()
    if not chi == bh.num_vertices - constants.beta * bh.num_edges == (
        bh.num_edges - constants.alpha * bh.num_vertices
    ):
        failures.append(f"Euler characteristic {chi}")
    return _passed(
        not failures,
        "; ".join(failures),
        bass_poly=bass.to_list(),
        closed_form_poly=closed.to_list(),
        equal=bass == closed,
    )


def bass_cases(options: SuiteOptions, limits: Optional[ResourceLimits]) -> List[Case]:
    """Bass determinant of B_H against the closed forms, plus skeleton symmetry."""
    table = BASS_EXTENDED_CASES if options.cases == "extended" else BASS_CASES
    return [
        _make_case(
            VerifySuite.BASS, {"n": list(n), "d": d}, lambda s=n, dd=d: _bass_check(s, dd, limits)
        )
        for n, d in table
    ]


# geodesics


def _geodesic_check(
    sides: Tuple[int, ...], d: int, mmax: int, limits: Optional[ResourceLimits]
) -> Outcome:
    spec = LatticeSpec(sides)
    counts = geodesic_counts(spec, d, mmax, limits)
    series = log_derivative_series(zeta_inverse(spec, d, limits=limits).poly, mmax)
    dfs_length = min(mmax, DFS_MAX_LENGTH)
    dfs = geodesic_counts_dfs(spec, d, dfs_length, limits)
    failures: List[str] = []
    if counts != series:
        failures.append("trace != series")
    if counts[:dfs_length] != dfs:
        failures.append("trace != dfs")
    if any(c < 0 for c in counts):
        failures.append("negative count")
    if any(c % 2 for c in counts[2:]):
        failures.append("odd count")
    return _passed(
        not failures, "; ".join(failures), N=counts, primes=prime_cycle_counts(counts)
    )


def geodesic_cases(options: SuiteOptions, limits: Optional[ResourceLimits]) -> List[Case]:
    """Traces of the non-backtracking operator against the log-derivative series and DFS."""
    return [
        _make_case(
            VerifySuite.GEODESICS,
            {"n": list(n), "d": d, "mmax": options.mmax},
            lambda s=n, dd=d: _geodesic_check(s, dd, options.mmax, limits),
        )
        for n, d in GEODESIC_CASES
    ]


# spectra


def _spectra_check(
    sides: Tuple[int, ...], tol: float, limits: Optional[ResourceLimits]
) -> Outcome:
    spec = LatticeSpec(sides)
    q = spec.q
    failures: List[str] = []
    for d in range(q + 1):
        closed = expand_spectrum(laplacian_spectrum(spec, d, tol))
        if not spectra_match(closed, twisted_union_spectrum(spec, d, "laplacian"), tol):
            failures.append(f"L^up_{d} closed form")
        if d <= q - 1:
            if not spectra_match(
                assembled_laplacian_spectrum(spec, d, limits),
                twisted_union_spectrum(spec, d, "laplacian"),
                tol,
            ):
                failures.append(f"L^up_{d} assembled")
            if not spectra_match(
                assembled_adjacency_spectrum(spec, d, Direction.UP, limits),
                twisted_union_spectrum(spec, d, "adjacency", Direction.UP),
                tol,
            ):
                failures.append(f"A^up_{d} assembled")
        if d >= 1:
            if not spectra_match(
                assembled_adjacency_spectrum(spec, d, Direction.DOWN, limits),
                twisted_union_spectrum(spec, d, "adjacency", Direction.DOWN),
                tol,
            ):
                failures.append(f"A^down_{d} assembled")
    worst = 0.0
    for chi in spec.characters():
        for d in range(q + 1):
            worst = max(worst, hodge_defect(spec, d, chi), coboundary_square_norm(spec, d, chi))
            if d >= 1 and comb(q, d) >= comb(q, d - 1):
                worst = max(worst, down_up_defect(spec, d, chi))
        worst = max(worst, charpoly_aup1_closed(q, chi, 0.37))
    if worst > 1e3 * tol:
        failures.append(f"block identities off by {worst:.3g}")
    if not spectra_match(
        spectrum_adown_q(spec), twisted_union_spectrum(spec, q, "adjacency", Direction.DOWN), tol
    ):
        failures.append("A^down_q closed form")
    return _passed(not failures, "; ".join(failures), max_block_defect=worst)


def spectra_cases(options: SuiteOptions, limits: Optional[ResourceLimits]) -> List[Case]:
    """Closed-form, block-diagonal and assembled spectra against each other."""
    return [
        _make_case(
            VerifySuite.SPECTRA,
            {"n": list(n), "cubes": sum(cube_count(LatticeSpec(n), d) for d in range(len(n) + 1))},
            lambda s=n: _spectra_check(s, options.tolerance, limits),
        )
        for n in SPECTRA_CASES
    ]


# linear-table


def _linear_hit_result(record: LinearCaseRecord) -> CaseResult:
    failures: List[str] = []
    if record.family_tag is None:
        failures.append("no table row")
    else:
        expected = FAMILY_CORES[record.family_tag]
        if expected is not None and record.irr_core != expected.to_list():
            failures.append(f"core {record.irr_core} for {record.family_tag}")
    if not check_linear_necessary(record.d1, record.d2).passes:
        failures.append("necessary condition")
    status = CaseStatus.FAIL if failures else CaseStatus.PASS
    return CaseResult(
        suite=VerifySuite.LINEAR_TABLE,
        case={"d": [record.d1, record.d2], "orbit": record.orbit_rep},
        status=status,
        message=record.family_tag if not failures else "; ".join(failures),
        data=record.model_dump(),
    )


async def _linear_table(
    options: SuiteOptions, limits: Optional[ResourceLimits], runner: CaseRunner
) -> List[CaseResult]:
    dmax = options.dmax or 50

    def row(d1: int) -> List[LinearCaseRecord]:
        hits: List[LinearCaseRecord] = []
        for d2 in range(1, dmax + 1):
            hits.extend(linear_case_classify(d1, d2, limits))
        return hits

    rows = await runner.run([lambda a=d1: row(a) for d1 in range(1, dmax + 1)])
    records = [record for hits in rows for record in hits]
    results = [_linear_hit_result(record) for record in records]
    seen = {record.family_tag for record in records}
    missing = [tag for tag in LINEAR_TAGS if tag not in seen]
    results.append(
        CaseResult(
            suite=VerifySuite.LINEAR_TABLE,
            case={"coverage": dmax},
            status=CaseStatus.FAIL if missing else CaseStatus.PASS,
            message=f"missing rows {missing}" if missing else f"{len(records)} linear orbit(s)",
        )
    )
    return results


# observations


def _findings_outcome(findings: Sequence[Any]) -> Outcome:
    if not findings:
        return CaseStatus.PASS, "", {}
    return (
        CaseStatus.REPORT,
        f"{len(findings)} finding(s)",
        {"findings": [f.model_dump() for f in findings]},
    )


def _amplitude_check(m: int, limits: Optional[ResourceLimits]) -> Outcome:
    report = iota_orbit_analysis(m, limits)
    status = CaseStatus.PASS if report.agrees else CaseStatus.REPORT
    message = f"{report.invariant_orbit_count} swap-invariant orbit(s), formula {report.formula_A}"
    return status, message, report.model_dump()


def observation_cases(options: SuiteOptions, limits: Optional[ResourceLimits]) -> List[Case]:
    """Reporting-only scans of the pair families; findings never fail the suite."""
    dmax = options.dmax or 24
    suite = VerifySuite.OBSERVATIONS
    cases: List[Case] = []
    for m in range(3, dmax // 2 + 1):
        cases.append(
            _make_case(
                suite,
                {"scan": "m-2m", "m": m},
                lambda mm=m: _findings_outcome(scan_m_2m([mm], limits)),
            )
        )
    for m in range(3, dmax + 1):
        cases.append(
            _make_case(
                suite,
                {"scan": "m-m", "m": m},
                lambda mm=m: _findings_outcome(scan_m_m([mm], limits)),
            )
        )
    for d1 in range(1, dmax + 1):
        cases.append(
            _make_case(
                suite,
                {"scan": "phi-tilde-two", "d1": d1},
                lambda a=d1: _findings_outcome(scan_phi_tilde_two([a], limits)),
            )
        )
    for m in range(3, dmax + 1):
        if phi_tilde(m) % 2 == 0:
            cases.append(
                _make_case(
                    suite, {"scan": "A(m)", "m": m}, lambda mm=m: _amplitude_check(mm, limits)
                )
            )
    return cases


_CASE_BUILDERS = {
    VerifySuite.ORBITS: orbit_cases,
    VerifySuite.COR13: cor13_cases,
    VerifySuite.BASS: bass_cases,
    VerifySuite.GEODESICS: geodesic_cases,
    VerifySuite.SPECTRA: spectra_cases,
    VerifySuite.OBSERVATIONS: observation_cases,
}


async def run_suite(
    suite: VerifySuite,
    options: Optional[SuiteOptions] = None,
    limits: Optional[ResourceLimits] = None,
    threads: Optional[int] = None,
) -> VerificationReport:
    """Run one suite and tally its cases in deterministic order."""
    suite = VerifySuite(suite)
    options = options or SuiteOptions()
    runner = CaseRunner(threads=threads, name=f"verify-{suite.value}")
    if suite == VerifySuite.LINEAR_TABLE:
        results = await _linear_table(options, limits, runner)
    else:
        results = await runner.run(_CASE_BUILDERS[suite](options, limits))
    report = VerificationReport.from_cases(suite, results)
    if report.failed:
        logger.error(f"{suite.value}: {report.failed} case(s) failed")
    for case in results:
        if case.status == CaseStatus.REPORT:
            logger.warning(f"{suite.value} {case.case}: {case.message}")
    return report
