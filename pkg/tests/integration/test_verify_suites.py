"""Integration tests: the verification suites end to end."""

import orjson
import pytest

from cubezeta.cli import SuiteOptions, render_json, run_suite
from cubezeta.cli.__main__ import EXIT_OK, main
from cubezeta.cli.verify import BASS_CASES, COR13_CASES, GEODESIC_CASES, SPECTRA_CASES
from cubezeta.core.models import CaseStatus, VerifySuite


def _assert_clean(report):
    failures = [(c.case, c.message) for c in report.cases if c.failed]
    assert not failures
    assert report.is_success()


@pytest.mark.asyncio
async def test_cor13_suite():
    """Test the divisor factorization on every default lattice."""
    report = await run_suite(VerifySuite.COR13, threads=2)

    _assert_clean(report)
    assert report.passed == len(COR13_CASES)
    assert [c.case["n"] for c in report.cases] == [list(n) for n in COR13_CASES]


@pytest.mark.asyncio
async def test_bass_suite():
    """Test the Bass determinant agrees with the closed forms."""
    report = await run_suite(VerifySuite.BASS, SuiteOptions(cases="default"))

    _assert_clean(report)
    assert report.passed == len(BASS_CASES)
    assert all(c.data["equal"] for c in report.cases)


@pytest.mark.asyncio
async def test_geodesic_suite():
    """Test trace counts, series and DFS agree."""
    report = await run_suite(VerifySuite.GEODESICS, SuiteOptions(mmax=6))

    _assert_clean(report)
    assert len(report.cases) == len(GEODESIC_CASES)
    triangle = report.cases[0]
    assert triangle.case["n"] == [3]
    assert triangle.data["N"] == [0, 0, 6, 0, 0, 6]


@pytest.mark.asyncio
async def test_spectra_suite():
    """Test closed-form, block and assembled spectra agree."""
    report = await run_suite(VerifySuite.SPECTRA)

    _assert_clean(report)
    assert report.passed == len(SPECTRA_CASES)


@pytest.mark.asyncio
async def test_small_orbit_sweep():
    """Test orbit counts and families on a small range."""
    report = await run_suite(VerifySuite.ORBITS, SuiteOptions(qmax=2, dmax=12))

    _assert_clean(report)
    assert report.passed == len(report.cases)


@pytest.mark.asyncio
async def test_orbit_sweep_covers_ordered_tuples():
    """Test every ordered d is swept and both specializations are checked."""
    report = await run_suite(VerifySuite.ORBITS, SuiteOptions(qmax=3, dmax=6))

    _assert_clean(report)
    keys = [next(iter(c.case)) for c in report.cases]
    assert keys.count("d") == 6 + 6**2 + 6**3
    assert keys.count("gcd") == 6**2
    assert keys.count("diagonal") == 2 * 6
    swept = {tuple(c.case["d"]) for c in report.cases if "d" in c.case}
    assert (5, 3, 4) in swept and (3, 4, 5) in swept
    diagonal = next(c for c in report.cases if c.case.get("diagonal") == [5, 5, 5])
    assert diagonal.message.startswith("4 orbit(s)")


@pytest.mark.asyncio
async def test_linear_table_small():
    """Test every table row already occurs for entries up to 12."""
    report = await run_suite(VerifySuite.LINEAR_TABLE, SuiteOptions(dmax=12))

    _assert_clean(report)
    coverage = report.cases[-1]
    assert coverage.case == {"coverage": 12}
    assert coverage.status == CaseStatus.PASS


@pytest.mark.asyncio
async def test_observations_never_fail():
    """Test the reporting scans leave the suite successful."""
    report = await run_suite(VerifySuite.OBSERVATIONS, SuiteOptions(dmax=12))

    assert report.is_success()
    assert report.passed + report.reported == len(report.cases)


@pytest.mark.asyncio
async def test_results_independent_of_threads():
    """Test the report is identical for one and several workers."""
    single = await run_suite(VerifySuite.COR13, threads=1)
    several = await run_suite(VerifySuite.COR13, threads=4)

    assert render_json(single) == render_json(several)


def test_verify_command_json(tmp_path, capsys):
    """Test the verify subcommand prints a parseable report and exits 0."""
    code = main(["verify", "spectra", "--format", "json", "--config", str(tmp_path)])
    payload = orjson.loads(capsys.readouterr().out)

    assert code == EXIT_OK
    assert payload["suite"] == "spectra"
    assert payload["failed"] == 0


@pytest.mark.slow
@pytest.mark.asyncio
async def test_default_orbit_suite():
    """Test the full default orbit sweep."""
    report = await run_suite(VerifySuite.ORBITS)

    _assert_clean(report)


@pytest.mark.slow
@pytest.mark.asyncio
async def test_extended_bass_suite():
    """Test the extended Bass cases."""
    report = await run_suite(VerifySuite.BASS, SuiteOptions(cases="extended"))

    _assert_clean(report)


@pytest.mark.slow
@pytest.mark.asyncio
async def test_default_linear_table():
    """Test the linear-case table up to 50."""
    report = await run_suite(VerifySuite.LINEAR_TABLE)

    _assert_clean(report)
