"""Unit tests for core record models."""

import orjson
import pytest
from pydantic import ValidationError

from cubezeta.core.models import (
    CaseResult,
    CaseStatus,
    ResourceLimits,
    VerificationReport,
    VerifySuite,
    ZetaReport,
)


def _case(status, suite=VerifySuite.COR13):
    return CaseResult(suite=suite, case={"n": [5]}, status=status)


class TestResourceLimits:
    """Test ResourceLimits model."""

    def test_defaults(self):
        """Test default bounds."""
        limits = ResourceLimits()
        assert limits.max_degree == 10_000
        assert limits.max_orbit_box == 1_000_000
        assert limits.max_bipartite_size == 5000
        assert limits.max_geodesic_length == 12

    def test_string_values_are_coerced(self):
        """Test values read from the environment arrive as strings."""
        assert ResourceLimits(max_degree="250").max_degree == 250

    def test_rejects_non_positive(self):
        """Test bounds must be at least one."""
        with pytest.raises(ValidationError):
            ResourceLimits(max_degree=0)

    def test_frozen(self):
        """Test limits cannot be mutated."""
        limits = ResourceLimits()
        with pytest.raises(ValidationError):
            limits.max_degree = 5


class TestCaseResult:
    """Test CaseResult model."""

    def test_enum_values_are_stored(self):
        """Test enums serialize as their values."""
        result = _case(CaseStatus.PASS)
        assert result.suite == "cor13"
        assert result.status == "PASS"
        assert result.data == {}

    @pytest.mark.parametrize(
        "status,failed",
        [(CaseStatus.PASS, False), (CaseStatus.REPORT, False),
         (CaseStatus.FAIL, True), (CaseStatus.ERROR, True)],
    )
    def test_failed(self, status, failed):
        """Test which outcomes count against the exit code."""
        assert _case(status).failed is failed


class TestVerificationReport:
    """Test VerificationReport model."""

    def test_from_cases(self):
        """Test outcomes are tallied."""
        cases = [_case(s) for s in (CaseStatus.PASS, CaseStatus.PASS, CaseStatus.REPORT, CaseStatus.ERROR)]
        report = VerificationReport.from_cases(VerifySuite.COR13, cases)
        assert (report.passed, report.reported, report.failed) == (2, 1, 1)
        assert not report.is_success()

    def test_reports_do_not_fail(self):
        """Test REPORT cases leave the suite successful."""
        report = VerificationReport.from_cases(
            VerifySuite.OBSERVATIONS, [_case(CaseStatus.REPORT, VerifySuite.OBSERVATIONS)]
        )
        assert report.is_success()

    def test_json_dump(self):
        """Test the report dumps to JSON with plain values."""
        report = VerificationReport.from_cases(VerifySuite.COR13, [_case(CaseStatus.PASS)])
        payload = orjson.loads(orjson.dumps(report.model_dump()))
        assert payload["suite"] == "cor13"
        assert payload["cases"][0]["status"] == "PASS"


class TestZetaReport:
    """Test ZetaReport model."""

    def test_round_trip(self):
        """Test validation from a dumped dictionary."""
        report = ZetaReport(
            n=[5],
            d=1,
            method="top",
            zeta_inverse=[1, 0, 0, 0, 0, -2, 0, 0, 0, 0, 1],
            factors=[],
            prefactors={"(1-u^2)": 0},
        )
        assert ZetaReport.model_validate(report.model_dump()) == report
