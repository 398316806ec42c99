"""Unit tests for the command line: subcommands, rendering and exit codes."""

import orjson
import pytest

import cubezeta.cli.__main__ as cli_main
from cubezeta.cli import cmd_orbits, cmd_psi, cmd_spectrum, cmd_zeta, render
from cubezeta.cli.__main__ import (
    EXIT_OK,
    EXIT_RESOURCE,
    EXIT_USAGE,
    EXIT_VERIFICATION,
    main,
)
from cubezeta.core.errors import DomainError
from cubezeta.core.models import (
    CaseResult,
    CaseStatus,
    OutputFormat,
    VerificationReport,
    VerifySuite,
)


@pytest.fixture
def run(tmp_path, capsys, monkeypatch):
    """Run main() against built-in settings and capture its output."""
    monkeypatch.delenv("CUBEZETA_MAX_DEGREE", raising=False)

    def _run(*argv):
        code = main([*argv, "--config", str(tmp_path)])
        out, err = capsys.readouterr()
        return code, out, err

    return _run


class TestCommands:
    """Test the subcommand functions."""

    def test_zeta_report(self):
        """Test the 5-cycle report."""
        report = cmd_zeta("5", 1)
        assert report.zeta_inverse == [1, 0, 0, 0, 0, -2, 0, 0, 0, 0, 1]
        assert report.method == "top"

    def test_zeta_bass(self):
        """Test the Bass route returns the same polynomial."""
        assert cmd_zeta([3, 3], 1, "bass").zeta_inverse == cmd_zeta([3, 3], 1).zeta_inverse

    def test_zeta_bass_range(self):
        """Test the Bass route checks d."""
        with pytest.raises(DomainError):
            cmd_zeta("3,3", 3, "bass")

    def test_psi(self):
        """Test Psi_(5,5) with its orbit split."""
        report = cmd_psi("5,5", orbit_split=True)
        assert len(report.orbits) == 2

    def test_orbits(self):
        """Test the orbit listing of (5, 5)."""
        assert cmd_orbits("5,5").orb_formula == 2

    def test_spectrum_operators(self):
        """Test closed-form and block spectra."""
        top = cmd_spectrum("2,2", 2, "adown-top").eigenvalues
        assert [m for _, m in top] == [1, 2, 1]
        assert [round(v, 9) for v, _ in top] == [0.0, 4.0, 8.0]
        report = cmd_spectrum("4", 0, "adjacency-up")
        assert sum(m for _, m in report.eigenvalues) == 4
        with pytest.raises(DomainError):
            cmd_spectrum("2,2", 1, "adown-top")
        with pytest.raises(DomainError):
            cmd_spectrum("2,2", 1, "hessian")


class TestRender:
    """Test text and JSON rendering."""

    def test_zeta_text(self):
        """Test the text layout of a zeta report."""
        text = render(cmd_zeta("2,2"), OutputFormat.TEXT)
        assert "prefactors: (1-u^2)^4" in text
        assert "Psi(2,2) ^1:" in text

    def test_pretty(self):
        """Test pretty polynomials."""
        text = render(cmd_zeta("3", 1), OutputFormat.TEXT, pretty=True)
        assert "zeta_inverse: u⁶ - 2u³ + 1" in text

    def test_json(self):
        """Test JSON output parses back."""
        payload = orjson.loads(render(cmd_orbits("3,5"), OutputFormat.JSON))
        assert payload["dvec"] == [3, 5]

    def test_verification_text(self):
        """Test the summary line of a verification report."""
        case = CaseResult(suite=VerifySuite.COR13, case={"n": [5]}, status=CaseStatus.PASS)
        text = render(VerificationReport.from_cases(VerifySuite.COR13, [case]), OutputFormat.TEXT)
        assert text.splitlines() == ["PASS   n=(5)", "cor13: 1 passed, 0 failed, 0 reported"]


class TestExitCodes:
    """Test main() maps outcomes to exit codes."""

    def test_zeta_ok(self, run):
        """Test a successful computation."""
        code, out, _ = run("zeta", "--n", "5", "--d", "1")
        assert code == EXIT_OK
        assert "zeta_inverse: 1 0 0 0 0 -2 0 0 0 0 1" in out

    @pytest.mark.parametrize(
        "argv",
        [["--format", "json", "zeta", "--n", "4,6"], ["zeta", "--n", "4,6", "--format", "json"]],
    )
    def test_json_flag_position(self, run, argv):
        """Test the format flag before or after the subcommand."""
        code, out, _ = run(*argv)
        assert code == EXIT_OK
        payload = orjson.loads(out)
        assert payload["n"] == [4, 6]
        assert len(payload["factors"]) == 12

    @pytest.mark.parametrize(
        "argv",
        [
            ["zeta", "--n", "1,3"],
            ["zeta", "--n", "3,3", "--d", "3"],
            ["zeta", "--n", "3,3", "--d", "1", "--method", "top"],
            ["spectrum", "--n", "3,3", "--d", "1", "--operator", "adown-top"],
            ["zeta"],
            ["frobnicate"],
        ],
    )
    def test_usage_errors(self, run, argv):
        """Test domain and parse errors exit with 2."""
        code, _, _ = run(*argv)
        assert code == EXIT_USAGE

    def test_resource_limit(self, run, monkeypatch):
        """Test an exceeded bound exits with 3."""
        monkeypatch.setenv("CUBEZETA_MAX_DEGREE", "10")
        code, _, err = run("psi", "--d", "101")
        assert code == EXIT_RESOURCE
        assert err.startswith("error:")

    def test_verification_failure(self, run, monkeypatch):
        """Test a failed hard check exits with 4."""

        async def failing_suite(suite, options=None, limits=None, threads=None):
            case = CaseResult(suite=suite, case={"n": [5]}, status=CaseStatus.FAIL, message="mismatch")
            return VerificationReport.from_cases(suite, [case])

        monkeypatch.setattr(cli_main, "run_suite", failing_suite)
        code, out, _ = run("verify", "cor13")
        assert code == EXIT_VERIFICATION
        assert "FAIL" in out

    def test_reports_do_not_fail(self, run, monkeypatch):
        """Test REPORT cases keep exit code 0."""

        async def reporting_suite(suite, options=None, limits=None, threads=None):
            case = CaseResult(suite=suite, case={"dvec": [12, 12]}, status=CaseStatus.REPORT)
            return VerificationReport.from_cases(suite, [case])

        monkeypatch.setattr(cli_main, "run_suite", reporting_suite)
        code, _, _ = run("verify", "observations")
        assert code == EXIT_OK
