"""Unit tests for the configuration loader."""

import pytest

from cubezeta.core.config import Config


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    """Keep the limit override out of the process environment."""
    monkeypatch.delenv("CUBEZETA_MAX_DEGREE", raising=False)


@pytest.fixture
def settings_dir(tmp_path):
    """Write a small settings file."""
    (tmp_path / "settings.yaml").write_text(
        "limits:\n"
        "  max_degree: ${CUBEZETA_MAX_DEGREE:-500}\n"
        "  max_bipartite_size: 300\n"
        "runtime:\n"
        "  threads: 2\n"
        "logging:\n"
        "  level: info\n"
        "spectra:\n"
        "  tolerance: 1.0e-6\n"
    )
    return tmp_path


class TestConfig:
    """Test Config loading and overrides."""

    def test_builtin_defaults(self, tmp_path):
        """Test a directory without settings.yaml falls back to the defaults."""
        config = Config(tmp_path)
        limits = config.limits
        assert limits.max_degree == 10_000
        assert limits.max_orbit_box == 1_000_000
        assert config.threads is None
        assert config.log_level == "WARNING"
        assert config.spectral_tolerance == 1e-9
        assert config.quadrature_max_exponent == 22
        assert config.quadrature_min_level == 3

    def test_env_override_replaces_both_bounds(self, tmp_path, monkeypatch):
        """Test CUBEZETA_MAX_DEGREE sets the degree and box bounds."""
        monkeypatch.setenv("CUBEZETA_MAX_DEGREE", "77")
        limits = Config(tmp_path).limits
        assert limits.max_degree == 77
        assert limits.max_orbit_box == 77

    def test_settings_file(self, settings_dir):
        """Test values are read from settings.yaml."""
        config = Config(settings_dir)
        assert config.limits.max_degree == 500
        assert config.limits.max_bipartite_size == 300
        assert config.limits.max_geodesic_length == 12
        assert config.threads == 2
        assert config.log_level == "INFO"
        assert config.spectral_tolerance == 1e-6

    def test_settings_file_env_override(self, settings_dir, monkeypatch):
        """Test ${VAR:-default} picks up the environment."""
        monkeypatch.setenv("CUBEZETA_MAX_DEGREE", "42")
        assert Config(settings_dir).limits.max_degree == 42

    def test_get(self, settings_dir):
        """Test dot-separated lookup and its default."""
        config = Config(settings_dir)
        assert config.get("runtime.threads") == 2
        assert config.get("runtime.missing", "x") == "x"
        assert config.get("limits.max_degree.deeper") is None
