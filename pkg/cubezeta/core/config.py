"""Configuration loader for cubezeta."""

import copy
import os
import re
from pathlib import Path
from typing import Any, Dict, Optional

import yaml
from dotenv import load_dotenv

from cubezeta.core.models import ResourceLimits

_ENV_PATTERN = re.compile(r"^\$\{(?P<name>[A-Za-z_][A-Za-z0-9_]*)(?::-(?P<default>.*))?\}$")

# Mirrors config/settings.yaml so that environment overrides still apply when the
# process runs outside the repository root.
DEFAULT_SETTINGS: Dict[str, Any] = {
    "limits": {
        "max_degree": "${CUBEZETA_MAX_DEGREE:-10000}",
        "max_orbit_box": "${CUBEZETA_MAX_DEGREE:-1000000}",
        "max_bipartite_size": 5000,
        "max_geodesic_length": 12,
    },
    "runtime": {
        "threads": None,
    },
    "logging": {
        "level": "WARNING",
    },
    "spectra": {
        "tolerance": 1e-9,
    },
    "quadrature": {
        "max_grid_exponent": 22,
        "min_level": 3,
    },
}


class Config:
    """Configuration manager for cubezeta."""

    def __init__(self, config_dir: Optional[Path] = None):
        """Initialize configuration loader.

        Args:
            config_dir: Directory containing settings.yaml. Defaults to ./config
        """
        load_dotenv()

        self.config_dir = Path(config_dir) if config_dir else Path("config")
        self._settings: Dict[str, Any] = {}

        self._load_configs()

    def _load_configs(self) -> None:
        """Load the settings file, falling back to the built-in defaults."""
        settings_path = self.config_dir / "settings.yaml"

        if settings_path.exists():
            with open(settings_path, "r") as f:
                self._settings = yaml.safe_load(f) or {}
        else:
            self._settings = copy.deepcopy(DEFAULT_SETTINGS)

        self._substitute_env_vars(self._settings)

    def _substitute_env_vars(self, config: Any) -> None:
        """Recursively substitute ${VAR} and ${VAR:-default} values in config."""
        if isinstance(config, dict):
            items = list(config.items())
        elif isinstance(config, list):
            items = list(enumerate(config))
        else:
            return

        for key, value in items:
            if isinstance(value, str):
                match = _ENV_PATTERN.match(value.strip())
                if match:
                    config[key] = os.getenv(match.group("name"), match.group("default") or "")
            elif isinstance(value, (dict, list)):
                self._substitute_env_vars(value)

    def get(self, key_path: str, default: Any = None) -> Any:
        """Get configuration value by dot-separated path.

        Args:
            key_path: Dot-separated path (e.g., 'limits.max_degree')
            default: Default value if key not found

        Returns:
            Configuration value
        """
        keys = key_path.split(".")
        value = self._settings

        for key in keys:
            if isinstance(value, dict) and key in value:
                value = value[key]
            else:
                return default

        return value

    @property
    def limits(self) -> ResourceLimits:
        """Resource bounds with empty values left at their defaults."""
        raw = self.get("limits", {}) or {}
        return ResourceLimits(**{k: v for k, v in raw.items() if v not in (None, "")})

    @property
    def threads(self) -> Optional[int]:
        """Configured worker count, None meaning all cores."""
        value = self.get("runtime.threads")
        return int(value) if value not in (None, "") else None

    @property
    def log_level(self) -> str:
        """Get configured log level."""
        return str(self.get("logging.level", "WARNING")).upper()

    @property
    def spectral_tolerance(self) -> float:
        """Absolute tolerance for floating-point spectral comparisons."""
        return float(self.get("spectra.tolerance", 1e-9))

    @property
    def quadrature_max_exponent(self) -> int:
        """Total grid budget exponent: at most 2**k points per axis with k*q within it."""
        return int(self.get("quadrature.max_grid_exponent", 22))

    @property
    def quadrature_min_level(self) -> int:
        """Smallest per-axis level cap regardless of the dimension."""
        return int(self.get("quadrature.min_level", 3))
