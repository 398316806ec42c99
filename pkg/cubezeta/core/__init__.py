"""Core configuration, records, errors and the case runner."""

from cubezeta.core.config import Config
from cubezeta.core.errors import (
    CubeZetaError,
    DomainError,
    InvariantViolation,
    NotGaloisStableError,
    ResourceLimitError,
    VerificationFailure,
)
from cubezeta.core.models import ResourceLimits

__all__ = [
    "Config",
    "CubeZetaError",
    "DomainError",
    "InvariantViolation",
    "NotGaloisStableError",
    "ResourceLimitError",
    "ResourceLimits",
    "VerificationFailure",
]
