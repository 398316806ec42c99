"""Typed records exchanged between the library, the runner and the command line."""

from enum import Enum
from typing import Any, Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field


class OutputFormat(str, Enum):
    """Rendering of command results."""
    TEXT = "text"
    JSON = "json"


class Direction(str, Enum):
    """Up or down composite of the twisted incidence operators."""
    UP = "up"
    DOWN = "down"


class MatrixKind(str, Enum):
    """Kinds of twisted matrices indexed by simplices of the complete complex."""
    INCIDENCE = "incidence"
    INCIDENCE_DUAL = "incidence-dual"
    ADJACENCY_UP = "A-up"
    ADJACENCY_DOWN = "A-down"
    COBOUNDARY = "coboundary"
    COBOUNDARY_DUAL = "coboundary-dual"
    LAPLACIAN_UP = "L-up"
    LAPLACIAN_DOWN = "L-down"


class ZetaMethod(str, Enum):
    """Route used to assemble a reciprocal zeta polynomial."""
    AUTO = "auto"
    TOP = "top"
    TOP_DIRECT = "top-direct"
    GENERAL = "general"
    CODIM1 = "codim1"
    BASS = "bass"


class VerifySuite(str, Enum):
    """Named verification sweeps."""
    ORBITS = "orbits"
    COR13 = "cor13"
    BASS = "bass"
    GEODESICS = "geodesics"
    SPECTRA = "spectra"
    LINEAR_TABLE = "linear-table"
    OBSERVATIONS = "observations"


class CaseStatus(str, Enum):
    """Outcome of a single verification case."""
    PASS = "PASS"
    FAIL = "FAIL"
    REPORT = "REPORT"
    ERROR = "ERROR"


class ResourceLimits(BaseModel):
    """Bounds that keep exact computations at desk scale."""

    model_config = ConfigDict(frozen=True)

    max_degree: int = Field(default=10_000, ge=1, description="Degree bound for Psi products")
    max_orbit_box: int = Field(default=1_000_000, ge=1, description="Index box bound for orbit scans")
    max_bipartite_size: int = Field(default=5000, ge=1, description="|V|+|E| bound for B_H")
    max_geodesic_length: int = Field(default=12, ge=1, description="Largest m for geodesic counts")


class OrbitReport(BaseModel):
    """Galois-orbit decomposition of J_{d1} x ... x J_{dq}."""

    dvec: List[int]
    orbits: List[List[List[int]]]
    orb_formula: int
    betti: int


class OrbitPolynomialRecord(BaseModel):
    """Integer polynomial attached to one Galois orbit."""

    orbit_rep: List[int]
    poly: List[int]
    irr_core: List[int]
    multiplicity: Optional[int] = Field(default=None, ge=1)
    irreducible: bool


class PsiReport(BaseModel):
    """Cyclotomic-like polynomial of a divisor vector, optionally split by orbit."""

    dvec: List[int]
    poly: List[int]
    degree: int
    orbits: Optional[List[OrbitPolynomialRecord]] = None


class ZetaFactorRecord(BaseModel):
    """One Psi factor of the divisor-tuple factorization of the top skeleton."""

    dvec: List[int]
    exponent: int
    psi: List[int]


class ZetaReport(BaseModel):
    """Reciprocal zeta polynomial of a skeleton together with its factored form."""

    n: List[int]
    d: int
    method: str
    zeta_inverse: List[int]
    factors: List[ZetaFactorRecord] = Field(default_factory=list)
    prefactors: Dict[str, Any] = Field(default_factory=dict)


class SpectrumReport(BaseModel):
    """Eigenvalues with multiplicities, sorted ascending."""

    n: List[int]
    d: int
    operator: str
    eigenvalues: List[Tuple[float, int]]


class IotaOrbitReport(BaseModel):
    """Brute-force and closed-form counts of swap-invariant orbits of (m, m)."""

    m: int
    invariant_orbit_count: int
    formula_A: int
    f1: int
    f2: int
    f3: int
    formula_applicable: bool
    agrees: bool


class LinearCaseRecord(BaseModel):
    """An orbit of (d1, d2) whose irreducible core is linear."""

    d1: int
    d2: int
    orbit_rep: List[int]
    irr_core: List[int]
    family_tag: Optional[str]
    swapped: bool = False


class LinearNecessaryReport(BaseModel):
    """Necessary conditions for a linear irreducible core."""

    d1: int
    d2: int
    g: int
    g1: int
    g2: int
    m1: int
    m2: int
    passes: bool


class ObservationFinding(BaseModel):
    """A case where an empirical irreducibility or distinctness pattern fails."""

    observation: str
    dvec: List[int]
    orbit_rep: List[int]
    detail: str


class CaseResult(BaseModel):
    """Outcome of one verification case."""

    suite: VerifySuite
    case: Dict[str, Any]
    status: CaseStatus
    message: str = ""
    data: Dict[str, Any] = Field(default_factory=dict)

    model_config = ConfigDict(use_enum_values=True)

    @property
    def failed(self) -> bool:
        """Check whether this case counts against the exit code."""
        return self.status in (CaseStatus.FAIL, CaseStatus.ERROR, "FAIL", "ERROR")


class VerificationReport(BaseModel):
    """All cases of a suite in deterministic order."""

    suite: VerifySuite
    cases: List[CaseResult] = Field(default_factory=list)
    passed: int = 0
    failed: int = 0
    reported: int = 0

    model_config = ConfigDict(use_enum_values=True)

    @classmethod
    def from_cases(cls, suite: VerifySuite, cases: List[CaseResult]) -> "VerificationReport":
        """Tally case outcomes."""
        passed = sum(1 for c in cases if c.status == CaseStatus.PASS)
        reported = sum(1 for c in cases if c.status == CaseStatus.REPORT)
        failed = sum(1 for c in cases if c.failed)
        return cls(suite=suite, cases=cases, passed=passed, failed=failed, reported=reported)

    def is_success(self) -> bool:
        """Check if no hard check failed."""
        return self.failed == 0
