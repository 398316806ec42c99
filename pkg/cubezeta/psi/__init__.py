"""Cyclotomic-like polynomials, their orbit factors and the linear-case table."""

from cubezeta.psi.linear import (
    FAMILY_CORES,
    check_linear_necessary,
    family_tag,
    linear_case_classify,
    scan_linear_cases,
)
from cubezeta.psi.observations import scan_m_2m, scan_m_m, scan_phi_tilde_two
from cubezeta.psi.polynomials import (
    OrbitPolynomial,
    PsiPolynomial,
    c_value,
    evaluate_homogeneous,
    half_polynomial,
    homogenize,
    is_irreducible,
    psi_multi,
    psi_orbit,
)

__all__ = [
    "FAMILY_CORES",
    "OrbitPolynomial",
    "PsiPolynomial",
    "c_value",
    "check_linear_necessary",
    "evaluate_homogeneous",
    "family_tag",
    "half_polynomial",
    "homogenize",
    "is_irreducible",
    "linear_case_classify",
    "psi_multi",
    "psi_orbit",
    "scan_linear_cases",
    "scan_m_2m",
    "scan_m_m",
    "scan_phi_tilde_two",
]
