"""Text and JSON rendering of command results.

Polynomials print low-to-high as space-separated integers unless ``pretty``
is set. JSON is the pydantic dump serialized by orjson with a two-space indent.
"""

from typing import Any, List, Sequence, Union

import orjson
from pydantic import BaseModel

from cubezeta.algebra import IntPoly
from cubezeta.core.models import (
    CaseStatus,
    OrbitReport,
    OutputFormat,
    PsiReport,
    SpectrumReport,
    VerificationReport,
    ZetaReport,
)


def render_json(payload: Union[BaseModel, Sequence[BaseModel]]) -> str:
    if isinstance(payload, BaseModel):
        data: Any = payload.model_dump(mode="json")
    else:
        data = [item.model_dump(mode="json") for item in payload]
    return orjson.dumps(data, option=orjson.OPT_INDENT_2).decode()


def _tuple(values: Sequence[int]) -> str:
    return "(" + ",".join(str(v) for v in values) + ")"


def _poly(coeffs: Sequence[int], pretty: bool, var: str) -> str:
    poly = IntPoly(coeffs)
    return poly.pretty(var) if pretty else poly.to_text()


def render_zeta(report: ZetaReport, pretty: bool = False) -> str:
    lines = [
        f"n = {_tuple(report.n)}  d = {report.d}  method = {report.method}",
        f"zeta_inverse: {_poly(report.zeta_inverse, pretty, 'u')}",
    ]
    if report.prefactors:
        parts = []
        for label, value in report.prefactors.items():
            if isinstance(value, list):
                b, e = value
                parts.append(f"(1+{b}u)^{e}")
            else:
                parts.append(f"{label}^{value}")
        lines.append("prefactors: " + " ".join(parts))
    if report.factors:
        lines.append("factors:")
        for factor in report.factors:
            lines.append(
                f"  Psi{_tuple(factor.dvec)} ^{factor.exponent}: {_poly(factor.psi, pretty, 'x')}"
            )
    return "\n".join(lines)


def render_psi(report: PsiReport, pretty: bool = False) -> str:
    lines = [f"Psi{_tuple(report.dvec)}: {_poly(report.poly, pretty, 'x')}"]
    for record in report.orbits or []:
        flag = "irreducible" if record.irreducible else "reducible"
        core = _poly(record.irr_core, pretty, "x")
        multiplicity = record.multiplicity or 1
        if pretty and multiplicity > 1:
            core = f"({core})"
        lines.append(f"  orbit {_tuple(record.orbit_rep)}: core {core} ^{multiplicity}  [{flag}]")
    return "\n".join(lines)


def render_orbits(report: OrbitReport) -> str:
    lines = [
        f"{_tuple(report.dvec)}: {len(report.orbits)} orbit(s), "
        f"formula {report.orb_formula}, reduced Betti {report.betti}"
    ]
    for orbit in report.orbits:
        lines.append("  " + " ".join(_tuple(j) for j in orbit))
    return "\n".join(lines)


def render_spectrum(report: SpectrumReport) -> str:
    lines = [f"{report.operator} d = {report.d} on n = {_tuple(report.n)}"]
    lines.extend(f"  {value:.12g}  x{mult}" for value, mult in report.eigenvalues)
    return "\n".join(lines)


def render_verification(report: VerificationReport) -> str:
    lines: List[str] = []
    for case in report.cases:
        label = " ".join(
            f"{k}={_tuple(v) if isinstance(v, list) else v}" for k, v in case.case.items()
        )
        status = case.status.value if isinstance(case.status, CaseStatus) else case.status
        line = f"{status:<6} {label}"
        if case.message:
            line += f"  {case.message}"
        lines.append(line)
    suite = report.suite.value if hasattr(report.suite, "value") else report.suite
    lines.append(
        f"{suite}: {report.passed} passed, {report.failed} failed, {report.reported} reported"
    )
    return "\n".join(lines)


def render(payload: BaseModel, fmt: OutputFormat, pretty: bool = False) -> str:
    """Render one command result in the requested format."""
    if OutputFormat(fmt) == OutputFormat.JSON:
        return render_json(payload)
    if isinstance(payload, ZetaReport):
        return render_zeta(payload, pretty)
    if isinstance(payload, PsiReport):
        return render_psi(payload, pretty)
    if isinstance(payload, OrbitReport):
        return render_orbits(payload)
    if isinstance(payload, SpectrumReport):
        return render_spectrum(payload)
    if isinstance(payload, VerificationReport):
        return render_verification(payload)
    return render_json(payload)
