"""Command-line front end and the verification suites it drives."""

from cubezeta.cli.commands import cmd_orbits, cmd_psi, cmd_spectrum, cmd_zeta
from cubezeta.cli.render import render, render_json
from cubezeta.cli.verify import SuiteOptions, run_suite

__all__ = [
    "SuiteOptions",
    "cmd_orbits",
    "cmd_psi",
    "cmd_spectrum",
    "cmd_zeta",
    "render",
    "render_json",
    "run_suite",
]
