"""Command-line entry point: ``python -m cubezeta.cli`` or the ``cubezeta`` script."""

import argparse
import asyncio
import logging
import sys
from pathlib import Path
from typing import List, Optional

from pydantic import BaseModel

from cubezeta.core.config import Config
from cubezeta.core.errors import (
    DomainError,
    InvariantViolation,
    NotGaloisStableError,
    ResourceLimitError,
    VerificationFailure,
)
from cubezeta.core.models import OutputFormat, VerifySuite, ZetaMethod
from cubezeta.cli.commands import SPECTRUM_OPERATORS, cmd_orbits, cmd_psi, cmd_spectrum, cmd_zeta
from cubezeta.cli.render import render
from cubezeta.cli.verify import SuiteOptions, run_suite

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_RESOURCE = 3
EXIT_VERIFICATION = 4


def _global_flags(suppress: bool) -> argparse.ArgumentParser:
    """Flags accepted before or after the subcommand."""
    parser = argparse.ArgumentParser(
        add_help=False, argument_default=argparse.SUPPRESS if suppress else None
    )
    parser.add_argument(
        "--format",
        choices=[f.value for f in OutputFormat],
        default=argparse.SUPPRESS if suppress else OutputFormat.TEXT.value,
        help="Output format",
    )
    parser.add_argument(
        "--pretty",
        action="store_true",
        default=argparse.SUPPRESS if suppress else False,
        help="Render polynomials in x^k notation",
    )
    parser.add_argument("--threads", type=int, help="Worker threads (default: all cores)")
    parser.add_argument("--config", type=Path, help="Directory containing settings.yaml")
    parser.add_argument("--log-level", help="Logging level (default from config)")
    return parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cubezeta",
        description="Exact Ihara zeta functions of periodic cubical lattices",
        parents=[_global_flags(suppress=False)],
    )
    common = _global_flags(suppress=True)
    sub = parser.add_subparsers(dest="command", required=True)

    zeta = sub.add_parser("zeta", parents=[common], help="1/zeta of a skeleton and its factors")
    zeta.add_argument("--n", required=True, help="Side lengths, e.g. 4,6")
    zeta.add_argument("--d", type=int, default=None, help="Skeleton dimension (default q)")
    zeta.add_argument(
        "--method",
        choices=[m.value for m in ZetaMethod],
        default=ZetaMethod.AUTO.value,
        help="Closed form to evaluate, or the Bass determinant",
    )

    psi = sub.add_parser("psi", parents=[common], help="Psi_d and its Galois-orbit factors")
    psi.add_argument("--d", required=True, help="Vector d, e.g. 5,5")
    psi.add_argument("--orbit-split", action="store_true", help="List the orbit factors")

    orbits = sub.add_parser("orbits", parents=[common], help="Galois orbits of the index box")
    orbits.add_argument("--d", required=True, help="Vector d, e.g. 4,6")

    spectrum = sub.add_parser("spectrum", parents=[common], help="Spectrum of a lattice operator")
    spectrum.add_argument("--n", required=True, help="Side lengths")
    spectrum.add_argument("--d", type=int, required=True, help="Cube dimension")
    spectrum.add_argument("--operator", choices=SPECTRUM_OPERATORS, default="laplacian-up")

    verify = sub.add_parser("verify", parents=[common], help="Run a verification suite")
    verify.add_argument("suite", choices=[s.value for s in VerifySuite])
    verify.add_argument("--qmax", type=int, default=3, help="Largest q for orbit counts")
    verify.add_argument("--dmax", type=int, default=None, help="Largest entry of d")
    verify.add_argument("--mmax", type=int, default=8, help="Longest geodesic length")
    verify.add_argument("--cases", choices=["default", "extended"], default="default")
    return parser


def _configure_logging(level: str) -> None:
    logging.basicConfig(
        level=getattr(logging, level.upper(), logging.WARNING),
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        stream=sys.stderr,
        force=True,
    )


def _run(args: argparse.Namespace, config: Config) -> int:
    limits = config.limits
    threads = args.threads or config.threads
    fmt = OutputFormat(args.format)
    payload: BaseModel

    if args.command == "zeta":
        payload = cmd_zeta(args.n, args.d, args.method, limits)
    elif args.command == "psi":
        payload = cmd_psi(args.d, args.orbit_split, limits)
    elif args.command == "orbits":
        payload = cmd_orbits(args.d, limits)
    elif args.command == "spectrum":
        payload = cmd_spectrum(args.n, args.d, args.operator, config.spectral_tolerance)
    else:
        options = SuiteOptions(
            qmax=args.qmax,
            dmax=args.dmax,
            mmax=args.mmax,
            cases=args.cases,
            tolerance=config.spectral_tolerance,
        )
        report = asyncio.run(run_suite(VerifySuite(args.suite), options, limits, threads))
        print(render(report, fmt, args.pretty))
        if not report.is_success():
            raise VerificationFailure(report.suite, report.failed)
        return EXIT_OK

    print(render(payload, fmt, args.pretty))
    return EXIT_OK


def main(argv: Optional[List[str]] = None) -> int:
    """Parse arguments, run one subcommand and map errors to exit codes."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    config = Config(args.config)
    _configure_logging(args.log_level or config.log_level)

    try:
        return _run(args, config)
    except DomainError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceLimitError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_RESOURCE
    except (VerificationFailure, InvariantViolation, NotGaloisStableError) as e:
        logger.error(f"{type(e).__name__}: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_VERIFICATION


if __name__ == "__main__":
    sys.exit(main())
