"""Command line entry point: list the cases, verify them or trace one of them.
Exit status is 0 when every verdict passes, 1 when a metric fails and 2 for
an unusable configuration or an unknown case.
"""

import argparse
import sys
from collections.abc import Sequence

from app.config import settings
from app.exceptions import ConfigError, UnknownCaseError
from app.lab_logger import logger
from app.linearize.catalog import list_chains
from app.reduce.catalog import get_case
from app.systems.catalog import list_systems, parse_system_id
from app.verification.run_config import load_run_config
from app.verification.runner import run_suite, suite_report, write_report
from app.verification.traces import trace

EXIT_PASSED = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hidden-linearity-lab",
        description=(
            "Numerical verification of the reductions, linearizations and "
            "symmetries of superintegrable Hamiltonian systems"
        ),
    )
    parser.add_argument(
        "--version", action="version", version=f"%(prog)s {settings.app_version}"
    )
    subcommands = parser.add_subparsers(dest="command", required=True)

    subcommands.add_parser("list", help="List the cases of the catalog")

    verify = subcommands.add_parser("verify", help="Run the verification suite")
    verify.add_argument(
        "--case",
        action="append",
        dest="cases",
        metavar="ID",
        help="Case to verify, repeatable, all of them by default",
    )
    verify.add_argument("--seed", type=int, help="Seed of the random samples")
    verify.add_argument("--tol", type=float, help="Integration tolerance")
    verify.add_argument("--out", help="JSON report file, stdout by default")
    verify.add_argument("--config", help="TOML run configuration")
    verify.add_argument(
        "--workers", type=int, help="Worker processes, 1 runs sequentially"
    )

    trace_parser = subcommands.add_parser(
        "trace", help="Write the CSV traces of a case"
    )
    trace_parser.add_argument("--case", required=True, metavar="ID")
    trace_parser.add_argument("--dir", required=True, dest="directory")
    trace_parser.add_argument("--config", help="TOML run configuration")
    return parser


def list_command() -> int:
    for system_id in list_systems():
        case = get_case(system_id)
        forms = ", ".join(form.name for form in case.forms())
        chains = ", ".join(chain.name for chain in list_chains(system_id))
        sys.stdout.write(f"{system_id}\tforms: {forms}\tchains: {chains or '-'}\n")
    return EXIT_PASSED


def verify_command(args: argparse.Namespace) -> int:
    cases = [parse_system_id(case) for case in args.cases or ()]
    config = load_run_config(args.config, args.seed, args.tol, cases)
    reports = run_suite(config, args.workers)
    report = suite_report(config, reports)
    document = write_report(report, args.out)
    if args.out is None:
        sys.stdout.write(document + "\n")

    failed = [str(r.case_id) for r in reports if not r.passed]
    if failed:
        logger.error("{} of {} cases failed : {}", len(failed), len(reports), failed)
        return EXIT_FAILED
    logger.info("All {} cases passed", len(reports))
    return EXIT_PASSED


def trace_command(args: argparse.Namespace) -> int:
    system_id = parse_system_id(args.case)
    config = load_run_config(args.config)
    for path in trace(system_id, config, args.directory):
        sys.stdout.write(f"{path}\n")
    return EXIT_PASSED


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "list":
            return list_command()
        if args.command == "verify":
            return verify_command(args)
        return trace_command(args)
    except (ConfigError, UnknownCaseError) as error:
        logger.error("{}", error)
        return EXIT_USAGE


def run() -> None:  # pragma: no cover
    sys.exit(main())
