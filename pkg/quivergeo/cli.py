#!/usr/bin/env python3
"""
Command-line front end for quivergeo.

Subcommands build, points, verify, hilbert and equations each produce a
RunReport, printed as text or JSON. Exit status is 0 when the verdict
passes, 1 when it fails and 2 on usage errors.
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

from .commands import COMMANDS, RunReport
from .config import ConfigurationError, create_example_config, load_config
from .constants import BUILD_MODELS, LOG_LEVELS, OUTPUT_FORMATS, POINT_SOURCES
from .utils.logging import get_logger, setup_logging

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


def parse_degree_list(text: str) -> List[int]:
    """Parse '0,2,3' into [0, 2, 3]."""
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"invalid degree list {text!r}: expected comma-separated integers"
        )


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", type=str, help="Path to YAML configuration file.")
    common.add_argument(
        "--log-level",
        choices=LOG_LEVELS,
        help="Set the logging level. (overrides config file)",
    )
    common.add_argument(
        "--format",
        choices=OUTPUT_FORMATS,
        help="Report format. (overrides config file)",
    )
    common.add_argument(
        "--budget",
        type=int,
        help="Maximum number of enumeration candidates. (overrides config file)",
    )
    common.add_argument(
        "--out",
        type=str,
        help="Write JSON here (the representation for build, the report otherwise).",
    )

    parser = argparse.ArgumentParser(
        prog="quivergeo",
        description="Realize projective schemes as quiver grassmannians and moduli.",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Configuration Sources (in priority order):
  1. CLI arguments (highest priority)
  2. Environment variables (QUIVERGEO_*)
  3. Configuration file (--config)
  4. Default values (lowest priority)

Examples:
  %(prog)s build bundled:conic --model kronecker
  %(prog)s points bundled:conic --via moduli --q 5
  %(prog)s verify bundled:twisted-cubic --q 3 --q 5 --format json
  %(prog)s hilbert problem.txt --upto 6
  %(prog)s --create-example-config
        """,
    )
    parser.add_argument(
        "--create-example-config",
        type=str,
        nargs="?",
        const="quivergeo.example.yaml",
        help="Create an example configuration file and exit. Optionally specify filename.",
    )

    subparsers = parser.add_subparsers(dest="command")

    build = subparsers.add_parser(
        "build", parents=[common], help="Build a quiver presentation and its module."
    )
    build.add_argument("problem", help="Problem file or bundled:<name>")
    build.add_argument("--model", choices=BUILD_MODELS, default="kronecker")
    build.add_argument("--degrees", type=parse_degree_list, help="Degree set, e.g. 0,2,3")

    points = subparsers.add_parser(
        "points", parents=[common], help="Enumerate F_q-points through one realization."
    )
    points.add_argument("problem", help="Problem file or bundled:<name>")
    points.add_argument("--via", choices=POINT_SOURCES, default="direct")
    points.add_argument("--q", type=int, help="Prime to enumerate over")
    points.add_argument("--degrees", type=parse_degree_list, help="Degree set, e.g. 0,2,3")

    verify = subparsers.add_parser(
        "verify", parents=[common], help="Run every realization check over each prime."
    )
    verify.add_argument("problem", nargs="?", help="Problem file or bundled:<name>")
    verify.add_argument(
        "--q", type=int, action="append", dest="qs", help="Prime to verify over (repeatable)"
    )
    verify.add_argument(
        "--representation", type=str, help="Representation JSON to check against its relations"
    )

    hilbert = subparsers.add_parser(
        "hilbert", parents=[common], help="Hilbert function of the coordinate ring."
    )
    hilbert.add_argument("problem", help="Problem file or bundled:<name>")
    hilbert.add_argument("--upto", type=int, help="Last degree (defaults to d)")

    equations = subparsers.add_parser(
        "equations", parents=[common], help="Equations of the Kronecker grassmannian."
    )
    equations.add_argument("problem", help="Problem file or bundled:<name>")

    return parser


def command_kwargs(args: argparse.Namespace) -> Dict[str, Any]:
    """Keyword arguments for the selected command's run()."""
    if args.command == "build":
        return {
            "problem": args.problem,
            "model": args.model,
            "out": args.out,
            "degrees": args.degrees,
        }
    if args.command == "points":
        return {"problem": args.problem, "via": args.via, "q": args.q, "degrees": args.degrees}
    if args.command == "verify":
        return {
            "problem": args.problem,
            "qs": args.qs or [],
            "representation": args.representation,
        }
    if args.command == "hilbert":
        return {"problem": args.problem, "upto": args.upto}
    return {"problem": args.problem}


def write_report(report: RunReport, path: str, indent: int) -> None:
    Path(path).write_text(report.to_json(indent) + "\n", encoding="utf-8")


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.create_example_config:
        try:
            create_example_config(args.create_example_config)
            print(f"Example configuration created: {args.create_example_config}")
            print(f"Edit the file and use: {parser.prog} <command> --config {args.create_example_config}")
            return EXIT_PASS
        except ConfigurationError as e:
            print(f"Error creating example config: {e}", file=sys.stderr)
            return EXIT_FAIL

    if args.command is None:
        parser.print_usage(sys.stderr)
        return EXIT_USAGE

    try:
        config = load_config(args.config)
        config.update_from_cli_args(
            {"log_level": args.log_level, "format": args.format, "budget": args.budget}
        )
    except ConfigurationError as e:
        print(f"Configuration error: {e}", file=sys.stderr)
        return EXIT_USAGE

    log_file = config.get("logging.file")
    setup_logging(
        level=config.get("logging.level"),
        format_string=config.get("logging.format"),
        handler=logging.FileHandler(log_file) if log_file else None,
    )
    cli_logger = get_logger(__name__)
    if args.config:
        cli_logger.info(f"Configuration file: {args.config}")
    cli_logger.debug(f"Enumeration budget: {config.get('enumeration.budget')}")

    command = COMMANDS[args.command](config)
    try:
        report = command.run(**command_kwargs(args))
    except (ValueError, TypeError) as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_USAGE

    indent = config.get("output.indent")
    if config.get("output.format") == "json":
        print(report.to_json(indent))
    else:
        print(command.render_text(report))

    if args.out and args.command != "build":
        try:
            write_report(report, args.out, indent)
        except OSError as e:
            print(f"Error writing {args.out}: {e.strerror}", file=sys.stderr)
            return EXIT_FAIL

    cli_logger.info(f"{args.command}: {report.verdict}")
    return EXIT_PASS if report.passed else EXIT_FAIL


def cli_main():
    """Entry point for the quivergeo console script."""
    sys.exit(main())


if __name__ == "__main__":
    cli_main()
