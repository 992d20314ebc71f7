import argparse
import sys
from typing import List, Optional

from loguru import logger

from ..core.config import settings
from ..core.exceptions import (
    BaseAppException,
    CalibrationError,
    ContainmentError,
    DimensionShiftError,
    FixtureError,
    InputValidationError,
    InvariantViolationError,
    MissingClassMapError,
    ModelMismatchError,
    RangeError,
)
from ..core.logging_setup import setup_logging
from ..models.report import RunReport
from .commands import arrangement, cells_pn, constructible, grassmannian, schema
from .render import render

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_INPUT_ERROR = 2

INPUT_ERRORS = (
    InputValidationError,
    FixtureError,
    CalibrationError,
    ModelMismatchError,
    RangeError,
    ContainmentError,
    MissingClassMapError,
    DimensionShiftError,
)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog=settings.PROJECT_NAME,
        description=settings.PROJECT_DESCRIPTION,
    )
    parser.add_argument("--output", choices=["json", "table"], default="table", help="Report format on stdout")
    parser.add_argument("--quiet", action="store_true", help="Only log warnings and errors")
    parser.add_argument("--version", action="version", version=f"%(prog)s {settings.VERSION}")
    subparsers = parser.add_subparsers(dest="command", required=True)

    # One module per command, each registering its own subparser
    grassmannian.register(subparsers)
    cells_pn.register(subparsers)
    arrangement.register(subparsers)
    constructible.register(subparsers)
    schema.register(subparsers)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse exits 2 on usage errors and 0 for --help/--version
        return int(e.code) if isinstance(e.code, int) else EXIT_INPUT_ERROR

    setup_logging(quiet=args.quiet)
    try:
        result = args.handler(args)
    except INPUT_ERRORS as e:
        logger.error(f"{type(e).__name__}: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except InvariantViolationError as e:
        logger.error(f"Invariant violated: {e}")
        print(f"invariant violated: {e}", file=sys.stderr)
        return EXIT_CHECK_FAILED
    except BaseAppException as e:
        logger.error(f"{type(e).__name__}: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_CHECK_FAILED

    if isinstance(result, str):
        print(result)
        return EXIT_OK

    report: RunReport = result
    report.exit_status = EXIT_CHECK_FAILED if report.failures else EXIT_OK
    for failure in report.failures:
        logger.warning(f"Check {failure.name} failed")
    logger.info(f"{report.command}: {len(report.checks)} checks, {len(report.failures)} failed")
    print(render(report, args.output))
    return report.exit_status
