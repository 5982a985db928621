"""
Command-line entry point: count, enumerate, verify, table
"""
import argparse
import logging
import sys
from typing import List, Optional

from pydantic import ValidationError

from app.api.routes import count, enumeration, table, verify
from app.core.config import settings
from app.core.errors import ConsistencyError, RangeError, UsageError
from app.core.logging import configure_logging

logger = logging.getLogger(__name__)

# Exit statuses
EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dihedral-homs",
        description="Count and enumerate group homomorphisms between dihedral groups D_m -> D_n.",
    )
    parser.add_argument("--version", action="version", version=f"{settings.APP_NAME} {settings.VERSION}")
    parser.add_argument("--log-level", choices=["DEBUG", "INFO", "WARNING", "ERROR"], help="override LOG_LEVEL")
    subparsers = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    # Register subcommands
    for route in (count, enumeration, verify, table):
        route.register(subparsers)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    if hasattr(sys.stdout, "reconfigure"):
        sys.stdout.reconfigure(encoding="utf-8")

    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(args.log_level)

    try:
        return args.handler(args)
    except ConsistencyError as e:
        logger.error(f"Self-check failed: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_MISMATCH
    except (UsageError, RangeError, ValidationError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
