"""
verify: cross-check the closed forms against the brute-force oracle on a grid
"""
import argparse
import logging

from app.api.arguments import positive_int
from app.core.config import settings
from app.core.errors import RangeError
from app.services.table_service import evaluate_grid, mismatches

logger = logging.getLogger(__name__)


def register(subparsers) -> None:
    parser = subparsers.add_parser(
        "verify",
        help="compare closed forms with brute force for all m <= MAXM, n <= MAXN",
        description="Exit 0 when every cell agrees, 1 on any mismatch.",
    )
    parser.add_argument("max_m", metavar="MAXM", type=positive_int)
    parser.add_argument("max_n", metavar="MAXN", type=positive_int)
    parser.add_argument("--workers", type=positive_int, help="worker processes (default TABLE_WORKERS)")
    parser.set_defaults(handler=cmd_verify)


def check_oracle_grid(max_n: int) -> None:
    if max_n > settings.ORACLE_MAX_N:
        raise RangeError(f"oracle grids are limited to n <= {settings.ORACLE_MAX_N}, got {max_n}")


def cmd_verify(args: argparse.Namespace) -> int:
    check_oracle_grid(args.max_n)
    rows = evaluate_grid(args.max_m, args.max_n, with_oracle=True, workers=args.workers)
    bad = mismatches(rows)
    for row in bad:
        logger.warning(f"Mismatch at ({row.m}, {row.n}): formula {row.count}, oracle {row.oracle}")
        print(f"mismatch m={row.m} n={row.n} case={row.case.value} count={row.count} oracle={row.oracle}")
    print(f"{len(rows)} cells, {len(bad)} mismatches")
    return 1 if bad else 0
