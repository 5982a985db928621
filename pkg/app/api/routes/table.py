"""
table: emit counts for a grid as CSV or JSON
"""
import argparse
import sys

from app.api.arguments import add_format_option, positive_int
from app.api.routes.verify import check_oracle_grid
from app.services.table_service import evaluate_grid, render_csv, render_json

TABLE_EPILOG = (
    "Counts are written as plain decimal integers. They can exceed what 64-bit JSON "
    "readers accept, but never 2^127."
)


def register(subparsers) -> None:
    parser = subparsers.add_parser(
        "table",
        help="write counts for all m <= MAXM, n <= MAXN",
        description="Rows in row-major order (m outer, n inner); CSV header m,n,case,count[,oracle,agree].",
        epilog=TABLE_EPILOG,
    )
    parser.add_argument("max_m", metavar="MAXM", type=positive_int)
    parser.add_argument("max_n", metavar="MAXN", type=positive_int)
    add_format_option(parser, choices=("csv", "json"), required=True)
    parser.add_argument("--with-oracle", action="store_true", help="add brute-force oracle columns")
    parser.add_argument("-o", "--output", metavar="PATH", help="write to PATH instead of standard output")
    parser.add_argument("--workers", type=positive_int, help="worker processes (default TABLE_WORKERS)")
    parser.set_defaults(handler=cmd_table)


def cmd_table(args: argparse.Namespace) -> int:
    if args.with_oracle:
        check_oracle_grid(args.max_n)
    rows = evaluate_grid(args.max_m, args.max_n, with_oracle=args.with_oracle, workers=args.workers)
    if args.format == "csv":
        text = render_csv(rows, with_oracle=args.with_oracle)
    else:
        text = render_json(rows, args.max_m, args.max_n)

    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="\n") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    return 0
