"""
count: closed-form number of homomorphisms D_m -> D_n
"""
import argparse

from app.api.arguments import add_format_option, positive_int
from app.core.errors import UsageError
from app.services.homcount import count_endos, count_homs


def register(subparsers) -> None:
    parser = subparsers.add_parser(
        "count",
        help="count homomorphisms D_M -> D_N",
        description="Print the number of homomorphisms D_M -> D_N, its parity case and the "
                    "instantiated formula. With --endo N, count the endomorphisms of D_N.",
        epilog="The divisor sum is computed by trial division, so gcd(M, N) may not exceed "
               "DIVISOR_SCAN_MAX (default 10^12); M and N themselves are only bounded by the "
               "COUNT_BITS cap.",
    )
    parser.add_argument("m", metavar="M", type=positive_int, nargs="?")
    parser.add_argument("n", metavar="N", type=positive_int, nargs="?")
    parser.add_argument("--endo", metavar="N", type=positive_int, help="count endomorphisms of D_N")
    add_format_option(parser)
    parser.set_defaults(handler=cmd_count)


def cmd_count(args: argparse.Namespace) -> int:
    if args.endo is not None:
        result = count_endos(args.endo)
    elif args.m is not None and args.n is not None:
        result = count_homs(args.m, args.n)
    else:
        raise UsageError("count needs M and N, or --endo N")

    if args.format == "json":
        print(result.model_dump_json(exclude_none=True))
    else:
        print(f"{result.count} ({result.case.value}): {result.formula}")
    return 0
