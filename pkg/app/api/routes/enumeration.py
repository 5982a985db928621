"""
enumerate: list every homomorphism D_m -> D_n by its generator images
"""
import argparse
import json

from app.api.arguments import add_format_option, positive_int
from app.services.homcount import enumerate_homs


def register(subparsers) -> None:
    parser = subparsers.add_parser(
        "enumerate",
        help="list homomorphisms D_M -> D_N",
        description="One homomorphism per line as 'r ↦ X, f ↦ Y' in canonical order, "
                    "followed by the total.",
    )
    parser.add_argument("m", metavar="M", type=positive_int)
    parser.add_argument("n", metavar="N", type=positive_int)
    add_format_option(parser)
    parser.set_defaults(handler=cmd_enumerate)


def cmd_enumerate(args: argparse.Namespace) -> int:
    homs = enumerate_homs(args.m, args.n)
    if args.format == "json":
        pairs = [h.model_dump(mode="json", include={"img_r", "img_f"}) for h in homs]
        print(json.dumps(pairs, indent=2, ensure_ascii=False))
        return 0

    for h in homs:
        print(h.describe())
    print(f"total {len(homs)}")
    return 0
