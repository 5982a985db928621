"""
Argument types shared by the subcommands
"""
import argparse


def positive_int(text: str) -> int:
    try:
        value = int(text, 10)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer")
    if value < 1:
        raise argparse.ArgumentTypeError(f"{text!r} is not a positive integer")
    return value


def add_format_option(parser: argparse.ArgumentParser, choices=("text", "json"), default="text", required=False):
    kwargs = {"required": True} if required else {"default": default}
    parser.add_argument("--format", choices=list(choices), help="output format", **kwargs)
