"""
Logging setup for the command line
"""
import logging
import sys

from app.core.config import settings

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


def configure_logging(level: str | None = None) -> None:
    """
    Send log records to standard error.

    Standard output is reserved for command results so that it stays byte-identical
    across runs.
    """
    logging.basicConfig(
        level=level or settings.log_level,
        format=LOG_FORMAT,
        stream=sys.stderr,
        force=True,
    )
