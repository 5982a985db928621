"""
Exception hierarchy for counting, enumeration and the command line
"""


class HomCountError(Exception):
    """Base class for every error raised by this package"""


class UsageError(HomCountError, ValueError):
    """Arguments that do not fit together, e.g. elements of different groups"""


class RangeError(HomCountError, ValueError):
    """Inputs beyond a configured bound (count cap, enumeration limit, oracle bound)"""


class ConsistencyError(HomCountError, RuntimeError):
    """An internal self-check failed; always a bug, never bad input"""
