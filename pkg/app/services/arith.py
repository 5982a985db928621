"""
Elementary number theory used by the counting formulas
"""
import logging
import math
from typing import Dict, List

from pydantic import validate_call

from app.core.config import settings
from app.core.errors import ConsistencyError, RangeError
from app.schemas.common import PositiveInt

logger = logging.getLogger(__name__)


@validate_call
def gcd(a: PositiveInt, b: PositiveInt) -> int:
    return math.gcd(a, b)


def _check_scan_size(n: int) -> None:
    if n > settings.DIVISOR_SCAN_MAX:
        raise RangeError(
            f"{n} is too large to factor by trial division (limit {settings.DIVISOR_SCAN_MAX})"
        )


def factorize(n: int) -> Dict[int, int]:
    """Prime factorization by trial division, {prime: exponent}"""
    _check_scan_size(n)
    factors: Dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


@validate_call
def totient(n: PositiveInt) -> int:
    """
    Euler's totient: the number of 1 <= j <= n with gcd(j, n) = 1.

    phi(1) = 1, which makes the k = 1 divisor term count the identity rotation.
    """
    result = 1
    for p, e in factorize(n).items():
        result *= (p - 1) * p ** (e - 1)
    return result


@validate_call
def divisors(n: PositiveInt) -> List[int]:
    """Every positive divisor of n, strictly increasing"""
    _check_scan_size(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


@validate_call
def divisor_totient_sum(g: PositiveInt) -> int:
    """
    Sum of phi(k) over the divisors k of g.

    The sum always equals g; it is computed term by term and then checked
    against g rather than assumed.
    """
    total = sum(totient(k) for k in divisors(g))
    if total != g:
        logger.error(f"divisor totient sum of {g} came out as {total}")
        raise ConsistencyError(f"sum of phi(k) over k | {g} is {total}, expected {g}")
    return total
