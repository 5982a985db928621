"""
Counting, enumerating and brute-force checking homomorphisms D_m -> D_n.

Three independent routes to the same numbers:
  - count_homs evaluates the closed forms (one per parity case),
  - enumerate_homs builds every homomorphism from the case analysis of the proofs,
  - brute_force_count scans all generator-image pairs against the defining relations.
"""
import logging
from collections import Counter
from typing import Dict, Iterator, List, Optional, Tuple

from pydantic import validate_call

from app.core.config import settings
from app.core.errors import ConsistencyError, RangeError, UsageError
from app.models.dihedral import (
    DihedralElement,
    GroupIndex,
    multiply,
    power,
)
from app.schemas.common import PositiveInt
from app.schemas.homomorphism import Corollary, HomBranch, HomCount, Homomorphism, ParityCase
from app.services.arith import divisor_totient_sum, gcd

logger = logging.getLogger(__name__)


@validate_call
def parity_case(m: PositiveInt, n: PositiveInt) -> ParityCase:
    if m % 2:
        return ParityCase.ODD_EVEN if n % 2 == 0 else ParityCase.ODD_ODD
    return ParityCase.EVEN_EVEN if n % 2 == 0 else ParityCase.EVEN_ODD


def _check_cap(m: int, n: int) -> None:
    # largest intermediate of any closed form
    largest = n * gcd(m, n) + 4 * n + 4
    if largest >= settings.count_cap:
        raise RangeError(
            f"(m, n) = ({m}, {n}) exceeds the {settings.COUNT_BITS}-bit count cap"
        )


def _closed_form(case: ParityCase, n: int, s: int) -> Tuple[int, str]:
    """Closed form for the case, with s standing for the divisor totient sum"""
    if case is ParityCase.ODD_ODD:
        return 1 + n * s, f"1 + {n}·{s}"
    if case is ParityCase.ODD_EVEN:
        return 2 + n * s, f"2 + {n}·{s}"
    if case is ParityCase.EVEN_EVEN:
        return 4 + 4 * n + n * s, f"4 + 4·{n} + {n}·{s}"
    return 1 + 2 * n + n * s, f"1 + 2·{n} + {n}·{s}"


@validate_call
def corollary(m: PositiveInt, n: PositiveInt) -> Optional[Corollary]:
    """The succinct form that applies to (m, n), if any"""
    odd_m, odd_n = m % 2 == 1, n % 2 == 1
    if m == n:
        if odd_n:
            return Corollary(name="n^2+1", value=n * n + 1)
        return Corollary(name="(n+2)^2", value=(n + 2) ** 2)
    if n % m == 0:
        if odd_m and odd_n:
            return Corollary(name="mn+1", value=m * n + 1)
        if not odd_m and not odd_n:
            return Corollary(name="4+4n+mn", value=4 + 4 * n + m * n)
    if gcd(m, n) == 1:
        if odd_m and not odd_n:
            return Corollary(name="n+2", value=n + 2)
        if not odd_m and odd_n:
            return Corollary(name="3n+1", value=3 * n + 1)
    return None


@validate_call
def count_homs(m: PositiveInt, n: PositiveInt) -> HomCount:
    """
    Number of homomorphisms D_m -> D_n from the closed form of the applicable case.

    The formula is evaluated with the divisor totient sum over gcd(m, n), then
    again with gcd(m, n) substituted for that sum; the two must agree, as must any
    succinct corollary form.
    """
    _check_cap(m, n)
    case = parity_case(m, n)
    g = gcd(m, n)
    s = divisor_totient_sum(g)
    count, formula = _closed_form(case, n, s)
    collapsed, _ = _closed_form(case, n, g)
    if count != collapsed:
        raise ConsistencyError(f"({m}, {n}): formula gives {count}, collapsed form gives {collapsed}")

    shortcut = corollary(m, n)
    if shortcut is not None and shortcut.value != count:
        raise ConsistencyError(
            f"({m}, {n}): formula gives {count}, {shortcut.name} gives {shortcut.value}"
        )
    logger.debug(f"count_homs({m}, {n}) = {count} [{case.value}]")
    return HomCount(
        m=m, n=n, case=case, count=count, divisor_sum=s, formula=formula, corollary=shortcut
    )


@validate_call
def count_endos(n: PositiveInt) -> HomCount:
    """n^2+1 endomorphisms of D_n for odd n, (n+2)^2 for even n"""
    _check_cap(n, n)
    if n % 2:
        count, formula = n * n + 1, f"{n}^2 + 1"
    else:
        count, formula = (n + 2) ** 2, f"({n} + 2)^2"
    general = count_homs(n, n)
    if general.count != count:
        raise ConsistencyError(f"D_{n}: {formula} = {count} but count_homs gives {general.count}")
    return general.model_copy(update={"formula": formula})


@validate_call
def branch_counts(m: PositiveInt, n: PositiveInt) -> Dict[HomBranch, int]:
    """How the count splits across the case analysis of the proofs"""
    g = gcd(m, n)
    even_m, even_n = m % 2 == 0, n % 2 == 0
    if not even_n:
        half_turn = 0
    else:
        half_turn = 3 if even_m else 1
    if not even_m:
        reflection_image = 0
    else:
        reflection_image = 4 * n if even_n else 2 * n
    return {
        HomBranch.TRIVIAL: 1,
        HomBranch.ROTATION_REFLECTION: n * g,
        HomBranch.HALF_TURN: half_turn,
        HomBranch.REFLECTION_IMAGE: reflection_image,
    }


def classify(h: Homomorphism) -> HomBranch:
    if h.img_r.flip:
        return HomBranch.REFLECTION_IMAGE
    if h.img_f.flip:
        return HomBranch.ROTATION_REFLECTION
    if h.img_r.is_identity and h.img_f.is_identity:
        return HomBranch.TRIVIAL
    return HomBranch.HALF_TURN


def _classified_pairs(m: int, n: int) -> Iterator[Tuple[DihedralElement, DihedralElement]]:
    """Generator-image pairs in the order the proofs construct them"""
    group = GroupIndex(n=n)
    e = group.identity()
    yield e, e

    # r_m goes to a rotation whose order divides gcd(m, n); f_m to any reflection
    step = n // gcd(m, n)
    for alpha in range(0, n, step):
        img_r = group.rotation(alpha)
        for img_f in group.reflections():
            yield img_r, img_f

    if n % 2 == 0:
        half = group.rotation(n // 2)
        yield e, half
        if m % 2 == 0:
            yield half, e
            yield half, half

    # for even m, r_m may go to a reflection; f_m then lies in its centralizer
    if m % 2 == 0:
        for img_r in group.reflections():
            yield img_r, e
            yield img_r, img_r
            if n % 2 == 0:
                yield img_r, group.rotation(n // 2)
                yield img_r, group.reflection(img_r.rot + n // 2)


@validate_call
def enumerate_homs(m: PositiveInt, n: PositiveInt) -> List[Homomorphism]:
    """
    Every homomorphism D_m -> D_n exactly once, sorted by
    (img_r.rot, img_r.flip, img_f.rot, img_f.flip).
    """
    expected = count_homs(m, n).count
    if expected > settings.ENUMERATION_LIMIT:
        raise RangeError(
            f"D_{m} -> D_{n} has {expected} homomorphisms, over the enumeration limit "
            f"of {settings.ENUMERATION_LIMIT}"
        )

    seen = set()
    homs = []
    for img_r, img_f in _classified_pairs(m, n):
        if (img_r, img_f) in seen:
            raise ConsistencyError(f"D_{m} -> D_{n}: pair ({img_r}, {img_f}) produced twice")
        seen.add((img_r, img_f))
        homs.append(Homomorphism(m=m, n=n, img_r=img_r, img_f=img_f))

    if len(homs) != expected:
        raise ConsistencyError(f"D_{m} -> D_{n}: enumerated {len(homs)}, formula gives {expected}")
    homs.sort(key=Homomorphism.sort_key)
    return homs


def _accepted_coordinates(m: int, n: int) -> Iterator[Tuple[Tuple[int, bool], Tuple[int, bool]]]:
    """
    The relation scan on raw (rot, flip) coordinates of D_n.

    a^m = e and b^2 = e only involve one coordinate each, so they are tested once
    per element. ab and ba^-1 always share the flip bit s xor t, so only the
    rotation parts are compared.
    """
    elements = [(k, s) for k in range(n) for s in (False, True)]
    candidates_r = [(i, s) for i, s in elements if (m % 2 == 0 if s else i * m % n == 0)]
    candidates_f = [(j, t) for j, t in elements if t or 2 * j % n == 0]
    for i, s in candidates_r:
        i_inv = i if s else -i % n
        for j, t in candidates_f:
            left = (i - j) if s else (i + j)
            right = (j - i_inv) if t else (j + i_inv)
            if (left - right) % n == 0:
                yield (i, s), (j, t)


def accepted_pairs(m: int, n: int) -> Iterator[Tuple[DihedralElement, DihedralElement]]:
    """Every (a, b) in D_n x D_n satisfying a^m = e, b^2 = e and ab = ba^-1"""
    for (i, s), (j, t) in _accepted_coordinates(m, n):
        yield DihedralElement(n, i, s), DihedralElement(n, j, t)


@validate_call
def brute_force_count(m: PositiveInt, n: PositiveInt) -> HomCount:
    """Count generator-image pairs by checking the relations directly"""
    if n > settings.ORACLE_MAX_N:
        raise RangeError(f"brute force is limited to n <= {settings.ORACLE_MAX_N}, got {n}")
    count = sum(1 for _ in _accepted_coordinates(m, n))
    return HomCount(m=m, n=n, case=parity_case(m, n), count=count, formula="brute force")


def apply(h: Homomorphism, x: DihedralElement) -> DihedralElement:
    """rho(r^k f^s) = rho(r)^k rho(f)^s"""
    if x.n != h.m:
        raise UsageError(f"homomorphism is defined on D_{h.m}, got an element of D_{x.n}")
    image = power(h.img_r, x.rot)
    if x.flip:
        image = multiply(image, h.img_f)
    return image


def image_order(h: Homomorphism) -> int:
    return len({apply(h, x) for x in GroupIndex(n=h.m).elements()})


def kernel_order(h: Homomorphism) -> int:
    return sum(1 for x in GroupIndex(n=h.m).elements() if apply(h, x).is_identity)


def branch_tally(homs: List[Homomorphism]) -> Dict[HomBranch, int]:
    tally = Counter(classify(h) for h in homs)
    return {branch: tally.get(branch, 0) for branch in HomBranch}
