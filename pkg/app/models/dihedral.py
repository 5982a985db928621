"""
Element arithmetic for the dihedral group D_n.

Every element is kept in the normal form r^rot f^flip with 0 <= rot < n, so
equality is structural. The multiplication rule

    (r^i f^s)(r^j f^t) = r^(i + (-1)^s j) f^(s xor t)

follows from rf = fr^-1 and covers D_1 (order 2) and D_2 (Klein four) without
special cases.
"""
import re
from math import gcd
from typing import List

from pydantic import BaseModel, ConfigDict, validate_call

from app.core.errors import UsageError
from app.schemas.common import PositiveInt


class DihedralElement:
    """An immutable element r^rot f^flip of D_n"""

    __slots__ = ("_n", "_rot", "_flip")

    def __init__(self, n: int, rot: int = 0, flip: bool = False):
        if n < 1:
            raise UsageError(f"D_n needs n >= 1, got {n}")
        object.__setattr__(self, "_n", n)
        object.__setattr__(self, "_rot", rot % n)
        object.__setattr__(self, "_flip", bool(flip))

    def __setattr__(self, name, value):
        raise AttributeError("DihedralElement is immutable")

    def __reduce__(self):
        return (DihedralElement, (self._n, self._rot, self._flip))

    @property
    def n(self) -> int:
        return self._n

    @property
    def rot(self) -> int:
        return self._rot

    @property
    def flip(self) -> bool:
        return self._flip

    @property
    def group(self) -> "GroupIndex":
        return GroupIndex(n=self._n)

    @property
    def is_identity(self) -> bool:
        return self._rot == 0 and not self._flip

    def sort_key(self) -> tuple:
        return (self._rot, self._flip)

    def __eq__(self, other) -> bool:
        if not isinstance(other, DihedralElement):
            return NotImplemented
        return (self._n, self._rot, self._flip) == (other._n, other._rot, other._flip)

    def __hash__(self) -> int:
        return hash((self._n, self._rot, self._flip))

    def __mul__(self, other: "DihedralElement") -> "DihedralElement":
        return multiply(self, other)

    def __pow__(self, k: int) -> "DihedralElement":
        return power(self, k)

    def __repr__(self) -> str:
        return f"DihedralElement(n={self._n}, rot={self._rot}, flip={self._flip})"

    def __str__(self) -> str:
        return render_element(self)


class GroupIndex(BaseModel):
    """The parameter n of D_n"""
    n: PositiveInt

    model_config = ConfigDict(frozen=True)

    @property
    def order(self) -> int:
        return 2 * self.n

    def identity(self) -> DihedralElement:
        return DihedralElement(self.n)

    def rotation(self, k: int) -> DihedralElement:
        return DihedralElement(self.n, k, False)

    def reflection(self, k: int) -> DihedralElement:
        return DihedralElement(self.n, k, True)

    def rotations(self) -> List[DihedralElement]:
        return [DihedralElement(self.n, k, False) for k in range(self.n)]

    def reflections(self) -> List[DihedralElement]:
        return [DihedralElement(self.n, k, True) for k in range(self.n)]

    def elements(self) -> List[DihedralElement]:
        """All 2n elements, ordered by (rot, flip)"""
        return [DihedralElement(self.n, k, s) for k in range(self.n) for s in (False, True)]


def _check_same_group(a: DihedralElement, b: DihedralElement) -> None:
    if a._n != b._n:
        raise UsageError(f"elements of D_{a._n} and D_{b._n} cannot be combined")


def identity(g: GroupIndex) -> DihedralElement:
    return DihedralElement(g.n)


def multiply(a: DihedralElement, b: DihedralElement) -> DihedralElement:
    _check_same_group(a, b)
    if a._flip:
        return DihedralElement(a._n, a._rot - b._rot, not b._flip)
    return DihedralElement(a._n, a._rot + b._rot, b._flip)


def inverse(a: DihedralElement) -> DihedralElement:
    # reflections are involutions
    if a._flip:
        return a
    return DihedralElement(a._n, -a._rot, False)


def power(a: DihedralElement, k: int) -> DihedralElement:
    """a multiplied by itself k times, by exponent reduction"""
    if k < 0:
        raise UsageError(f"power needs a nonnegative exponent, got {k}")
    if a._flip:
        return a if k % 2 else DihedralElement(a._n)
    return DihedralElement(a._n, a._rot * k, False)


def element_order(a: DihedralElement) -> int:
    if a._flip:
        return 2
    return a._n // gcd(a._n, a._rot)


def satisfies_presentation(m: int, a: DihedralElement, b: DihedralElement) -> bool:
    """
    True iff r_m -> a, f_m -> b satisfies r^m = e = f^2 and rf = fr^-1,
    i.e. iff the assignment extends to a homomorphism D_m -> D_n.
    """
    _check_same_group(a, b)
    if m < 1:
        raise UsageError(f"D_m needs m >= 1, got {m}")
    if not power(a, m).is_identity:
        return False
    if not power(b, 2).is_identity:
        return False
    return multiply(a, b) == multiply(b, inverse(a))


_ELEMENT_PATTERN = re.compile(r"^(?:(?P<e>e)|(?:r(?:\^(?P<k>[0-9]+))?)?(?P<sep>[·*])?(?P<f>f)?)$")


def render_element(a: DihedralElement) -> str:
    """Canonical text: e, f, r, r^k, r·f, r^k·f"""
    if a._rot == 0:
        return "f" if a._flip else "e"
    rotation = "r" if a._rot == 1 else f"r^{a._rot}"
    return f"{rotation}·f" if a._flip else rotation


@validate_call
def parse_element(text: str, n: PositiveInt) -> DihedralElement:
    """Inverse of render_element; exponents are reduced mod n"""
    cleaned = text.strip()
    match = _ELEMENT_PATTERN.match(cleaned)
    if not cleaned or match is None:
        raise UsageError(f"cannot parse dihedral element {text!r}")
    if match.group("e"):
        return DihedralElement(n)
    has_rotation = cleaned.startswith("r")
    has_flip = match.group("f") is not None
    if match.group("sep") and not (has_rotation and has_flip):
        raise UsageError(f"cannot parse dihedral element {text!r}")
    if has_rotation and has_flip and not match.group("sep"):
        raise UsageError(f"missing '·' between rotation and reflection in {text!r}")
    rot = 0
    if has_rotation:
        rot = int(match.group("k")) if match.group("k") is not None else 1
    return DihedralElement(n, rot, has_flip)
