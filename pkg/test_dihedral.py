"""
Tests for dihedral element arithmetic
"""
import copy
import itertools
import math
import pickle
from functools import reduce

import pytest

from app.core.errors import UsageError
from app.models.dihedral import (
    DihedralElement,
    GroupIndex,
    element_order,
    identity,
    inverse,
    multiply,
    parse_element,
    power,
    render_element,
    satisfies_presentation,
)


def r(n, k=1):
    return DihedralElement(n, k, False)


def rf(n, k=0):
    return DihedralElement(n, k, True)


def repeated(a, k):
    return reduce(multiply, [a] * k, DihedralElement(a.n))


@pytest.mark.parametrize("n", [1, 2, 5])
def test_identity(n):
    e = identity(GroupIndex(n=n))
    assert (e.rot, e.flip) == (0, False)
    for x in GroupIndex(n=n).elements():
        assert multiply(e, x) == x == multiply(x, e)


def test_rot_is_reduced_at_construction():
    assert r(5, 7) == r(5, 2)
    assert r(5, -1) == r(5, 4)
    assert rf(3, 3) == rf(3, 0)


def test_elements_are_immutable():
    x = r(5, 2)
    with pytest.raises(AttributeError):
        x.rot = 3


@pytest.mark.parametrize("a,b,expected", [
    (r(5, 1), r(5, 2), r(5, 3)),
    (rf(5), r(5, 1), rf(5, 4)),
    (rf(6, 2), rf(6, 2), r(6, 0)),
    (r(6, 1), rf(6), rf(6, 1)),
])
def test_multiply_examples(a, b, expected):
    assert multiply(a, b) == expected
    assert a * b == expected


def test_multiply_rejects_mismatched_groups():
    with pytest.raises(UsageError):
        multiply(r(5), r(6))


@pytest.mark.parametrize("a,expected", [
    (r(7, 3), r(7, 4)),
    (rf(7, 2), rf(7, 2)),
    (r(1, 0), r(1, 0)),
])
def test_inverse_examples(a, expected):
    assert inverse(a) == expected


@pytest.mark.parametrize("a,k,expected", [
    (r(5, 2), 5, r(5, 0)),
    (rf(8, 3), 2, r(8, 0)),
    (r(12, 2), 3, r(12, 6)),
    (rf(8, 3), 3, rf(8, 3)),
    (r(4, 1), 0, r(4, 0)),
])
def test_power_examples(a, k, expected):
    assert power(a, k) == expected
    assert a ** k == expected


def test_power_rejects_negative_exponent():
    with pytest.raises(UsageError):
        power(r(5), -1)


def test_power_agrees_with_repeated_multiplication():
    for n in range(1, 13):
        for a in GroupIndex(n=n).elements():
            for k in range(0, 2 * n + 3):
                assert power(a, k) == repeated(a, k)


@pytest.mark.parametrize("a,expected", [(r(9, 0), 1), (r(12, 8), 3), (rf(11, 5), 2)])
def test_element_order_examples(a, expected):
    assert element_order(a) == expected


def test_element_order_by_repeated_multiplication():
    a = r(12, 8)
    k = 1
    while not repeated(a, k).is_identity:
        k += 1
    assert k == element_order(a) == 3


def test_associativity_identity_and_inverse_exhaustive():
    for n in range(1, 17):
        group = GroupIndex(n=n)
        elements = group.elements()
        e = group.identity()
        assert len(set(elements)) == group.order == 2 * n
        for x, y, z in itertools.product(elements, repeat=3):
            assert multiply(multiply(x, y), z) == multiply(x, multiply(y, z))
        for x in elements:
            assert multiply(e, x) == x == multiply(x, e)
            assert multiply(x, inverse(x)) == e == multiply(inverse(x), x)


def test_reflections_are_involutions():
    for n in range(1, 17):
        for x in GroupIndex(n=n).reflections():
            assert power(x, 2).is_identity
            assert inverse(x) == x


def test_orders_divide_group_order():
    for n in range(1, 33):
        for x in GroupIndex(n=n).elements():
            k = element_order(x)
            assert (2 * n) % k == 0
            assert power(x, k).is_identity
            assert all(not power(x, j).is_identity for j in range(1, k))
            assert (k == 1) == x.is_identity


def test_rotation_order_formula():
    for n in range(1, 33):
        for rotation in GroupIndex(n=n).rotations():
            assert element_order(rotation) == n // math.gcd(n, rotation.rot)
            assert rotation.group == GroupIndex(n=n)


def test_d1_and_d2():
    d1 = GroupIndex(n=1).elements()
    assert d1 == [r(1, 0), rf(1, 0)]
    # Klein four: abelian, every element squares to e
    d2 = GroupIndex(n=2).elements()
    for x, y in itertools.product(d2, repeat=2):
        assert multiply(x, y) == multiply(y, x)
        assert power(x, 2).is_identity


@pytest.mark.parametrize("m,a,b,expected", [
    (3, r(5, 0), r(5, 0), True),
    (3, r(3, 1), r(3, 0), False),
    (2, r(4, 0), r(4, 2), True),
    (3, r(3, 2), rf(3, 0), True),
    (4, rf(6, 1), rf(6, 4), True),
    (4, rf(6, 1), rf(6, 2), False),
])
def test_satisfies_presentation_examples(m, a, b, expected):
    assert satisfies_presentation(m, a, b) is expected


def test_satisfies_presentation_rejects_mismatched_groups():
    with pytest.raises(UsageError):
        satisfies_presentation(3, r(3), r(4))


def _derived_map_is_homomorphism(m, a, b):
    """Check r^k f^s -> a^k b^s on all of D_m, including that r_m itself goes to a"""
    domain = GroupIndex(n=m).elements()

    def rho(x):
        image = power(a, x.rot)
        return multiply(image, b) if x.flip else image

    if rho(DihedralElement(m, 1, False)) != a:
        return False
    return all(
        rho(multiply(x, y)) == multiply(rho(x), rho(y))
        for x in domain
        for y in domain
    )


def test_satisfies_presentation_matches_derived_map():
    for m in range(1, 9):
        for n in range(1, 9):
            elements = GroupIndex(n=n).elements()
            for a, b in itertools.product(elements, repeat=2):
                assert satisfies_presentation(m, a, b) == _derived_map_is_homomorphism(m, a, b), (m, n, a, b)


@pytest.mark.parametrize("element,text", [
    (r(7, 0), "e"),
    (rf(7, 0), "f"),
    (r(7, 1), "r"),
    (r(7, 3), "r^3"),
    (rf(7, 1), "r·f"),
    (rf(7, 5), "r^5·f"),
])
def test_render_and_parse(element, text):
    assert render_element(element) == text
    assert str(element) == text
    assert parse_element(text, 7) == element


def test_parse_accepts_variants():
    assert parse_element("r^1", 5) == r(5, 1)
    assert parse_element("r^8", 5) == r(5, 3)
    assert parse_element("r^2*f", 5) == rf(5, 2)
    assert parse_element(" f ", 5) == rf(5, 0)


@pytest.mark.parametrize("text", ["", "x", "rf", "·f", "r^", "r^2·", "fr", "e·f", "r^٣", "r^²"])
def test_parse_rejects_malformed_text(text):
    with pytest.raises(UsageError):
        parse_element(text, 5)


def test_elements_survive_pickling():
    for x in GroupIndex(n=6).elements():
        restored = pickle.loads(pickle.dumps(x))
        assert restored == x and restored.n == 6
        assert copy.deepcopy(x) == x
