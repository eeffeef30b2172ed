"""Exact rational scalar layer."""

from fractions import Fraction

import pytest

from puiseux import rat, rat_from_str, rat_to_str
from puiseux.errors import DivisionByZero
from puiseux.scalars import rat_inv


def test_construction_normalizes():
    assert rat(2, 4) == rat(1, 2)
    assert rat(-3, -6) == rat(1, 2)
    assert rat(0, 7) == rat(0)
    assert rat(Fraction(22, 7)) == rat(22, 7)


def test_arithmetic_is_exact():
    a = rat(1, 3)
    b = rat(1, 6)
    assert a + b == rat(1, 2)
    assert a - b == rat(1, 6)
    assert a * b == rat(1, 18)
    assert rat_inv(b) == rat(6)
    # a telescoping sum that floats would miss
    total = rat(0)
    for k in range(1, 50):
        total = total + rat(1, k * (k + 1))
    assert total == rat(49, 50)


def test_inverse_of_zero_raises():
    with pytest.raises(DivisionByZero):
        rat_inv(rat(0))


def test_string_round_trip():
    for text in ("0", "1", "-1", "13/36", "-1415/41067"):
        assert rat_to_str(rat_from_str(text)) == text
    assert rat_to_str(rat(28, 8)) == "7/2"
