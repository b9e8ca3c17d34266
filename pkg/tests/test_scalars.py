import math
from fractions import Fraction

import pytest

from config.settings import ScalarMode
from coxeter.scalars import (
    FloatField,
    QuadraticField,
    QuadraticNumber,
    RationalField,
    field_for,
)
from models.errors import ScalarModeError

SQRT2 = QuadraticNumber.sqrt(2)
SQRT3 = QuadraticNumber.sqrt(3)
SQRT5 = QuadraticNumber.sqrt(5)


def test_quadratic_arithmetic():
    assert SQRT2 * SQRT2 == 2
    assert SQRT2 * SQRT3 == QuadraticNumber.sqrt(6)
    assert (1 + SQRT2) * (1 - SQRT2) == -1
    assert SQRT2 + 0 == SQRT2
    assert 3 - SQRT5 == QuadraticNumber({1: 3, 5: -1})
    assert QuadraticNumber({1: Fraction(1, 2)}) * 2 == 1
    assert hash(QuadraticNumber(3)) == hash(3)


@pytest.mark.parametrize("value, expected", [
    (SQRT2 - 1, 1),
    (1 - SQRT2, -1),
    (SQRT2 * 99 - 140, 1),       # 140.007... vs 140
    (SQRT2 * 70 - 99, -1),       # 98.994... vs 99
    (SQRT3 + SQRT2 - QuadraticNumber.sqrt(10), -1),
    (SQRT5 - SQRT2 - 1, -1),
    (QuadraticNumber(0), 0),
    (SQRT2 * SQRT3 - QuadraticNumber.sqrt(6), 0),
])
def test_quadratic_sign(value, expected):
    assert value.sign() == expected


def test_exact_sign_survives_near_cancellation():
    # (1 + sqrt2)^20 = a + b sqrt2 with a^2 - 2 b^2 = 1, so a - b sqrt2 is tiny
    power = QuadraticNumber(1)
    for _ in range(20):
        power = power * (1 + SQRT2)
    a, b = power.terms[1], power.terms[2]
    assert (QuadraticNumber(a) - QuadraticNumber({2: b})).sign() == 1
    assert (QuadraticNumber({2: b}) - QuadraticNumber(a)).sign() == -1


def test_field_weights():
    assert RationalField().weight(3) == 1
    assert RationalField().weight(math.inf) == 2
    assert QuadraticField().weight(4) == SQRT2
    assert QuadraticField().weight(6) == SQRT3
    golden = QuadraticField().weight(5)
    assert golden * golden == golden + 1
    assert FloatField().weight(7) == pytest.approx(2 * math.cos(math.pi / 7))
    with pytest.raises(ScalarModeError):
        RationalField().weight(4)


def test_field_for():
    assert isinstance(field_for({3, math.inf}), RationalField)
    assert isinstance(field_for({3, 4}), QuadraticField)
    assert isinstance(field_for({3, 5, 6}), QuadraticField)
    assert isinstance(field_for({7}), FloatField)
    assert isinstance(field_for(set()), RationalField)
    assert isinstance(field_for({3}, ScalarMode.FLOAT), FloatField)
    with pytest.raises(ScalarModeError):
        field_for({4}, ScalarMode.RATIONAL)
    with pytest.raises(ScalarModeError):
        field_for({7}, ScalarMode.QUADRATIC)


def test_float_field_tolerance():
    f = FloatField(1e-6)
    assert f.sign(1e-8) == 0
    assert f.sign(-1e-3) == -1
    assert f.key(0.1 + 0.2) == f.key(0.3)
    assert f.key(-0.0) == 0.0


def test_zero_tolerance_is_kept():
    f = FloatField(0.0)
    assert f.tolerance == 0.0
    assert f.sign(1e-12) == 1
    assert f.sign(0.0) == 0
