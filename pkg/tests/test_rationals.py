from decimal import Decimal
from fractions import Fraction

import pytest

from causal_transfer.rationals import as_fraction, format_fraction, fraction_from_float


def test_exact_inputs():
    assert as_fraction("3/8") == Fraction(3, 8)
    assert as_fraction("0.25") == Fraction(1, 4)
    assert as_fraction(2) == Fraction(2)
    assert as_fraction(Decimal("0.125")) == Fraction(1, 8)


def test_float_rejected():
    with pytest.raises(TypeError):
        as_fraction(0.1)
    with pytest.raises(TypeError):
        as_fraction(True)


def test_fraction_from_float():
    assert fraction_from_float(0.375, 1e-9, 64) == Fraction(3, 8)
    with pytest.raises(ValueError):
        fraction_from_float(0.3761234567, Fraction(1, 10**9), 64)


def test_format():
    assert format_fraction(Fraction(1, 2)) == "1/2"
    assert format_fraction(Fraction(4, 2)) == "2"
    assert format_fraction(Fraction(-3, 8)) == "-3/8"
