"""Exact rational plumbing shared across the package.

All probabilities and coordinates are fractions.Fraction end to end;
floats are only admitted through an explicit tolerance.
"""

from __future__ import annotations

from decimal import Decimal
from fractions import Fraction


def as_fraction(value) -> Fraction:
    """Coerce an exact value to Fraction.

    Accepts Fraction, int, Decimal, and strings like "3/8", "0.25" or "1".
    Floats are rejected: use fraction_from_float with an explicit tolerance.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a probability")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, Decimal):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    if isinstance(value, float):
        raise TypeError(
            f"refusing to convert float {value!r} exactly; "
            "pass a string like '3/8' or use fraction_from_float with a tolerance"
        )
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def fraction_from_float(
    x: float, tolerance: Fraction | float, max_denominator: int = 10**6
) -> Fraction:
    """Nearest small-denominator fraction to x, certified within tolerance."""
    tol = tolerance if isinstance(tolerance, Fraction) else Fraction(tolerance)
    f = Fraction(x).limit_denominator(max_denominator)
    if abs(f - Fraction(x)) > tol:
        raise ValueError(
            f"{x!r} is not within {tolerance} of a fraction "
            f"with denominator <= {max_denominator}"
        )
    return f


def format_fraction(f: Fraction) -> str:
    """Render as "p/q", or "p" when the denominator is 1."""
    if f.denominator == 1:
        return str(f.numerator)
    return f"{f.numerator}/{f.denominator}"
