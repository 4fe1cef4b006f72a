"""Exact rational scalars.

Every coefficient in this package is a ``fractions.Fraction``.  Floats are
rejected at the boundary: binary floating point cannot represent most of the
rationals that show up here, and silent rounding would defeat the whole point
of an exact kernel.  ``as_scalar`` is the single coercion chokepoint.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import InvalidParameter

Scalar = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def as_scalar(value) -> Fraction:
    """Coerce ``value`` to an exact rational.

    Accepts int, Fraction, and strings like ``"3"`` or ``"-2/5"``.  Floats are
    refused (use a string or Fraction instead).
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        return Fraction(int(value))
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise InvalidParameter(f"not a rational literal: {value!r}") from exc
    if isinstance(value, float):
        raise InvalidParameter(
            f"float {value!r} rejected: pass an int, Fraction, or 'p/q' string"
        )
    raise InvalidParameter(f"cannot interpret {value!r} as a rational scalar")


def format_scalar(value: Fraction) -> str:
    """Render canonically: ``"p"`` for integers, ``"p/q"`` otherwise."""
    value = as_scalar(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_scalar(text: str) -> Fraction:
    return as_scalar(text)


def height(value: Fraction) -> int:
    """max(|numerator|, denominator) of the reduced fraction; height(0) = 0."""
    value = as_scalar(value)
    if value == 0:
        return 0
    return max(abs(value.numerator), value.denominator)


def rational_sqrt(value: Fraction) -> Fraction | None:
    """Exact square root if ``value`` is a perfect rational square, else None."""
    value = as_scalar(value)
    if value < 0:
        return None
    num, den = value.numerator, value.denominator
    rn, rd = math.isqrt(num), math.isqrt(den)
    if rn * rn == num and rd * rd == den:
        return Fraction(rn, rd)
    return None
