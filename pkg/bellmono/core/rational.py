"""Exact rational text format ("p/q") and decimal renderings."""
import math
import re
from decimal import Decimal, localcontext
from fractions import Fraction
from numbers import Rational
from typing import Union

from bellmono.config.settings import config

RATIONAL_PATTERN = re.compile(r'^\s*(-?\d+)\s*(?:/\s*(\d+))?\s*$')

RationalLike = Union[Rational, int, str]


def parse_rational(text: str) -> Fraction:
    """
    Parse a "p/q" (or plain integer) string; the result is gcd-reduced.

    Raises:
        ValueError: malformed text or zero denominator
    """
    match = RATIONAL_PATTERN.match(str(text))
    if not match:
        raise ValueError(f"not a rational 'p/q': {text!r}")
    numerator = int(match.group(1))
    denominator = int(match.group(2)) if match.group(2) is not None else 1
    if denominator == 0:
        raise ValueError(f"zero denominator: {text!r}")
    return Fraction(numerator, denominator)


def as_fraction(value: RationalLike) -> Fraction:
    if isinstance(value, str):
        return parse_rational(value)
    if isinstance(value, float):
        raise TypeError(f"floating-point value {value!r} where an exact rational is required")
    return Fraction(value)


def format_rational(value: RationalLike) -> str:
    value = as_fraction(value)
    return f"{value.numerator}/{value.denominator}"


def format_decimal(value: RationalLike, digits: int = None) -> str:
    """
    Render with a fixed number of significant digits, trailing zeros kept.

    ``format_decimal(3)`` gives ``3.00000000000`` and
    ``format_decimal(1/sqrt2)`` gives ``0.707106781187`` at 12 digits.
    """
    digits = digits or config.DECIMAL_DIGITS
    value = as_fraction(value)
    with localcontext(config.decimal_context()):
        number = Decimal(value.numerator) / Decimal(value.denominator)
        if number == 0:
            return format(Decimal(0).quantize(Decimal(1).scaleb(-(digits - 1))), 'f')
        exponent = number.adjusted() - (digits - 1)
        rounded = number.quantize(Decimal(1).scaleb(exponent))
        # rounding can carry into a new leading digit (9.99.. -> 10.0..)
        if rounded.adjusted() != number.adjusted():
            rounded = number.quantize(Decimal(1).scaleb(exponent + 1))
        return format(rounded, 'f')


def render(value: RationalLike) -> str:
    """Exact value followed by its decimal rendering: ``3/1 (3.00000000000)``."""
    return f"{format_rational(value)} ({format_decimal(value)})"


def sqrt2_approximation(digits: int = None) -> Fraction:
    """Rational s with |s - sqrt2| < 10**-digits."""
    digits = digits or config.SQRT2_DIGITS
    scale = 10 ** digits
    return Fraction(math.isqrt(2 * scale * scale), scale)


def inv_sqrt2_approximation(digits: int = None) -> Fraction:
    """Rational r ~ 1/sqrt2 with |r^2 - 1/2| <= 10**-24 at the default precision."""
    return sqrt2_approximation(digits) / 2
