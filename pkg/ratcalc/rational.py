"""
Exact rationals.

Rat is plain fractions.Fraction. The helpers here convert between Fraction,
sympy numbers and the "p/q" wire format used by every emitted artifact.
"""

from fractions import Fraction
from typing import Union

import sympy

Rat = Fraction
RatLike = Union[int, str, Fraction, sympy.Rational]


class RationalParseError(ValueError):
    """Raised when a string is not a valid "p/q" rational."""


def to_rat(value: RatLike) -> Fraction:
    """Coerce ints, "p/q" strings, Fractions and sympy rationals to Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rat(value)
    if isinstance(value, sympy.Rational):
        return Fraction(int(value.p), int(value.q))
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def to_sympy(value: RatLike) -> sympy.Rational:
    r = to_rat(value)
    return sympy.Rational(r.numerator, r.denominator)


def parse_rat(text: str) -> Fraction:
    """Parse "p/q" or "p"; floats and decimal points are rejected."""
    raw = text.strip()
    if not raw or '.' in raw or 'e' in raw.lower():
        raise RationalParseError(f"not an exact rational: {text!r}")
    try:
        return Fraction(raw)
    except (ValueError, ZeroDivisionError) as exc:
        raise RationalParseError(f"not an exact rational: {text!r}") from exc


def format_rat(value: RatLike) -> str:
    r = to_rat(value)
    if r.denominator == 1:
        return str(r.numerator)
    return f"{r.numerator}/{r.denominator}"
