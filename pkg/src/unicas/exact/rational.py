"""Exact rational scalars.

The scalar type of the whole library is the stdlib ``fractions.Fraction``:
arbitrary precision, always reduced, positive denominator.  This module only
adds the text form used in CLI/JSON output ("p/q", or "p" when q == 1, which
is exactly ``str(Fraction)``) and a couple of conveniences.
"""

from __future__ import annotations

from fractions import Fraction

Rational = Fraction

Scalar = int | Fraction


def rat(numerator: int, denominator: int = 1) -> Fraction:
    """Build a reduced rational; raises ZeroDivisionError on a zero denominator."""
    return Fraction(numerator, denominator)


def parse_rational(text: str) -> Fraction:
    """Parse "p/q" or "p" (q > 0 after reduction is guaranteed by Fraction)."""
    return Fraction(text.strip())


def format_rational(value: Fraction | int) -> str:
    return str(Fraction(value))
