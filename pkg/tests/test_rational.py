from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from unicas.exact import Polynomial, PolyFraction, format_rational, parse_rational, rat


def test_textbook_arithmetic():
    assert rat(1, 2) + rat(1, 3) == rat(5, 6)
    assert rat(1, 2) - rat(1, 3) == rat(1, 6)
    assert rat(2, 3) * rat(9, 4) == rat(3, 2)
    assert rat(1, 2) / rat(1, 4) == 2


def test_reduction_and_sign_normalization():
    q = Fraction(6, -4)
    assert q.numerator == -3 and q.denominator == 2


def test_family_value_reduces_at_concrete_rank():
    # (6N+6)/(N+1) collapses to the constant 6 once the rank is plugged in
    N = Polynomial.var("N")
    ratio = (6 * N + 6) / (N + 1)
    assert isinstance(ratio, PolyFraction)
    value = ratio.num.evaluate({"N": 3}) / ratio.den.evaluate({"N": 3})
    assert value == 6
    assert ratio == 6  # the quotient is exactly constant


def test_division_by_zero_is_an_error():
    with pytest.raises(ZeroDivisionError):
        rat(1, 2) / Fraction(0)
    with pytest.raises(ZeroDivisionError):
        rat(1, 0)


def test_text_forms():
    assert format_rational(Fraction(5, 1)) == "5"
    assert format_rational(Fraction(-3, 4)) == "-3/4"
    assert parse_rational("22/7") == Fraction(22, 7)
    assert parse_rational("-9") == -9


rationals = st.fractions(
    min_value=-1000, max_value=1000, max_denominator=97
)


@given(rationals, rationals, rationals)
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a + b == b + a
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
