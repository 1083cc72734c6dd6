from fractions import Fraction

import pytest

from unicas.exact import LaurentSeries, Polynomial, series_from_linear_factors

n = Polynomial.var("n")


def test_geometric_expansion():
    c = Polynomial.var("c")
    s = series_from_linear_factors([(-1, c)], 1, 0, 2)
    assert s.coefficient(0) == 1
    assert s.coefficient(1) == c
    assert s.coefficient(2) == c**2


def test_numerator_factor_is_linear():
    s = series_from_linear_factors([(1, n)], 1, 0, 3)
    assert s.coefficient(0) == 1
    assert s.coefficient(1) == -n
    assert s.coefficient(2) == 0
    assert s.coefficient(3) == 0


def test_laurent_offset_and_prefactor():
    s = series_from_linear_factors([(-1, 2)], Fraction(3), -1, 2)
    assert s.min_degree == -1
    assert s.coefficient(-1) == 3
    assert s.coefficient(0) == 6
    assert s.coefficient(2) == 24


def test_order_below_offset_rejected():
    with pytest.raises(ValueError):
        series_from_linear_factors([], 1, 0, -1)


def test_factor_times_inverse_cancels():
    factors = [(1, n), (1, n - 1), (1, Fraction(5, 2))]
    inverse = [(-sign, c) for sign, c in factors]
    s = series_from_linear_factors(factors + inverse, Fraction(7), 0, 6)
    assert s.coefficient(0) == 7
    for p in range(1, 7):
        assert s.coefficient(p).is_zero


def test_coefficient_bounds():
    s = series_from_linear_factors([(-1, 1)], 1, 0, 3)
    assert s.coefficient(-5) == 0  # below the stored range means exactly zero
    with pytest.raises(ValueError):
        s.coefficient(4)  # beyond truncation is unknown, not zero


def test_multiplication_respects_truncation():
    a = LaurentSeries.from_coefficients([1, 1, 1, 1], min_degree=0)
    b = LaurentSeries.from_coefficients([1, -1], min_degree=1)
    prod = a * b
    # b is unknown past z^2, so the z^3 product coefficient would need b_3
    assert prod.min_degree == 1
    assert prod.truncation_order == 2
    assert prod.coefficient(1) == 1
    assert prod.coefficient(2) == 0
    with pytest.raises(ValueError):
        prod.coefficient(3)


def test_inverse_of_unit_series():
    s = series_from_linear_factors([(1, 2)], 1, 0, 5)  # 1 - 2z
    inv = s.inverse()
    assert inv.min_degree == 0
    for p in range(6):
        assert inv.coefficient(p) == Fraction(2) ** p
    back = s * inv
    assert back.coefficient(0) == 1
    assert all(back.coefficient(p).is_zero for p in range(1, back.truncation_order + 1))


def test_inverse_extracts_leading_power():
    s = series_from_linear_factors([], 1, -1, 3)  # plain 1/z
    inv = s.inverse()
    assert inv.min_degree == 1
    assert inv.coefficient(1) == 1


def test_inverse_requires_constant_lowest_coefficient():
    s = LaurentSeries.from_coefficients([n, 1], min_degree=0)
    with pytest.raises(ValueError):
        s.inverse()


def test_coefficient_count_invariant():
    with pytest.raises(ValueError):
        LaurentSeries("z", 0, (Polynomial.one(),), 3)


def test_addition_aligns_degrees():
    a = LaurentSeries.from_coefficients([1, 2], min_degree=-1)
    b = LaurentSeries.from_coefficients([3], min_degree=1)
    total = a + b
    assert total.coefficient(-1) == 1
    assert total.coefficient(0) == 2
    assert total.truncation_order == 0  # b knows nothing beyond z^1; a stops at 0
