from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from unicas.exact import Polynomial, PolyFraction, UnboundSymbolError

k = Polynomial.var("k")
n = Polynomial.var("n")
N = Polynomial.var("N")


def test_canonical_form_drops_zero_terms():
    p = k - k
    assert p.is_zero
    assert p == 0
    assert str(p) == "0"


def test_structural_equality_and_hash():
    p = (k + n) * (k - n)
    q = k**2 - n**2
    assert p == q
    assert hash(p) == hash(q)
    assert Polynomial.const(5) == 5
    assert hash(Polynomial.const(5)) == hash(5)


def test_binomial_expansion():
    assert (k + n) ** 2 == k**2 + 2 * k * n + n**2
    assert str((k + n) ** 2) == "k^2 + 2*k*n + n^2"


def test_multiplicative_identity():
    p = 6 * k**2 + (8 * N - 10) * k
    assert p * 1 == p
    assert p * Polynomial.one() == p


def test_grouped_text_form():
    p = 6 * k**2 + (8 * N - 10) * k
    assert str(p) == "6*k^2 + (8*N - 10)*k"
    assert str(16 * n - 16) == "16*n - 16"
    assert str(12 * k**2 + k * (16 * n - 28)) == "12*k^2 + 16*k*n - 28*k"


def test_plain_text_form_without_index_symbols():
    a = Polynomial.var("alpha")
    b = Polynomial.var("beta")
    assert str(2 * a + b) == "2*alpha + beta"
    assert str(a - b) == "alpha - beta"


def test_fractional_coefficients_render():
    assert str(n / 2 - Fraction(3, 2)) == "1/2*n - 3/2"


def test_signed_group_rendering():
    assert str((N - 1) * k - (N + 2) * n) == "(N - 1)*k - (N + 2)*n"
    assert str((-2 * N + 3) * k + n) == "(-2*N + 3)*k + n"
    assert str(-k) == "-k"
    assert str(-(k**2) - 5) == "-k^2 - 5"
    assert str(2 * N * k) == "2*N*k"


def test_substitute_negated_rank():
    p = 16 * n + 16
    assert -(p.substitute({"n": -n})) == 16 * n - 16


def test_substitute_with_polynomial_value():
    p = k**2 + n
    assert p.substitute({"k": n + 1}) == n**2 + 3 * n + 1


def test_evaluate_requires_all_symbols():
    p = 6 * k**2 + (8 * N - 10) * k
    assert p.evaluate({"k": 2, "N": 5}) == 84
    with pytest.raises(UnboundSymbolError) as err:
        p.evaluate({"k": 2})
    assert err.value.symbol == "N"


def test_as_univariate_split():
    p = 6 * k**2 + (8 * N - 10) * k + 7
    parts = p.as_univariate("k")
    assert parts[2] == 6
    assert parts[1] == 8 * N - 10
    assert parts[0] == 7


def test_degree_queries():
    p = k**3 * n + n**2
    assert p.total_degree() == 4
    assert p.degree_in("k") == 3
    assert p.degree_in("n") == 2
    assert p.degree_in("z") == 0


def test_division_by_scalar_and_polynomial():
    assert (2 * k + 4) / 2 == k + 2
    q = (k**2 - 1) / (k + 1)
    assert isinstance(q, PolyFraction)
    assert q == k - 1  # cross-multiplication equality, no gcd needed


def test_polyfraction_zero_and_arithmetic():
    q = PolyFraction(k - k, n + 1)
    assert q.is_zero
    r = PolyFraction(k, n) + PolyFraction(n, k)
    assert r == PolyFraction(k**2 + n**2, k * n)
    with pytest.raises(ZeroDivisionError):
        PolyFraction(k, Polynomial.zero())


small_ints = st.integers(min_value=-6, max_value=6)


@st.composite
def polys(draw):
    terms = {}
    for _ in range(draw(st.integers(min_value=0, max_value=4))):
        ek = draw(st.integers(min_value=0, max_value=3))
        en = draw(st.integers(min_value=0, max_value=3))
        mono = tuple(p for p in (("k", ek), ("n", en)) if p[1])
        terms[mono] = Fraction(draw(small_ints))
    return Polynomial(terms)


@given(polys(), polys(), polys())
def test_ring_axioms(p, q, r):
    assert (p + q) * r == p * r + q * r
    assert p * q == q * p
    assert (p + q) + r == p + (q + r)


@given(polys(), small_ints, small_ints)
def test_evaluate_commutes_with_substitute(p, a, b):
    direct = p.evaluate({"k": a, "n": b})
    staged = p.substitute({"k": Polynomial.const(a)}).evaluate({"n": b})
    assert staged == direct
