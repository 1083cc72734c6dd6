"""Truncated Laurent series with polynomial coefficients.

A series stores exact coefficients for powers min_degree..truncation_order of
one expansion variable (z by default).  All arithmetic keeps track of how far
the result is still exact; coefficients beyond the truncation order are
unknown, not zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .polynomial import Polynomial, Scalar

CoeffLike = Polynomial | Scalar


def _as_poly(value: CoeffLike) -> Polynomial:
    return Polynomial._coerce(value)


@dataclass(frozen=True)
class LaurentSeries:
    variable: str
    min_degree: int
    coefficients: tuple[Polynomial, ...]
    truncation_order: int

    def __post_init__(self):
        expected = self.truncation_order - self.min_degree + 1
        if expected < 0 or len(self.coefficients) != expected:
            raise ValueError(
                f"need {expected} coefficients for degrees "
                f"{self.min_degree}..{self.truncation_order}, got {len(self.coefficients)}"
            )

    @classmethod
    def from_coefficients(
        cls,
        coeffs: Sequence[CoeffLike],
        min_degree: int = 0,
        variable: str = "z",
    ) -> "LaurentSeries":
        polys = tuple(_as_poly(c) for c in coeffs)
        return cls(variable, min_degree, polys, min_degree + len(polys) - 1)

    def coefficient(self, power: int) -> Polynomial:
        """Coefficient of variable**power; zero below min_degree, error past truncation."""
        if power > self.truncation_order:
            raise ValueError(f"coefficient of order {power} is beyond truncation {self.truncation_order}")
        if power < self.min_degree:
            return Polynomial.zero()
        return self.coefficients[power - self.min_degree]

    def truncate(self, order: int) -> "LaurentSeries":
        if order > self.truncation_order:
            raise ValueError("cannot extend a truncated series")
        keep = order - self.min_degree + 1
        return LaurentSeries(self.variable, self.min_degree, self.coefficients[:keep], order)

    def shift(self, power: int) -> "LaurentSeries":
        """Multiply by variable**power."""
        return LaurentSeries(
            self.variable, self.min_degree + power, self.coefficients, self.truncation_order + power
        )

    def scale(self, factor: CoeffLike) -> "LaurentSeries":
        f = _as_poly(factor)
        return LaurentSeries(
            self.variable,
            self.min_degree,
            tuple(c * f for c in self.coefficients),
            self.truncation_order,
        )

    def __add__(self, other: "LaurentSeries") -> "LaurentSeries":
        self._check_compatible(other)
        lo = min(self.min_degree, other.min_degree)
        hi = min(self.truncation_order, other.truncation_order)
        coeffs = tuple(self.coefficient(p) + other.coefficient(p) for p in range(lo, hi + 1))
        return LaurentSeries(self.variable, lo, coeffs, hi)

    def __neg__(self) -> "LaurentSeries":
        return self.scale(-1)

    def __sub__(self, other: "LaurentSeries") -> "LaurentSeries":
        return self + (-other)

    def __mul__(self, other: "LaurentSeries") -> "LaurentSeries":
        self._check_compatible(other)
        lo = self.min_degree + other.min_degree
        # each factor is unknown past its truncation, which caps the product
        hi = min(
            self.truncation_order + other.min_degree,
            other.truncation_order + self.min_degree,
        )
        out = [Polynomial.zero() for _ in range(hi - lo + 1)]
        for i, a in enumerate(self.coefficients):
            if a.is_zero:
                continue
            pa = self.min_degree + i
            for j, b in enumerate(other.coefficients):
                p = pa + other.min_degree + j
                if p > hi:
                    break
                if b.is_zero:
                    continue
                out[p - lo] = out[p - lo] + a * b
        return LaurentSeries(self.variable, lo, tuple(out), hi)

    def inverse(self) -> "LaurentSeries":
        """Multiplicative inverse, after extracting the leading monomial.

        The lowest stored coefficient must be a nonzero rational constant;
        then 1/(c*z**m*(1 + tail)) is expanded by the usual recurrence.
        """
        lead = self.coefficients[0] if self.coefficients else Polynomial.zero()
        if lead.is_zero or not lead.is_constant:
            raise ValueError("series inversion needs a nonzero constant lowest-order coefficient")
        c0 = lead.constant_value()
        length = len(self.coefficients)
        inv = [Polynomial.zero()] * length
        inv[0] = Polynomial.const(Fraction(1) / c0)
        for i in range(1, length):
            acc = Polynomial.zero()
            for j in range(1, i + 1):
                acc = acc + self.coefficients[j] * inv[i - j]
            inv[i] = acc * (Fraction(-1) / c0)
        new_min = -self.min_degree
        return LaurentSeries(
            self.variable, new_min, tuple(inv), new_min + length - 1
        )

    def _check_compatible(self, other: "LaurentSeries"):
        if not isinstance(other, LaurentSeries):
            raise TypeError("expected a LaurentSeries")
        if other.variable != self.variable:
            raise ValueError(f"variable mismatch: {self.variable!r} vs {other.variable!r}")

    def __eq__(self, other):
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        if self.variable != other.variable or self.truncation_order != other.truncation_order:
            return False
        lo = min(self.min_degree, other.min_degree)
        return all(
            self.coefficient(p) == other.coefficient(p)
            for p in range(lo, self.truncation_order + 1)
        )

    def __str__(self):
        parts = []
        for i, c in enumerate(self.coefficients):
            if c.is_zero:
                continue
            p = self.min_degree + i
            if p == 0:
                parts.append(f"({c})")
            else:
                parts.append(f"({c})*{self.variable}^{p}")
        body = " + ".join(parts) if parts else "0"
        return f"{body} + O({self.variable}^{self.truncation_order + 1})"


def series_from_linear_factors(
    factors: Sequence[tuple[int, CoeffLike]],
    constant_prefactor: CoeffLike = 1,
    z_power_offset: int = 0,
    order: int = 6,
    variable: str = "z",
) -> LaurentSeries:
    """Expand prefactor * z**offset * prod (1 - c*z)**sign around z = 0.

    Each factor is (sign, c) with sign +1 for a numerator factor (1 - c*z)
    and -1 for a denominator factor, expanded as the geometric series
    sum_p c**p z**p.  The result is exact through z**order.
    """
    if order < z_power_offset:
        raise ValueError(f"order {order} is below the leading power {z_power_offset}")
    length = order - z_power_offset + 1
    coeffs: list[Polynomial] = [_as_poly(constant_prefactor)] + [
        Polynomial.zero() for _ in range(length - 1)
    ]
    for sign, raw_c in factors:
        c = _as_poly(raw_c)
        if sign == 1:
            # multiply by (1 - c*z)
            for i in range(length - 1, 0, -1):
                coeffs[i] = coeffs[i] - c * coeffs[i - 1]
        elif sign == -1:
            # multiply by 1/(1 - c*z): b_i = a_i + c*b_{i-1}
            for i in range(1, length):
                coeffs[i] = coeffs[i] + c * coeffs[i - 1]
        else:
            raise ValueError(f"factor sign must be +1 or -1, got {sign}")
    return LaurentSeries(variable, z_power_offset, tuple(coeffs), order)
