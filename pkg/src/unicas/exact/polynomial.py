"""Sparse multivariate polynomials over exact rationals.

A polynomial is a map from monomials to nonzero Fraction coefficients.  A
monomial is a tuple of (symbol, exponent) pairs with positive exponents,
sorted by a fixed global symbol order (k < n < N < z < everything else
alphabetically), so equal polynomials have identical storage: equality and
hashing are structural.

The text form groups terms by their monomial in the "index" symbols k, n, z;
parameter symbols (N, alpha, ...) stay inside the coefficient, parenthesized
when composite:

    6*k^2 + (8*N - 10)*k

Monomials are ordered graded-lexicographically (total degree first, then the
exponent of the earliest symbol in the global order), descending.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Union

Scalar = Union[int, Fraction]
Monomial = tuple[tuple[str, int], ...]

# Symbols used as representation/series indices; anything else is treated as
# a parameter and folded into coefficients when rendering.
_INDEX_SYMBOLS = ("k", "n", "z")
_PRIORITY = {"k": 0, "n": 1, "N": 2, "z": 3}


def _symbol_key(name: str) -> tuple[int, str]:
    return (_PRIORITY.get(name, len(_PRIORITY)), name)


class UnboundSymbolError(ValueError):
    """Raised when evaluating a polynomial with a free symbol left over."""

    def __init__(self, symbol: str):
        self.symbol = symbol
        super().__init__(f"symbol {symbol!r} is not bound")


def _normalize_monomial(pairs: Iterable[tuple[str, int]]) -> Monomial:
    merged: dict[str, int] = {}
    for name, exp in pairs:
        if exp:
            merged[name] = merged.get(name, 0) + exp
    return tuple(sorted(((s, e) for s, e in merged.items() if e), key=lambda p: _symbol_key(p[0])))


class Polynomial:
    """Immutable exact multivariate polynomial."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Monomial, Scalar] | None = None):
        cleaned: dict[Monomial, Fraction] = {}
        for mono, coeff in (terms or {}).items():
            c = Fraction(coeff)
            if c:
                key = _normalize_monomial(mono)
                c = cleaned.get(key, Fraction(0)) + c
                if c:
                    cleaned[key] = c
                else:
                    cleaned.pop(key, None)
        object.__setattr__(self, "_terms", cleaned)

    # -- constructors ------------------------------------------------------

    @classmethod
    def const(cls, value: Scalar) -> "Polynomial":
        return cls({(): Fraction(value)})

    @classmethod
    def zero(cls) -> "Polynomial":
        return cls({})

    @classmethod
    def one(cls) -> "Polynomial":
        return cls.const(1)

    @classmethod
    def var(cls, name: str) -> "Polynomial":
        return cls({((name, 1),): Fraction(1)})

    @classmethod
    def _coerce(cls, value: "Polynomial | Scalar") -> "Polynomial":
        if isinstance(value, Polynomial):
            return value
        return cls.const(value)

    # -- structure ---------------------------------------------------------

    @property
    def terms(self) -> dict[Monomial, Fraction]:
        return dict(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def symbols(self) -> tuple[str, ...]:
        seen = {name for mono in self._terms for name, _ in mono}
        return tuple(sorted(seen, key=_symbol_key))

    @property
    def is_constant(self) -> bool:
        return all(not mono for mono in self._terms)

    def constant_value(self) -> Fraction:
        if self.is_zero:
            return Fraction(0)
        if not self.is_constant:
            raise UnboundSymbolError(self.symbols[0])
        return self._terms[()]

    def total_degree(self) -> int:
        if self.is_zero:
            return 0
        return max(sum(e for _, e in mono) for mono in self._terms)

    def degree_in(self, symbol: str) -> int:
        best = 0
        for mono in self._terms:
            for name, exp in mono:
                if name == symbol:
                    best = max(best, exp)
        return best

    def as_univariate(self, symbol: str) -> dict[int, "Polynomial"]:
        """Split into coefficients of powers of one symbol."""
        buckets: dict[int, dict[Monomial, Fraction]] = {}
        for mono, coeff in self._terms.items():
            power = 0
            rest = []
            for name, exp in mono:
                if name == symbol:
                    power = exp
                else:
                    rest.append((name, exp))
            buckets.setdefault(power, {})[tuple(rest)] = coeff
        return {p: Polynomial(t) for p, t in sorted(buckets.items())}

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.const(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        terms = dict(self._terms)
        for mono, coeff in other._terms.items():
            total = terms.get(mono, Fraction(0)) + coeff
            if total:
                terms[mono] = total
            else:
                terms.pop(mono, None)
        return Polynomial(terms)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.const(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            if not c:
                return Polynomial.zero()
            return Polynomial({m: coeff * c for m, coeff in self._terms.items()})
        if not isinstance(other, Polynomial):
            return NotImplemented
        terms: dict[Monomial, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                mono = _normalize_monomial(list(m1) + list(m2))
                total = terms.get(mono, Fraction(0)) + c1 * c2
                if total:
                    terms[mono] = total
                else:
                    terms.pop(mono, None)
        return Polynomial(terms)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("polynomial powers must be nonnegative integers")
        result = Polynomial.one()
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division of a polynomial by zero")
            return self * (Fraction(1) / Fraction(other))
        if isinstance(other, Polynomial):
            if other.is_constant:
                return self / other.constant_value()
            return PolyFraction(self, other)
        return NotImplemented

    def __rtruediv__(self, other):
        return PolyFraction(Polynomial._coerce(other), self)

    # -- substitution ------------------------------------------------------

    def substitute(self, assignments: Mapping[str, "Polynomial | Scalar"]) -> "Polynomial":
        """Replace symbols by polynomials or scalars; unmentioned symbols stay."""
        subs = {name: Polynomial._coerce(v) for name, v in assignments.items()}
        result = Polynomial.zero()
        for mono, coeff in self._terms.items():
            term = Polynomial.const(coeff)
            for name, exp in mono:
                factor = subs.get(name, Polynomial.var(name))
                term = term * factor**exp
            result = result + term
        return result

    def evaluate(self, assignments: Mapping[str, Scalar]) -> Fraction:
        """Full evaluation to a rational; every free symbol must be bound."""
        for name in self.symbols:
            if name not in assignments:
                raise UnboundSymbolError(name)
        total = Fraction(0)
        for mono, coeff in self._terms.items():
            value = coeff
            for name, exp in mono:
                value *= Fraction(assignments[name]) ** exp
            total += value
        return total

    # -- comparison / hashing ----------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_constant and self.constant_value() == other
        if isinstance(other, Polynomial):
            return self._terms == other._terms
        return NotImplemented

    def __hash__(self):
        if self.is_constant:
            return hash(self.constant_value())
        return hash(frozenset(self._terms.items()))

    def __bool__(self):
        return not self.is_zero

    # -- rendering ---------------------------------------------------------

    def _sorted_terms(self) -> list[tuple[Monomial, Fraction]]:
        syms = self.symbols

        def key(item):
            mono, _ = item
            exps = dict(mono)
            vec = tuple(-exps.get(s, 0) for s in syms)
            return (-sum(exps.values()), vec)

        return sorted(self._terms.items(), key=key)

    def __str__(self):
        if self.is_zero:
            return "0"
        index_syms = [s for s in self.symbols if s in _INDEX_SYMBOLS]
        if not index_syms:
            return _render_plain(self._sorted_terms())
        return _render_grouped(self, index_syms)

    def __repr__(self):
        return f"Polynomial({self})"


def _monomial_text(mono: Monomial) -> str:
    parts = []
    for name, exp in mono:
        parts.append(name if exp == 1 else f"{name}^{exp}")
    return "*".join(parts)


def _render_plain(ordered: list[tuple[Monomial, Fraction]]) -> str:
    chunks: list[tuple[bool, str]] = []
    for mono, coeff in ordered:
        negative = coeff < 0
        mag = -coeff if negative else coeff
        mono_text = _monomial_text(mono)
        if not mono_text:
            body = str(mag)
        elif mag == 1:
            body = mono_text
        else:
            body = f"{mag}*{mono_text}"
        chunks.append((negative, body))
    return _join_signed(chunks)


def _join_signed(chunks: list[tuple[bool, str]]) -> str:
    out = []
    for i, (negative, body) in enumerate(chunks):
        if i == 0:
            out.append(f"-{body}" if negative else body)
        else:
            out.append(f" - {body}" if negative else f" + {body}")
    return "".join(out)


def _render_grouped(poly: Polynomial, index_syms: list[str]) -> str:
    groups: dict[Monomial, dict[Monomial, Fraction]] = {}
    for mono, coeff in poly._terms.items():
        head = tuple((s, e) for s, e in mono if s in index_syms)
        tail = tuple((s, e) for s, e in mono if s not in index_syms)
        groups.setdefault(head, {})[tail] = coeff

    def head_key(head: Monomial):
        exps = dict(head)
        vec = tuple(-exps.get(s, 0) for s in index_syms)
        return (-sum(exps.values()), vec)

    chunks: list[tuple[bool, str]] = []
    for head in sorted(groups, key=head_key):
        coeff_poly = Polynomial(groups[head])
        head_text = _monomial_text(head)
        if not head_text:
            text = str(coeff_poly)
            chunks.append((text.startswith("-"), text.lstrip("-")))
            continue
        if coeff_poly.is_constant:
            c = coeff_poly.constant_value()
            negative = c < 0
            mag = -c if negative else c
            body = head_text if mag == 1 else f"{mag}*{head_text}"
            chunks.append((negative, body))
        elif len(coeff_poly._terms) == 1:
            ((tail, c),) = coeff_poly._terms.items()
            negative = c < 0
            mag = -c if negative else c
            tail_text = _monomial_text(tail)
            prefix = tail_text if mag == 1 else f"{mag}*{tail_text}"
            chunks.append((negative, f"{prefix}*{head_text}"))
        elif all(c < 0 for c in coeff_poly._terms.values()):
            chunks.append((True, f"({-coeff_poly})*{head_text}"))
        else:
            chunks.append((False, f"({coeff_poly})*{head_text}"))
    return _join_signed(chunks)


class PolyFraction:
    """Quotient of two polynomials, kept unreduced.

    There is no gcd machinery here on purpose: the only questions the library
    asks of a quotient are exact arithmetic, equality (by cross
    multiplication) and whether it is identically zero.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: Polynomial | Scalar, den: Polynomial | Scalar = 1):
        num = Polynomial._coerce(num)
        den = Polynomial._coerce(den)
        if den.is_zero:
            raise ZeroDivisionError("zero denominator in polynomial fraction")
        self.num = num
        self.den = den

    @classmethod
    def _coerce(cls, value) -> "PolyFraction":
        if isinstance(value, PolyFraction):
            return value
        return cls(value)

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    def __add__(self, other):
        other = PolyFraction._coerce(other)
        return PolyFraction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return PolyFraction(-self.num, self.den)

    def __sub__(self, other):
        return self + (-PolyFraction._coerce(other))

    def __rsub__(self, other):
        return PolyFraction._coerce(other) + (-self)

    def __mul__(self, other):
        other = PolyFraction._coerce(other)
        return PolyFraction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = PolyFraction._coerce(other)
        return PolyFraction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return PolyFraction._coerce(other) / self

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("fraction powers must be nonnegative integers")
        return PolyFraction(self.num**exponent, self.den**exponent)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, Polynomial)):
            other = PolyFraction(other)
        if not isinstance(other, PolyFraction):
            return NotImplemented
        return (self.num * other.den - other.num * self.den).is_zero

    def __hash__(self):
        raise TypeError("PolyFraction is not hashable (no canonical form)")

    def __str__(self):
        if self.den == 1:
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self):
        return f"PolyFraction({self})"
