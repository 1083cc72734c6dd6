"""Vogel-plane parameterization and the universal formulas built on it.

A point carries the three parameters (alpha, beta, gamma) of a simple Lie
algebra (or any point of the plane); t = alpha + beta + gamma.  In the
normalization used throughout, long roots have squared length 2 and
alpha = -2, the adjoint Casimir is 2t, and the three nontrivial summands of
the symmetric square of the adjoint have Casimir 4t - 2*alpha, 4t - 2*beta,
4t - 2*gamma.

Entries may be exact rationals or polynomials (for family lines and for
symbolic identity checks), so every formula here is written against plain
arithmetic operators.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .exact.polynomial import Polynomial, PolyFraction
from .exact.symmetric import symmetric_class_sizes
from .rootdata import AlgebraId

SLOTS = ("alpha", "beta", "gamma")

Value = Fraction | Polynomial


class PoleError(ZeroDivisionError):
    """A universal dimension formula was evaluated on a vanishing denominator factor."""

    def __init__(self, factor: str):
        self.factor = factor
        super().__init__(f"denominator factor {factor} vanishes at this point")


def _coerce(value) -> Value:
    if isinstance(value, Polynomial):
        return value
    return Fraction(value)


def _is_zero(value) -> bool:
    if isinstance(value, Polynomial):
        return value.is_zero
    if isinstance(value, PolyFraction):
        return value.is_zero
    return value == 0


@dataclass(frozen=True)
class VogelPoint:
    alpha: Value
    beta: Value
    gamma: Value

    def __post_init__(self):
        object.__setattr__(self, "alpha", _coerce(self.alpha))
        object.__setattr__(self, "beta", _coerce(self.beta))
        object.__setattr__(self, "gamma", _coerce(self.gamma))

    @property
    def t(self) -> Value:
        return self.alpha + self.beta + self.gamma

    def slot(self, name: str) -> Value:
        if name not in SLOTS:
            raise ValueError(f"unknown slot {name!r}")
        return getattr(self, name)

    def permuted(self, order: tuple[str, str, str]) -> "VogelPoint":
        if sorted(order) != sorted(SLOTS):
            raise ValueError("order must be a permutation of (alpha, beta, gamma)")
        return VogelPoint(*(self.slot(s) for s in order))

    def scaled(self, factor) -> "VogelPoint":
        return VogelPoint(self.alpha * factor, self.beta * factor, self.gamma * factor)

    def same_up_to_symmetry(self, other: "VogelPoint") -> bool:
        """Projective equality: equal up to rescaling and slot permutation."""
        mine = (self.alpha, self.beta, self.gamma)
        for perm in itertools.permutations((other.alpha, other.beta, other.gamma)):
            # proportionality via vanishing cross products
            if all(
                _is_zero(mine[i] * perm[j] - mine[j] * perm[i])
                for i in range(3)
                for j in range(i + 1, 3)
            ):
                return True
        return False

    def __str__(self):
        return f"({self.alpha}, {self.beta}, {self.gamma})"

    def to_dict(self) -> dict[str, str]:
        return {
            "alpha": str(self.alpha),
            "beta": str(self.beta),
            "gamma": str(self.gamma),
            "t": str(self.t),
        }


def symbolic_point() -> VogelPoint:
    """The generic point, for identity checks in the plane coordinates."""
    return VogelPoint(Polynomial.var("alpha"), Polynomial.var("beta"), Polynomial.var("gamma"))


def vogel_params(algebra: AlgebraId) -> VogelPoint:
    """Exact parameters of a simple Lie algebra, alpha = -2 normalization."""
    r = algebra.rank
    fam = algebra.family
    if fam == "A":
        return VogelPoint(-2, 2, r + 1)
    if fam == "B":
        return VogelPoint(-2, 4, 2 * r - 3)
    if fam == "C":
        return VogelPoint(-2, 1, r + 2)
    if fam == "D":
        return VogelPoint(-2, 4, 2 * r - 4)
    if fam == "G":
        return VogelPoint(-2, Fraction(10, 3), Fraction(8, 3))
    if fam == "F":
        return VogelPoint(-2, 5, 6)
    return VogelPoint(-2, {6: 6, 7: 8, 8: 12}[r], {6: 8, 7: 12, 8: 20}[r])


# family lines in the plane; the line symbol is the defining size parameter
_LINES = {
    "sl": lambda N: VogelPoint(-2, 2, N),
    "so": lambda N: VogelPoint(-2, 4, N - 4),
    "sp": lambda N: VogelPoint(-2, 1, N / 2 + 2),
    "exc": lambda n: VogelPoint(-2, 2 * n + 4, n + 4),
}

_LINE_RELATIONS = {
    "sl": "alpha + beta = 0",
    "so": "2*alpha + beta = 0",
    "sp": "alpha + 2*beta = 0",
    "exc": "gamma = 2*(alpha + beta)",
}


def family_line(name: str) -> VogelPoint:
    """Symbolic point of a classical/exceptional family line (symbol N, or n for exc)."""
    if name not in _LINES:
        raise ValueError(f"unknown family line {name!r}; choose from {sorted(_LINES)}")
    symbol = Polynomial.var("n" if name == "exc" else "N")
    return _LINES[name](symbol)


def line_relation(name: str) -> str:
    return _LINE_RELATIONS[name]


def line_residual(point: VogelPoint, name: str):
    """Value of the family-line equation at a point (zero iff on the line)."""
    a, b, g = point.alpha, point.beta, point.gamma
    if name == "sl":
        return a + b
    if name == "so":
        return 2 * a + b
    if name == "sp":
        return a + 2 * b
    if name == "exc":
        return g - 2 * (a + b)
    raise ValueError(f"unknown family line {name!r}")


def _checked_denominator(factors: list[tuple[str, Value]]):
    product = None
    for label, value in factors:
        if _is_zero(value):
            raise PoleError(label)
        product = value if product is None else product * value
    return product


def dim_adjoint_universal(p: VogelPoint):
    """dim g = (alpha-2t)(beta-2t)(gamma-2t) / (alpha*beta*gamma).

    The orientation of the three linear factors is fixed by the requirement
    that the value match the Weyl dimension of the adjoint on every algebra
    point (e.g. +8, not -8, at (-2, 2, 3)).
    """
    t = p.t
    den = _checked_denominator([("alpha", p.alpha), ("beta", p.beta), ("gamma", p.gamma)])
    num = (p.alpha - 2 * t) * (p.beta - 2 * t) * (p.gamma - 2 * t)
    return num / den


def dim_y2_universal(p: VogelPoint, slot: str):
    """Dimension of one symmetric-square summand; may legitimately be zero.

    The formula is stated for the alpha slot; the other slots swap alpha with
    the named parameter (the formula is symmetric in the remaining two).
    """
    if slot not in SLOTS:
        raise ValueError(f"unknown slot {slot!r}")
    others = [s for s in SLOTS if s != slot]
    a = p.slot(slot)
    b = p.slot(others[0])
    c = p.slot(others[1])
    t = p.t
    den = _checked_denominator(
        [
            (f"{slot}^2", a * a),
            (f"{slot}-{others[0]}", a - b),
            (others[0], b),
            (f"{slot}-{others[1]}", a - c),
            (others[1], c),
        ]
    )
    num = (2 * t - 3 * a) * (b - 2 * t) * (c - 2 * t) * t * (b + t) * (c + t)
    return num / den


def casimir_y2(p: VogelPoint, slot: str):
    """Casimir on a symmetric-square summand: 4t - 2*(slot parameter)."""
    return 4 * p.t - 2 * p.slot(slot)


def universal_casimir_kn(p: VogelPoint, k, n):
    """Casimir on the k-th/n-th Cartan power pair:

        alpha*(3k - 3k^2 + n - n^2 - 3kn) + t*(4k + 2n)

    k and n may be integers or polynomial symbols.  (1,0) gives 4t and
    (0,1) gives 2t.
    """
    return p.alpha * (3 * k - 3 * k**2 + n - n**2 - 3 * k * n) + p.t * (4 * k + 2 * n)


def casimir_scaled(p: VogelPoint, k, n):
    """Casimir rescaled to 1 on the adjoint (divide by 2t)."""
    t = p.t
    if _is_zero(t):
        raise PoleError("t")
    return universal_casimir_kn(p, k, n) / (2 * t)


# the three comparison values in the adjoint-normalized scaling, as linear
# forms in a = 1/t
_CDM_FORMS = {
    "H": (Fraction(4), Fraction(6)),
    "C": (Fraction(3), Fraction(3)),
    "G": (Fraction(4), Fraction(8)),
}

CDM_POWERS = {"H": (2, 0), "C": (1, 1), "G": (1, 2)}


def cohen_de_man_value(label: str, a: Fraction) -> Fraction:
    """Scaled Casimir as the published linear form in a = 1/t."""
    c0, c1 = _CDM_FORMS[label]
    return c0 + c1 * Fraction(a)


def trivial_character(m: int) -> dict[tuple[int, ...], Fraction]:
    return {ct.parts: Fraction(1) for ct in symmetric_class_sizes(m)}


def sign_character(m: int) -> dict[tuple[int, ...], Fraction]:
    return {ct.parts: Fraction(ct.sign) for ct in symmetric_class_sizes(m)}


def deligne_rhs(dim_v, trace_c2_v, character: Mapping, m: int):
    """Trace of the Casimir on an isotypic piece of the m-th tensor power:

        (1/m!) * sum over classes of  size * chi * (sum of squared cycle
        lengths) * dim^(cycles - 1) * Tr(C2, V)

    The character may be keyed by CycleType or by its parts tuple.
    """
    total = None
    for ct in symmetric_class_sizes(m):
        if ct in character:
            chi = character[ct]
        elif ct.parts in character:
            chi = character[ct.parts]
        else:
            raise KeyError(f"character value missing for cycle type {ct.parts}")
        term = (
            Fraction(ct.class_size)
            * Fraction(chi)
            * ct.sum_of_squares
            * dim_v ** (ct.num_cycles - 1)
            * trace_c2_v
        )
        total = term if total is None else total + term
    return total / math.factorial(m)


def deligne_s2_check(p: VogelPoint):
    """Residual of the symmetric-square trace identity; zero on the whole plane.

    Left side: sum over the three summands of dim * Casimir (the trivial
    summand contributes 0).  Right side: the general trace formula with the
    trivial character at m = 2, which is (2 + dim g) * dim g * C2(g).

    A zero-dimensional summand with nonzero Casimir is a legitimate state
    here; the dimension factor removes its contribution.
    """
    lhs = None
    for slot in SLOTS:
        term = dim_y2_universal(p, slot) * casimir_y2(p, slot)
        lhs = term if lhs is None else lhs + term
    d = dim_adjoint_universal(p)
    rhs = deligne_rhs(d, d * (2 * p.t), trivial_character(2), 2)
    return lhs - rhs


def dim_x2_universal(p: VogelPoint):
    """Non-adjoint part of the antisymmetric square: dim g * (dim g - 3) / 2."""
    d = dim_adjoint_universal(p)
    return d * (d - 3) / 2


def deligne_lambda2_check(p: VogelPoint):
    """Residual of the antisymmetric-square variant (sign character)."""
    d = dim_adjoint_universal(p)
    t = p.t
    lhs = d * (2 * t) + dim_x2_universal(p) * (4 * t)
    rhs = deligne_rhs(d, d * (2 * t), sign_character(2), 2)
    return lhs - rhs


@dataclass(frozen=True)
class RepLabel:
    """Plane-level name of a representation with universal data attached.

    Either a symmetric-square summand (kind "y2" with a slot) or the
    highest-weight component of the k-th/n-th power pair (kind "power";
    the adjoint is power(0, 1), the antisymmetric-square component is
    power(1, 0)).  A y2 label follows its slot under permutations: relabeling
    the point and the slot together never changes any value.
    """

    kind: str
    slot: str | None = None
    k: int = 0
    n: int = 0

    def __post_init__(self):
        if self.kind == "y2":
            if self.slot not in SLOTS:
                raise ValueError(f"y2 labels need a slot from {SLOTS}")
        elif self.kind == "power":
            if self.slot is not None or self.k < 0 or self.n < 0:
                raise ValueError("power labels carry nonnegative exponents and no slot")
        else:
            raise ValueError(f"unknown label kind {self.kind!r}")

    @classmethod
    def adjoint(cls) -> "RepLabel":
        return cls("power", k=0, n=1)

    @classmethod
    def x2(cls) -> "RepLabel":
        return cls("power", k=1, n=0)

    @classmethod
    def y2(cls, slot: str) -> "RepLabel":
        return cls("y2", slot=slot)

    @classmethod
    def power(cls, k: int, n: int) -> "RepLabel":
        return cls("power", k=k, n=n)

    def casimir(self, p: VogelPoint):
        if self.kind == "y2":
            return casimir_y2(p, self.slot)
        return universal_casimir_kn(p, self.k, self.n)

    def dimension(self, p: VogelPoint):
        """Universal dimension, where one is available in this library."""
        if self.kind == "y2":
            return dim_y2_universal(p, self.slot)
        if (self.k, self.n) == (0, 0):
            return Fraction(1)
        if (self.k, self.n) == (0, 1):
            return dim_adjoint_universal(p)
        if (self.k, self.n) == (1, 0):
            return dim_x2_universal(p)
        raise ValueError(f"no universal dimension formula for powers ({self.k},{self.n})")

    def __str__(self):
        if self.kind == "y2":
            return f"Y2({self.slot})"
        if (self.k, self.n) == (0, 1):
            return "adjoint"
        if (self.k, self.n) == (1, 0):
            return "X2"
        return f"X2^{self.k}.g^{self.n}"
