"""Concrete root-system data for the simple Lie algebras.

Everything is exact: Cartan matrices are integers, the invariant form is
normalized so long roots have squared length 2, and the Gram matrix of the
fundamental weights is F = A^-1 * D with D = diag((alpha_i, alpha_i)/2).

Dynkin node labeling (1-based):
  A_r   chain 1..r
  B_r   chain, node r short
  C_r   chain, node r long
  D_r   chain 1..r-2, fork nodes r-1 and r on node r-2
  E_r   chain 1..r-1, node r attached to node 3
  F_4   chain, nodes 1,2 long and 3,4 short
  G_2   node 1 short, node 2 long

This choice is pinned by the Gram-matrix test vectors in the test suite
(e.g. G2: F11 = 2/3; E8: F66 = 6 with row sum 57).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
import re
from typing import Sequence

from .exact.polynomial import Polynomial

FAMILIES = ("A", "B", "C", "D", "E", "F", "G")

# minimal rank for which the non-adjoint summand of the antisymmetric square
# is a plain tensor weight with the fixed shape used here
X2_MIN_RANK = {"A": 3, "B": 4, "C": 3, "D": 5, "E": 6, "F": 4, "G": 2}

_CLASSICAL_RE = re.compile(r"^(so|sp|sl)\s*\(\s*(\d+)\s*\)$")
_DYNKIN_RE = re.compile(r"^([A-Ga-g])\s*_?\s*(\d+)$")


@dataclass(frozen=True, order=True)
class AlgebraId:
    family: str
    rank: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        r = self.rank
        ok = {
            "A": r >= 1,
            "B": r >= 2,
            "C": r >= 2,
            "D": r >= 3,
            "E": r in (6, 7, 8),
            "F": r == 4,
            "G": r == 2,
        }[self.family]
        if not ok:
            raise ValueError(f"rank {r} is not valid for family {self.family}")

    @classmethod
    def parse(cls, text: str) -> "AlgebraId":
        s = text.strip()
        m = _CLASSICAL_RE.match(s)
        if m:
            kind, size = m.group(1), int(m.group(2))
            if kind == "sl":
                return cls("A", size - 1)
            if kind == "sp":
                if size % 2:
                    raise ValueError(f"sp({size}) needs an even size")
                return cls("C", size // 2)
            if size % 2:
                return cls("B", (size - 1) // 2)
            return cls("D", size // 2)
        m = _DYNKIN_RE.match(s)
        if m:
            return cls(m.group(1).upper(), int(m.group(2)))
        raise ValueError(f"cannot parse algebra name {text!r}")

    @property
    def name(self) -> str:
        return f"{self.family}{self.rank}"

    @property
    def classical_name(self) -> str:
        r = self.rank
        return {
            "A": f"sl({r + 1})",
            "B": f"so({2 * r + 1})",
            "C": f"sp({2 * r})",
            "D": f"so({2 * r})",
            "E": f"e{r}",
            "F": "f4",
            "G": "g2",
        }[self.family]

    @property
    def x2_supported(self) -> bool:
        return self.rank >= X2_MIN_RANK[self.family]

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class Weight:
    """A dominant integral weight in fundamental-weight coordinates."""

    algebra: AlgebraId
    coords: tuple[int, ...]

    def __post_init__(self):
        if len(self.coords) != self.algebra.rank:
            raise ValueError("coordinate count must match the rank")
        if any(c < 0 for c in self.coords):
            raise ValueError("only dominant weights (nonnegative coordinates) are supported")

    def __str__(self):
        parts = []
        for i, c in enumerate(self.coords, start=1):
            if c == 0:
                continue
            parts.append(f"w{i}" if c == 1 else f"{c}*w{i}")
        return " + ".join(parts) if parts else "0"


def combine_weights(k: int, u: Weight, n: int, v: Weight) -> Weight:
    if u.algebra != v.algebra:
        raise ValueError("weights live on different algebras")
    return Weight(u.algebra, tuple(k * a + n * b for a, b in zip(u.coords, v.coords)))


@dataclass(frozen=True)
class RootDatum:
    algebra: AlgebraId
    cartan: tuple[tuple[int, ...], ...]
    root_norms: tuple[Fraction, ...]
    gram: tuple[tuple[Fraction, ...], ...]
    positive_roots: tuple[tuple[int, ...], ...]
    rho: Weight

    @property
    def rank(self) -> int:
        return self.algebra.rank

    @property
    def num_positive_roots(self) -> int:
        return len(self.positive_roots)

    @property
    def dimension(self) -> int:
        return 2 * len(self.positive_roots) + self.rank


def _cartan_and_halved_norms(algebra: AlgebraId) -> tuple[list[list[int]], list[Fraction]]:
    r = algebra.rank
    fam = algebra.family
    a = [[2 if i == j else 0 for j in range(r)] for i in range(r)]

    def bond(i, j):
        a[i][j] = -1
        a[j][i] = -1

    if fam in ("A", "B", "C", "F"):
        for i in range(r - 1):
            bond(i, i + 1)
    elif fam == "D":
        for i in range(r - 3):
            bond(i, i + 1)
        bond(r - 3, r - 2)
        bond(r - 3, r - 1)
    elif fam == "E":
        for i in range(r - 2):
            bond(i, i + 1)
        bond(2, r - 1)
    elif fam == "G":
        bond(0, 1)

    one = Fraction(1)
    half = Fraction(1, 2)
    if fam == "B":
        d = [one] * (r - 1) + [half]
        a[r - 2][r - 1] = -2
    elif fam == "C":
        d = [half] * (r - 1) + [one]
        a[r - 1][r - 2] = -2
    elif fam == "F":
        d = [one, one, half, half]
        a[1][2] = -2
    elif fam == "G":
        d = [Fraction(1, 3), one]
        a[1][0] = -3
    else:
        d = [one] * r

    for i in range(r):
        for j in range(r):
            assert a[i][j] * d[j] == a[j][i] * d[i], "symmetrized Cartan matrix must be symmetric"
    return a, d


def _invert(matrix: Sequence[Sequence[Fraction]]) -> list[list[Fraction]]:
    n = len(matrix)
    aug = [[Fraction(matrix[i][j]) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for col in range(n):
        pivot = next(row for row in range(col, n) if aug[row][col] != 0)
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv_p = Fraction(1) / aug[col][col]
        aug[col] = [x * inv_p for x in aug[col]]
        for row in range(n):
            if row != col and aug[row][col]:
                factor = aug[row][col]
                aug[row] = [x - factor * y for x, y in zip(aug[row], aug[col])]
    return [row[n:] for row in aug]


_EXPECTED_POSITIVE_ROOTS = {
    "A": lambda r: r * (r + 1) // 2,
    "B": lambda r: r * r,
    "C": lambda r: r * r,
    "D": lambda r: r * (r - 1),
    "E": lambda r: {6: 36, 7: 63, 8: 120}[r],
    "F": lambda r: 24,
    "G": lambda r: 6,
}


def _positive_roots(cartan: list[list[int]], rank: int) -> list[tuple[int, ...]]:
    """Closure of the simple roots under root-string addition, level by level."""

    def pairing(root: tuple[int, ...], i: int) -> int:
        return sum(root[j] * cartan[j][i] for j in range(rank))

    simple = [tuple(int(i == j) for j in range(rank)) for i in range(rank)]
    known = set(simple)
    level = list(simple)
    ordered = list(simple)
    while level:
        nxt = []
        for beta in level:
            for i in range(rank):
                down = list(beta)
                down[i] -= 1
                steps_down = 0
                probe = tuple(down)
                while probe in known:
                    steps_down += 1
                    down[i] -= 1
                    probe = tuple(down)
                if steps_down - pairing(beta, i) > 0:
                    up = list(beta)
                    up[i] += 1
                    gamma = tuple(up)
                    if gamma not in known:
                        known.add(gamma)
                        nxt.append(gamma)
                        ordered.append(gamma)
        level = nxt
    ordered.sort(key=lambda root: (sum(root), root))
    return ordered


@lru_cache(maxsize=None)
def build_root_datum(algebra: AlgebraId) -> RootDatum:
    cartan, d = _cartan_and_halved_norms(algebra)
    rank = algebra.rank
    # F = A^-1 D, the Gram matrix of the fundamental weights
    inv = _invert(cartan)
    gram = [[inv[i][j] * d[j] for j in range(rank)] for i in range(rank)]
    for i in range(rank):
        for j in range(i):
            assert gram[i][j] == gram[j][i], "Gram matrix must be symmetric"
    roots = _positive_roots(cartan, rank)
    expected = _EXPECTED_POSITIVE_ROOTS[algebra.family](rank)
    if len(roots) != expected:
        raise AssertionError(
            f"{algebra}: generated {len(roots)} positive roots, expected {expected}"
        )
    return RootDatum(
        algebra=algebra,
        cartan=tuple(tuple(row) for row in cartan),
        root_norms=tuple(2 * di for di in d),
        gram=tuple(tuple(row) for row in gram),
        positive_roots=tuple(roots),
        rho=Weight(algebra, (1,) * rank),
    )


def inner(datum: RootDatum, u: Weight, v: Weight) -> Fraction:
    """Invariant bilinear form on weights, (u, v) = sum u_i v_j F_ij."""
    if u.algebra != datum.algebra or v.algebra != datum.algebra:
        raise ValueError("weights must belong to the datum's algebra")
    total = Fraction(0)
    for i, ui in enumerate(u.coords):
        if not ui:
            continue
        row = datum.gram[i]
        for j, vj in enumerate(v.coords):
            if vj:
                total += ui * vj * row[j]
    return total


def _weight_dot_root(datum: RootDatum, w: Weight, root: tuple[int, ...]) -> Fraction:
    # (omega_i, alpha_j) = delta_ij * (alpha_j, alpha_j)/2
    total = Fraction(0)
    for i, wi in enumerate(w.coords):
        if wi and root[i]:
            total += wi * root[i] * datum.root_norms[i] / 2
    return total


def casimir2(datum: RootDatum, weight: Weight) -> Fraction:
    """Second Casimir eigenvalue (lambda + 2*rho, lambda), long-root norm 2."""
    return inner(datum, weight, weight) + 2 * inner(datum, datum.rho, weight)


def casimir_poly_kn(datum: RootDatum, lambda1: Weight, lambda2: Weight) -> Polynomial:
    """Casimir of k*lambda1 + n*lambda2 as an exact polynomial in k and n."""
    k = Polynomial.var("k")
    n = Polynomial.var("n")
    return (
        k**2 * inner(datum, lambda1, lambda1)
        + n**2 * inner(datum, lambda2, lambda2)
        + 2 * inner(datum, lambda1, lambda2) * k * n
        + 2 * inner(datum, datum.rho, lambda1) * k
        + 2 * inner(datum, datum.rho, lambda2) * n
    )


def weyl_dim(datum: RootDatum, weight: Weight) -> int:
    """Weyl dimension formula: prod over positive roots of (w+rho, a)/(rho, a)."""
    num = Fraction(1)
    shifted = Weight(datum.algebra, tuple(c + 1 for c in weight.coords))
    for root in datum.positive_roots:
        num *= _weight_dot_root(datum, shifted, root) / _weight_dot_root(datum, datum.rho, root)
    if num.denominator != 1 or num <= 0:
        raise AssertionError(f"Weyl dimension came out non-integral: {num}")
    return int(num)


def highest_root(datum: RootDatum) -> tuple[int, ...]:
    tallest = max(datum.positive_roots, key=lambda root: sum(root))
    height = sum(tallest)
    if sum(1 for root in datum.positive_roots if sum(root) == height) != 1:
        raise AssertionError("highest root is not unique")
    return tallest


def adjoint_weight(algebra: AlgebraId) -> Weight:
    """Highest root expressed in fundamental-weight coordinates."""
    datum = build_root_datum(algebra)
    theta = highest_root(datum)
    coords = tuple(
        sum(theta[i] * datum.cartan[i][j] for i in range(datum.rank)) for j in range(datum.rank)
    )
    return Weight(algebra, coords)


def x2_weight(algebra: AlgebraId) -> tuple[Weight, ...]:
    """Highest weight(s) of the non-adjoint summand of the antisymmetric square.

    For the A family the summand is reducible and both highest weights are
    returned; consumers must check that derived quantities agree on both.
    """
    if not algebra.x2_supported:
        raise ValueError(
            f"{algebra} is below the supported rank ({X2_MIN_RANK[algebra.family]}) "
            "for the antisymmetric-square weight"
        )
    r = algebra.rank
    fam = algebra.family

    def w(**labels: int) -> Weight:
        coords = [0] * r
        for key, value in labels.items():
            coords[int(key[1:]) - 1] = value
        return Weight(algebra, tuple(coords))

    if fam == "A":
        first = [0] * r
        first[0] = 2
        first[r - 2] = 1
        second = [0] * r
        second[1] = 1
        second[r - 1] = 2
        return (Weight(algebra, tuple(first)), Weight(algebra, tuple(second)))
    if fam in ("B", "D"):
        return (w(i1=1, i3=1),)
    if fam == "C":
        return (w(i1=2, i2=1),)
    if fam == "G":
        return (w(i1=3),)
    if fam == "F":
        return (w(i2=1),)
    # E series
    node = {6: 3, 7: 2, 8: 6}[r]
    return (w(**{f"i{node}": 1}),)


def weight_from_partition(algebra: AlgebraId, rows: Sequence[int]) -> Weight:
    """Tensor-representation weight of an orthogonal/symplectic algebra.

    Row lengths are the coordinates in the standard orthogonal basis; the
    Dynkin labels are consecutive differences.  Shapes that would need spinor
    weights (too many rows) are rejected.
    """
    rows = tuple(getattr(rows, "rows", rows))
    if any(r <= 0 for r in rows) or list(rows) != sorted(rows, reverse=True):
        raise ValueError("rows must be positive and weakly decreasing")
    fam = algebra.family
    rank = algebra.rank
    if fam not in ("B", "C", "D"):
        raise ValueError("partition weights exist only for the B, C and D families")
    max_rows = rank - 2 if fam == "D" else rank
    if len(rows) > max_rows:
        raise ValueError(
            f"{algebra} tensor representations allow at most {max_rows} rows, got {len(rows)}"
        )
    padded = list(rows) + [0] * (rank + 1 - len(rows))
    labels = [padded[i] - padded[i + 1] for i in range(rank)]
    if fam == "B":
        labels[rank - 1] = 2 * padded[rank - 1]
    return Weight(algebra, tuple(labels))


def partition_from_weight(weight: Weight) -> tuple[int, ...]:
    """Inverse of weight_from_partition for tensor weights."""
    fam = weight.algebra.family
    rank = weight.algebra.rank
    labels = list(weight.coords)
    if fam == "B":
        if labels[rank - 1] % 2:
            raise ValueError("spinor weight has no partition")
        labels[rank - 1] //= 2
    elif fam == "D":
        if labels[rank - 1] or labels[rank - 2]:
            raise ValueError("fork-node labels are outside the tensor range")
    elif fam != "C":
        raise ValueError("partition weights exist only for the B, C and D families")
    rows = []
    running = 0
    for c in reversed(labels):
        running += c
        rows.append(running)
    rows.reverse()
    return tuple(r for r in rows if r)
