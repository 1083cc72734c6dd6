"""Second-Casimir spectra of so(2n)/sp(2n) in corner coordinates.

A Young diagram is encoded by its corner profile (A, B): A lists the distinct
column heights ascending, B the distinct row lengths ascending, with the
implicit A0 = B0 = 0.  Conjugating the diagram swaps A and B.

For each family the Perelomov-Popov generating function is a rational
function of z whose Laurent expansion around z = 0 encodes the Casimir
spectrum with the rank n kept symbolic.  The raw expansion starts at z^-1
and carries a profile-independent offset in every coefficient, so the
calibrated p-th eigenvalue is defined as

    C_p(profile) = [z^p](empty-profile series) - [z^p](profile series)

which is zero for the trivial representation by construction and is pinned
against exact oracles by the adjoint profile (8n - 8 for so) and by concrete
root-data eigenvalues in the tests; see the series-calibration notes in the
README.

These spectra are in the fundamental-trace normalization; dividing by 2 (so)
or 4 (sp) converts to the long-root-squared-2 normalization used by the
rest of the library.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exact.polynomial import Polynomial
from .exact.series import LaurentSeries, series_from_linear_factors

FAMILIES = ("so", "sp")

NORMALIZATION_FACTOR = {"so": Fraction(2), "sp": Fraction(4)}

Entry = int | Polynomial

_DIAGRAM_RE = re.compile(r"^\[\s*(\d+(\s*,\s*\d+)*)?\s*\]$")


class ScopeError(ValueError):
    """A series-level duality check outside the range where it is asserted."""


@dataclass(frozen=True)
class YoungDiagram:
    rows: tuple[int, ...]

    def __post_init__(self):
        if any(r <= 0 for r in self.rows):
            raise ValueError("row lengths must be positive")
        if list(self.rows) != sorted(self.rows, reverse=True):
            raise ValueError("row lengths must be weakly decreasing")

    @classmethod
    def parse(cls, text: str) -> "YoungDiagram":
        if not _DIAGRAM_RE.match(text.strip()):
            raise ValueError(f"cannot parse diagram {text!r}; expected e.g. [2,1,1]")
        inner = text.strip()[1:-1].strip()
        rows = tuple(int(x) for x in inner.split(",")) if inner else ()
        return cls(rows)

    @property
    def size(self) -> int:
        return sum(self.rows)

    @property
    def is_rectangular(self) -> bool:
        return len(set(self.rows)) <= 1

    def conjugate(self) -> "YoungDiagram":
        if not self.rows:
            return self
        cols = tuple(
            sum(1 for r in self.rows if r > i) for i in range(self.rows[0])
        )
        return YoungDiagram(cols)

    def __str__(self):
        return "[" + ",".join(str(r) for r in self.rows) + "]"


def conjugate(diagram: YoungDiagram) -> YoungDiagram:
    return diagram.conjugate()


def _strictly_increasing(values: tuple[Entry, ...]) -> bool:
    concrete = [v for v in values if isinstance(v, int)]
    if any(v <= 0 for v in concrete):
        return False
    return all(x < y for x, y in zip(concrete, concrete[1:]))


@dataclass(frozen=True)
class ABProfile:
    """Corner coordinates of a diagram: a = column heights, b = row lengths.

    Both ascending, both of length k (the corner count); entries may be
    polynomials for symbolic families, in which case ordering is not checked.
    """

    a: tuple[Entry, ...]
    b: tuple[Entry, ...]

    def __post_init__(self):
        if len(self.a) != len(self.b):
            raise ValueError("corner coordinate lists must have equal length")
        if not _strictly_increasing(self.a) or not _strictly_increasing(self.b):
            raise ValueError("corner coordinates must be strictly increasing positive values")

    @property
    def k(self) -> int:
        return len(self.a)

    def height(self, i: int) -> Entry:
        """A_i with the implicit A_0 = 0."""
        return 0 if i == 0 else self.a[i - 1]

    def width(self, i: int) -> Entry:
        """B_i with the implicit B_0 = 0."""
        return 0 if i == 0 else self.b[i - 1]

    def swap(self) -> "ABProfile":
        return ABProfile(self.b, self.a)

    @classmethod
    def parse(cls, text: str) -> "ABProfile":
        m = re.match(r"^A=\[([^\]]*)\];B=\[([^\]]*)\]$", text.strip())
        if not m:
            raise ValueError(f"cannot parse profile {text!r}; expected A=[..];B=[..]")
        def ints(chunk: str) -> tuple[int, ...]:
            chunk = chunk.strip()
            return tuple(int(x) for x in chunk.split(",")) if chunk else ()
        return cls(ints(m.group(1)), ints(m.group(2)))

    def __str__(self):
        a = ",".join(str(x) for x in self.a)
        b = ",".join(str(x) for x in self.b)
        return f"A=[{a}];B=[{b}]"


def ab_from_diagram(diagram: YoungDiagram) -> ABProfile:
    """Corner profile of a diagram (empty diagram gives the empty profile).

    The distinct column heights are exactly the row counts at which the row
    length drops, so no conjugate needs to be built.
    """
    rows = diagram.rows
    if not rows:
        return ABProfile((), ())
    heights = []
    widths = []
    m = len(rows)
    for i in range(m):
        following = rows[i + 1] if i + 1 < m else 0
        if rows[i] > following:
            heights.append(i + 1)
            widths.append(rows[i])
    widths.reverse()
    return ABProfile(tuple(heights), tuple(widths))


def diagram_from_ab(profile: ABProfile) -> YoungDiagram:
    """Rows of length B_{k+1-j} repeated A_j - A_{j-1} times, j = 1..k."""
    rows: list[int] = []
    k = profile.k
    for j in range(1, k + 1):
        length = profile.width(k + 1 - j)
        count = profile.height(j) - profile.height(j - 1)
        if not isinstance(length, int) or not isinstance(count, int):
            raise ValueError("cannot rebuild a diagram from a symbolic profile")
        rows.extend([length] * count)
    return YoungDiagram(tuple(rows))


def _n() -> Polynomial:
    return Polynomial.var("n")


def raw_generating_series(family: str, profile: ABProfile, order: int) -> LaurentSeries:
    """Laurent expansion of the displayed generating product, starting at z^-1.

    Every factor has the shape (1 - c*z); the single pair of (2 - ...)
    factors shares the constant 2, which cancels after halving both c's.
    """
    if family not in FAMILIES:
        raise ValueError(f"family must be one of {FAMILIES}")
    n = _n()
    k = profile.k
    sign = -1 if family == "so" else 1
    # prefactor (1 - z*n)(1 - z*(4n +- 3)/2) / (z (1 - z*(n -+ 1))(1 - z*(2n -+ 1)))
    factors: list[tuple[int, Polynomial | Fraction | int]] = [
        (1, n),
        (1, (4 * n + 3 * sign) / 2),
        (-1, n + sign),
        (-1, 2 * n + sign),
    ]
    shift = 2 * n + sign  # 2n - 1 for so, 2n + 1 for sp
    if family == "so":
        for i in range(0, k + 1):
            factors.append((1, profile.width(i) - profile.height(k - i) + shift))
            factors.append((-1, profile.height(k - i) - profile.width(i)))
        for i in range(1, k + 1):
            factors.append((1, profile.height(k + 1 - i) - profile.width(i)))
            factors.append((-1, profile.width(i) - profile.height(k + 1 - i) + shift))
    else:
        for i in range(0, k + 1):
            factors.append((1, profile.width(k - i) - profile.height(i) + shift))
            factors.append((-1, profile.height(i) - profile.width(k - i)))
        for i in range(1, k + 1):
            factors.append((1, profile.height(i) - profile.width(k + 1 - i)))
            factors.append((-1, profile.width(k + 1 - i) - profile.height(i) + shift))
    return series_from_linear_factors(factors, 1, -1, order)


@lru_cache(maxsize=None)
def _reference_series(family: str, order: int) -> LaurentSeries:
    return raw_generating_series(family, ABProfile((), ()), order)


@dataclass(frozen=True)
class CasimirSpectrum:
    family: str
    profile: ABProfile
    series: LaurentSeries
    c2: Polynomial

    def calibrated(self, p: int) -> Polynomial:
        return _reference_series(self.family, self.series.truncation_order).coefficient(
            p
        ) - self.series.coefficient(p)


def pp_series(family: str, profile: ABProfile, order: int = 6) -> CasimirSpectrum:
    """Casimir spectrum of a profile, rank symbolic, exact through z**order."""
    if order < 3:
        raise ValueError("order must be at least 3 to reach the second Casimir")
    raw = raw_generating_series(family, profile, order)
    c2 = _reference_series(family, order).coefficient(2) - raw.coefficient(2)
    return CasimirSpectrum(family=family, profile=profile, series=raw, c2=c2)


def c2_closed(family: str, profile: ABProfile) -> Polynomial:
    """Closed form of the second Casimir in corner coordinates.

    The sums run over the corners; the boundary terms in A_0, B_0 are kept
    verbatim even though they vanish with A_0 = B_0 = 0.
    """
    if family not in FAMILIES:
        raise ValueError(f"family must be one of {FAMILIES}")
    n = _n()
    k = profile.k
    a = profile.height
    b = profile.width
    a0, b0 = a(0), b(0)
    ak, bk = a(k), b(k)
    total = Polynomial.zero()
    if family == "so":
        for i in range(1, k + 1):
            total = total + (
                4 * n * a(i) * (b(k + 1 - i) - b(k - i))
                + 2 * a(i) ** 2 * (b(k - i) - b(k + 1 - i))
                + 2 * a(i) * (b(k - i) - b(k + 1 - i))
                + 2 * b(i) ** 2 * (a(k + 1 - i) - a(k - i))
            )
        total = total + (
            -4 * n * a0 * bk
            + a0**2 * (2 * bk + 4 * b0)
            + 2 * a0 * (bk - b0)
            - b0**2 * (2 * ak + 4 * a0)
            - n * (a0 - b0)
            + 2 * n * (a0**2 + b0**2)
            + 2 * (b0**3 - a0**3)
            + Fraction(1, 2) * (a0 - b0)
        )
        return total
    for i in range(1, k + 1):
        total = total + (
            -4 * n * b(i) * (a(k + 1 - i) - a(k - i))
            + 2 * a(i) ** 2 * (b(k + 1 - i) - b(k - i))
            + 2 * b(i) ** 2 * (a(k - i) - a(k + 1 - i))
            + 2 * b(i) * (a(k - i) - a(k + 1 - i))
        )
    total = -total + (
        -4 * n * b0 * ak
        + a0**2 * (2 * bk + 4 * b0)
        - 2 * b0 * (ak - a0)
        - b0**2 * (2 * ak + 4 * a0)
        - n * (b0 - a0)
        + 2 * n * (a0**2 + b0**2)
        + Fraction(1, 2) * (a0 - b0)
        - 2 * (a0**3 - b0**3)
    )
    return total


def normalization_convert(family: str, value, direction: str):
    """Convert between the fundamental-trace and long-root-squared-2 scalings.

    direction "fund_to_ck" divides by the family factor (2 for so, 4 for sp);
    "ck_to_fund" multiplies.
    """
    factor = NORMALIZATION_FACTOR[family]
    if direction == "fund_to_ck":
        return value / factor
    if direction == "ck_to_fund":
        return value * factor
    raise ValueError(f"direction must be 'fund_to_ck' or 'ck_to_fund', got {direction!r}")


def duality_check_c2(profile: ABProfile) -> Polynomial:
    """so(2n) value plus the rank-negated sp value on the swapped profile.

    Zero for every profile: the second Casimir satisfies the full
    orthogonal/symplectic rank-negation duality.
    """
    so_value = c2_closed("so", profile)
    sp_value = c2_closed("sp", profile.swap())
    return so_value + sp_value.substitute({"n": -_n()})


def duality_check_series(
    diagram: YoungDiagram, order: int = 6, experimental: bool = False
) -> dict[int, Polynomial]:
    """Coefficient-wise residuals of the full spectrum duality.

    For a diagram d with conjugate d', compares the sp spectrum of d against
    the so spectrum of d' with z -> -z and n -> -n, after the common
    calibration.  The identity is asserted only for rectangular diagrams;
    other shapes are refused unless the experimental flag is set (their p = 2
    residual still vanishes, higher ones need not).
    """
    if order > 6:
        raise ValueError("series duality residuals are supported through order 6")
    if not diagram.is_rectangular and not experimental:
        raise ScopeError(
            f"diagram {diagram} is not rectangular; the full-series duality is only "
            "asserted for rectangles (pass experimental=True to compute anyway)"
        )
    sp_spec = pp_series("sp", ab_from_diagram(diagram), order)
    so_spec = pp_series("so", ab_from_diagram(diagram.conjugate()), order)
    minus_n = -_n()
    residuals: dict[int, Polynomial] = {}
    for p in range(1, order + 1):
        mirrored = so_spec.calibrated(p).substitute({"n": minus_n})
        if p % 2:
            mirrored = -mirrored
        residuals[p] = sp_spec.calibrated(p) + mirrored
    return residuals


def random_profiles(
    count: int, seed: int, max_corners: int = 4, max_entry: int = 10
) -> list[ABProfile]:
    """Deterministic sample of corner profiles for randomized identity checks."""
    rng = random.Random(seed)
    profiles = []
    for _ in range(count):
        k = rng.randint(1, max_corners)
        a = tuple(sorted(rng.sample(range(1, max_entry + 1), k)))
        b = tuple(sorted(rng.sample(range(1, max_entry + 1), k)))
        profiles.append(ABProfile(a, b))
    return profiles
