"""Conjugacy classes of small symmetric groups.

A class is labeled by its cycle type (a partition of m); the class size is
m! / prod_j j**c_j * c_j!  where c_j counts the parts equal to j.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from collections import Counter
from typing import Iterator

MAX_DEGREE = 8


@dataclass(frozen=True)
class CycleType:
    parts: tuple[int, ...]

    def __post_init__(self):
        if any(p <= 0 for p in self.parts):
            raise ValueError("cycle lengths must be positive")
        if list(self.parts) != sorted(self.parts, reverse=True):
            raise ValueError("cycle lengths must be weakly decreasing")

    @property
    def degree(self) -> int:
        return sum(self.parts)

    @property
    def num_cycles(self) -> int:
        return len(self.parts)

    @property
    def sum_of_squares(self) -> int:
        return sum(p * p for p in self.parts)

    @property
    def class_size(self) -> int:
        counts = Counter(self.parts)
        centralizer = 1
        for length, mult in counts.items():
            centralizer *= length**mult * math.factorial(mult)
        return math.factorial(self.degree) // centralizer

    @property
    def sign(self) -> int:
        return -1 if (self.degree - self.num_cycles) % 2 else 1


def partitions(m: int, _largest: int | None = None) -> Iterator[tuple[int, ...]]:
    """All partitions of m with weakly decreasing parts."""
    if m == 0:
        yield ()
        return
    cap = m if _largest is None else min(m, _largest)
    for first in range(cap, 0, -1):
        for rest in partitions(m - first, first):
            yield (first,) + rest


def symmetric_class_sizes(m: int) -> tuple[CycleType, ...]:
    """Conjugacy classes of S_m, largest cycles first; sizes sum to m!."""
    if not 1 <= m <= MAX_DEGREE:
        raise ValueError(f"degree must be between 1 and {MAX_DEGREE}, got {m}")
    return tuple(CycleType(p) for p in partitions(m))
