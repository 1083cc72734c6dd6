"""Exact scalar, polynomial, series and cycle-type arithmetic."""

from .polynomial import Polynomial, PolyFraction, UnboundSymbolError
from .rational import Rational, format_rational, parse_rational, rat
from .series import LaurentSeries, series_from_linear_factors
from .symmetric import CycleType, partitions, symmetric_class_sizes

__all__ = [
    "CycleType",
    "LaurentSeries",
    "PolyFraction",
    "Polynomial",
    "Rational",
    "UnboundSymbolError",
    "format_rational",
    "parse_rational",
    "partitions",
    "rat",
    "series_from_linear_factors",
    "symmetric_class_sizes",
]
