"""Exact universal Casimir eigenvalues for simple Lie algebras."""

__version__ = "0.1.0"
