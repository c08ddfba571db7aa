"""Exact computations for degenerate 3-dimensional Sklyanin algebras."""

__version__ = "0.1.0"
