"""Permutation, tableau and inversion-sequence statistics with exhaustive verification."""

__version__ = "0.1.0"
