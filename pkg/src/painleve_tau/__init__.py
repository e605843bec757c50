"""Exact tau functions and rational/algebraic solutions of Painleve II and III (D7)."""

__version__ = "0.1.0"
