"""Exact univariate rings used throughout the package."""

from .calculus import d_dz
from .gauged import GaugedFunction, GaugedRatio
from .linalg import det_bareiss, det_cofactor, wronskian
from .poly import VARIABLES, LaurentPoly, Poly, poly_gcd
from .rational import RationalFunction, rf_normalize

__all__ = [
    "VARIABLES",
    "GaugedFunction",
    "GaugedRatio",
    "LaurentPoly",
    "Poly",
    "RationalFunction",
    "d_dz",
    "det_bareiss",
    "det_cofactor",
    "poly_gcd",
    "rf_normalize",
    "wronskian",
]
