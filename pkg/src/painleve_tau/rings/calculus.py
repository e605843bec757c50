"""Differentiation in the physical variable z."""

from __future__ import annotations

from .gauged import GaugedFunction
from .poly import LaurentPoly, Poly
from .rational import RationalFunction


def d_dz(f):
    """Exact z-derivative.

    zeta-based objects use ``z = 2 zeta**3``; polynomials in ``x``, ``z`` or
    ``s`` are differentiated in their own variable.
    """
    if isinstance(f, (LaurentPoly, GaugedFunction, RationalFunction)):
        return f.d_dz()
    if isinstance(f, Poly):
        if f.var == "zeta":
            return f.to_laurent().d_dz()
        return f.derivative()
    # constants
    return f * 0
