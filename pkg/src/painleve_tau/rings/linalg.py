"""Determinants and Wronskians over the exact rings."""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations

from ..errors import GaugeMismatchError
from .calculus import d_dz
from .gauged import GaugedFunction
from .poly import LaurentPoly, Poly
from .rational import RationalFunction


def _exact_div(a, b):
    if isinstance(a, (Poly, LaurentPoly)):
        return a.exquo(b)
    return a / b


def _is_zero(x) -> bool:
    return not x


def det_bareiss(matrix, one=Fraction(1)):
    """Fraction-free determinant.

    Entries must form an integral domain with exact division (``exquo`` for
    polynomials, ``/`` for fields). ``one`` is returned for the empty matrix.
    """
    n = len(matrix)
    if n == 0:
        return one
    m = [list(row) for row in matrix]
    sign = 1
    prev = None
    for k in range(n - 1):
        if _is_zero(m[k][k]):
            for r in range(k + 1, n):
                if not _is_zero(m[r][k]):
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return m[k][k] * 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            mik = m[i][k]
            row_i, row_k = m[i], m[k]
            for j in range(k + 1, n):
                v = pivot * row_i[j] - mik * row_k[j]
                row_i[j] = v if prev is None else _exact_div(v, prev)
        prev = pivot
    d = m[n - 1][n - 1]
    return -d if sign < 0 else d


def det_cofactor(matrix, one=Fraction(1)):
    """Leibniz expansion; only meant as a small-size oracle."""
    n = len(matrix)
    if n == 0:
        return one
    total = None
    for perm in permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = matrix[0][perm[0]]
        for i in range(1, n):
            term = term * matrix[i][perm[i]]
        if inversions % 2:
            term = -term
        total = term if total is None else total + term
    return total


def wronskian_matrix(entries):
    """Rows are successive z-derivatives of the entries."""
    n = len(entries)
    rows = [list(entries)]
    for _ in range(1, n):
        rows.append([d_dz(f) for f in rows[-1]])
    return rows


def _laurent_wronskian(bodies):
    rows = wronskian_matrix(bodies)
    # clear the negative zeta powers row by row, then work over zeta polynomials
    shift = 0
    poly_rows = []
    for row in rows:
        lows = [f.lowest for f in row if f]
        k = -min(lows) if lows else 0
        shift += k
        poly_rows.append([f.shift(k).to_poly() for f in row])
    d = det_bareiss(poly_rows, one=Poly.const("zeta", 1))
    return d.to_laurent().shift(-shift)


def wronskian(entries):
    """Wr(f_1, ..., f_n) with z-derivatives; the empty Wronskian is 1.

    Polynomials in ``x``/``z``/``s`` are differentiated in their own variable.
    Gauged entries must share one gauge ``g``; the result is ``g**n * Wr(bodies)``.
    """
    entries = list(entries)
    n = len(entries)
    if n == 0:
        return Fraction(1)
    first = entries[0]
    if isinstance(first, GaugedFunction):
        live = [f for f in entries if not f.is_zero()]
        gauge = live[0].gauge if live else first.gauge
        for f in live:
            if f.gauge != gauge:
                raise GaugeMismatchError(f"wronskian entries carry gauges {gauge} and {f.gauge}")
        power, e2, e4 = gauge
        body = _laurent_wronskian([f.body for f in entries])
        return GaugedFunction(body, power * n, e2 * n, e4 * n)
    if isinstance(first, LaurentPoly):
        return _laurent_wronskian(entries)
    if isinstance(first, Poly):
        var = first.var
        if var == "zeta":
            return _laurent_wronskian([f.to_laurent() for f in entries])
        return det_bareiss(wronskian_matrix(entries), one=Poly.const(var, 1))
    if isinstance(first, RationalFunction):
        return det_bareiss(wronskian_matrix(entries), one=RationalFunction.const(first.var, 1))
    raise TypeError(f"unsupported wronskian entry type {type(first).__name__}")
