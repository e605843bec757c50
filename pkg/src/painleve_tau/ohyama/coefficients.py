"""The coefficient table A_{m,k} and the Wronskian entries W_n."""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from ..rings import LaurentPoly
from .profiles import CANONICAL, Profile, get_profile


class CoeffTable:
    """A_{m,k} for one profile, filled on demand and memoized.

    For m != 0 and delta = sign(m) the entries vanish beyond k = 2|m| and at
    k = 0; the top entry is (3a/2)^|m| c / |m|!, and lower ones follow from

        A_{m,k} = (3a/k) A_{m-delta,k-2} + (k+1)/3 * delta * A_{m,k+1}   (k >= 2)
        A_{m,1} = (2/3) delta A_{m,2}.
    """

    def __init__(self, profile: Profile):
        self.profile = profile
        self.a = profile.a
        self.c = profile.c
        self.table = {}

    def get(self, m: int, k: int):
        if k < 0:
            raise ValueError("k must be non-negative")
        key = (m, k)
        if key in self.table:
            return self.table[key]
        self._fill(m)
        return self.table.get(key, Fraction(0))

    __call__ = get

    def _fill(self, m: int):
        if (m, 0) in self.table:
            return
        if m == 0:
            self.table[(0, 0)] = self.c
            return
        delta = 1 if m > 0 else -1
        top = 2 * abs(m)
        self._fill(m - delta)
        a, c = self.a, self.c
        row = {top: (Fraction(3, 2) * a) ** abs(m) * c / factorial(abs(m))}
        for k in range(top - 1, 1, -1):
            row[k] = (3 * a / k) * self.get(m - delta, k - 2) + Fraction(k + 1, 3) * delta * row[k + 1]
        row[1] = Fraction(2, 3) * delta * row[2]
        row[0] = Fraction(0)
        for k, v in row.items():
            self.table[(m, k)] = v


_TABLES = {}


def coeff_table(profile=CANONICAL) -> CoeffTable:
    profile = get_profile(profile)
    if profile not in _TABLES:
        _TABLES[profile] = CoeffTable(profile)
    return _TABLES[profile]


def coeff_A(m: int, k: int, profile=CANONICAL):
    return coeff_table(profile).get(m, k)


def entry_W(n: int, profile=CANONICAL) -> LaurentPoly:
    """W_n = sum_k A_{|n|-1,k} (delta zeta^2)^k, a polynomial in zeta^2."""
    if n == 0:
        raise ValueError("W_n is defined for n != 0")
    delta = 1 if n > 0 else -1
    table = coeff_table(profile)
    m = abs(n) - 1
    terms = {2 * k: table.get(m, k) * delta**k for k in range(2 * m + 1)}
    return LaurentPoly.from_terms(terms)
