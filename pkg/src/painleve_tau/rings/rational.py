"""Reduced quotients of univariate polynomials."""

from __future__ import annotations

from fractions import Fraction

from ..errors import VariableMismatchError
from ..scalars import as_scalar
from . import _dense
from .poly import LaurentPoly, Poly


def _as_poly_pair(num, den):
    """Turn Laurent numerator/denominator into ordinary zeta polynomials."""
    if isinstance(num, LaurentPoly) or isinstance(den, LaurentPoly):
        num = num if isinstance(num, LaurentPoly) else _lift(num)
        den = den if isinstance(den, LaurentPoly) else _lift(den)
        k = num.lowest - den.lowest
        n = Poly._make("zeta", num.coeffs)
        d = Poly._make("zeta", den.coeffs)
        if k > 0:
            n = n * Poly.monomial("zeta", k)
        elif k < 0:
            d = d * Poly.monomial("zeta", -k)
        return n, d
    return num, den


def _lift(x):
    if isinstance(x, Poly):
        return x.to_laurent()
    return LaurentPoly.const(x)


class RationalFunction:
    """``num/den`` with gcd(num, den) = 1 and a monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if den is None:
            if isinstance(num, LaurentPoly):
                den = LaurentPoly.const(1)
            elif isinstance(num, Poly):
                den = Poly.const(num.var, 1)
            else:
                raise TypeError("a bare scalar needs a variable; use RationalFunction.const")
        num, den = _as_poly_pair(num, den)
        if not isinstance(num, Poly):
            num = Poly.const(den.var, num)
        if not isinstance(den, Poly):
            den = Poly.const(num.var, den)
        if num.var != den.var:
            raise VariableMismatchError(f"{num.var} vs {den.var}")
        self.num, self.den = rf_normalize_pair(num, den)

    @classmethod
    def _make(cls, num, den):
        obj = object.__new__(cls)
        obj.num, obj.den = num, den
        return obj

    @classmethod
    def const(cls, var, c):
        return cls._make(Poly.const(var, c), Poly.const(var, 1))

    @classmethod
    def gen(cls, var):
        return cls._make(Poly.gen(var), Poly.const(var, 1))

    @property
    def var(self):
        return self.num.var

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self):
        return not self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return f"RationalFunction({self.num!r}, {self.den!r})"

    def __str__(self):
        if self.den.degree == 0:
            return str(self.num)
        return f"({self.num}) / ({self.den})"

    # --------------------------------------------------------------- arithmetic
    def _coerce(self, other):
        if isinstance(other, RationalFunction):
            if other.var != self.var:
                raise VariableMismatchError(f"{self.var} vs {other.var}")
            return other
        if isinstance(other, Poly):
            if other.var != self.var:
                raise VariableMismatchError(f"{self.var} vs {other.var}")
            return RationalFunction._make(other, Poly.const(self.var, 1))
        if isinstance(other, LaurentPoly):
            if self.var != "zeta":
                raise VariableMismatchError(f"{self.var} vs zeta")
            return RationalFunction(other)
        try:
            c = as_scalar(other)
        except TypeError:
            return None
        return RationalFunction._make(Poly.const(self.var, c), Poly.const(self.var, 1))

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b, c, d = self.num, self.den, o.num, o.den
        if b.degree == 0 and d.degree == 0:
            return RationalFunction._make(a + c, b)
        g = _gcd(b, d)
        if g.degree == 0:
            return RationalFunction._make(a * d + b * c, b * d)
        b1, d1 = b.exquo(g), d.exquo(g)
        t = a * d1 + c * b1
        if t.is_zero():
            return RationalFunction.const(self.var, 0)
        g2 = _gcd(t, g)
        if g2.degree > 0:
            t = t.exquo(g2)
            d = d.exquo(g2)
        return RationalFunction._make(t, b1 * d)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction._make(-self.num, self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b, c, d = self.num, self.den, o.num, o.den
        if a.is_zero() or c.is_zero():
            return RationalFunction.const(self.var, 0)
        g1 = _gcd(a, d)
        g2 = _gcd(c, b)
        if g1.degree > 0:
            a, d = a.exquo(g1), d.exquo(g1)
        if g2.degree > 0:
            c, b = c.exquo(g2), b.exquo(g2)
        return _monic_den(a * c, b * d)

    __rmul__ = __mul__

    def reciprocal(self) -> "RationalFunction":
        if self.is_zero():
            raise ZeroDivisionError("reciprocal of the zero rational function")
        return _monic_den(self.den, self.num)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.reciprocal()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.reciprocal()

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.reciprocal() ** (-e)
        # gcd(num, den) = 1 is preserved by powers
        return RationalFunction._make(self.num**e, self.den**e)

    def exquo(self, other):
        return self / other

    def derivative(self) -> "RationalFunction":
        """Derivative with respect to the function's own variable."""
        a, b = self.num, self.den
        if b.degree == 0:
            return RationalFunction._make(a.derivative(), b)
        # (a/b)' = (a'b - ab')/b^2; with b = g*h, g = gcd(b, b') the result
        # has denominator b*h up to a final gcd with the numerator
        db = b.derivative()
        g = _gcd(b, db)
        h = b.exquo(g)
        num = a.derivative() * h - a * db.exquo(g)
        return RationalFunction(num, b * h)

    def d_dz(self) -> "RationalFunction":
        d = self.derivative()
        if self.var != "zeta":
            return d
        # d/dz = 1/(6 zeta^2) d/dzeta
        return d * RationalFunction._make(Poly.const("zeta", Fraction(1, 6)), Poly.monomial("zeta", 2))

    def __call__(self, x):
        return self.num(x) / self.den(x)

    def map_coeffs(self, f) -> "RationalFunction":
        return RationalFunction(self.num.map_coeffs(f), self.den.map_coeffs(f))


def _gcd(a: Poly, b: Poly) -> Poly:
    if a.degree == 0 or b.degree == 0:
        return Poly.const(a.var, 1)
    return Poly._make(a.var, _dense.gcd(a.coeffs, b.coeffs))


def _monic_den(num: Poly, den: Poly) -> RationalFunction:
    lc = den.leading
    if lc != 1:
        inv = 1 / lc
        num, den = num * inv, den * inv
    return RationalFunction._make(num, den)


def rf_normalize_pair(num: Poly, den: Poly):
    if den.is_zero():
        raise ZeroDivisionError("rational function with zero denominator")
    if num.is_zero():
        return Poly.const(num.var, 0), Poly.const(num.var, 1)
    g = _gcd(num, den)
    if g.degree > 0:
        num, den = num.exquo(g), den.exquo(g)
    r = _monic_den(num, den)
    return r.num, r.den


def rf_normalize(num, den) -> RationalFunction:
    return RationalFunction(num, den)
