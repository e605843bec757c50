"""Laurent polynomials in zeta times a gauge factor.

A :class:`GaugedFunction` is ``body(zeta) * zeta**power * exp(e2*zeta^2 + e4*zeta^4)``.
``power`` is kept in ``[0, 1)``; its integer part always lives in ``body``.
Half-integer powers are the normal case (``half_power`` is ``2*power``); the
tau functions of the Painleve III family additionally need twenty-fourths,
so the exponent is an exact Fraction rather than a half-integer.
"""

from __future__ import annotations

import math
from fractions import Fraction

from ..errors import GaugeMismatchError
from ..scalars import as_scalar
from .poly import LaurentPoly, Poly
from .rational import RationalFunction


class GaugedFunction:
    __slots__ = ("body", "power", "e2", "e4")

    def __init__(self, body, power=0, e2=0, e4=0):
        if isinstance(body, Poly):
            body = body.to_laurent()
        elif not isinstance(body, LaurentPoly):
            body = LaurentPoly.const(body)
        power = Fraction(power)
        k = math.floor(power)
        self.body = body.shift(k)
        self.power = power - k
        self.e2 = as_scalar(e2)
        self.e4 = as_scalar(e4)

    @classmethod
    def from_half_power(cls, body, r: int, e2=0, e4=0):
        return cls(body, Fraction(r, 2), e2, e4)

    @property
    def half_power(self) -> int:
        r = 2 * self.power
        if r.denominator != 1:
            raise ValueError(f"zeta exponent {self.power} is not a half-integer")
        return int(r)

    @property
    def gauge(self):
        return (self.power, self.e2, self.e4)

    def is_zero(self) -> bool:
        return self.body.is_zero()

    def __bool__(self):
        return not self.body.is_zero()

    def __eq__(self, other):
        if not isinstance(other, GaugedFunction):
            return NotImplemented
        if self.is_zero() and other.is_zero():
            return True
        return self.body == other.body and self.gauge == other.gauge

    def __hash__(self):
        return hash((self.body, self.gauge))

    def __repr__(self):
        return f"GaugedFunction({self.body!r}, power={self.power}, e2={self.e2}, e4={self.e4})"

    def __str__(self):
        return f"[{self.body}] * zeta^({self.power}) * exp(({self.e2})*zeta^2 + ({self.e4})*zeta^4)"

    def with_body(self, body) -> "GaugedFunction":
        return GaugedFunction(body, self.power, self.e2, self.e4)

    def _check(self, other: "GaugedFunction"):
        # the zero function is compatible with every gauge
        if self.is_zero() or other.is_zero():
            return
        if self.gauge != other.gauge:
            raise GaugeMismatchError(f"gauge {self.gauge} vs {other.gauge}")

    def __add__(self, other):
        if not isinstance(other, GaugedFunction):
            return NotImplemented
        self._check(other)
        base = other if self.is_zero() else self
        return base.with_body(self.body + other.body)

    def __sub__(self, other):
        if not isinstance(other, GaugedFunction):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return self.with_body(-self.body)

    def __mul__(self, other):
        if isinstance(other, GaugedFunction):
            return GaugedFunction(
                self.body * other.body,
                self.power + other.power,
                self.e2 + other.e2,
                self.e4 + other.e4,
            )
        if isinstance(other, (LaurentPoly, Poly)):
            return self.with_body(self.body * other)
        try:
            c = as_scalar(other)
        except TypeError:
            return NotImplemented
        return self.with_body(self.body * c)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            return NotImplemented
        return GaugedFunction(self.body**e, self.power * e, self.e2 * e, self.e4 * e)

    def gauge_log_derivative(self) -> LaurentPoly:
        """``g'/g`` for the gauge factor g, derivative in z."""
        return LaurentPoly.from_terms(
            {
                -3: self.power / 6,
                -1: self.e2 / 3,
                1: 2 * self.e4 / 3,
            }
        )

    def d_dz(self) -> "GaugedFunction":
        return self.with_body(self.body.d_dz() + self.body * self.gauge_log_derivative())

    def log_derivative(self):
        """``f'/f`` as a rational function of zeta."""
        return RationalFunction(self.d_dz().body) / RationalFunction(self.body)

    def gauge_factor(self) -> "GaugedFunction":
        return self.with_body(LaurentPoly.const(1))

    def __call__(self, zeta: float) -> float:
        """Numeric value at a positive real zeta (floating point)."""
        zeta = float(zeta)
        b = sum(float(c) * zeta ** (self.body.lowest + i) for i, c in enumerate(self.body.coeffs))
        return b * zeta ** float(self.power) * math.exp(float(self.e2) * zeta**2 + float(self.e4) * zeta**4)


def scalar_gauge(c=1) -> GaugedFunction:
    return GaugedFunction(LaurentPoly.const(c))


class GaugedRatio:
    """A quotient ``num/den`` of gauged functions, kept unevaluated.

    Two ratios are equal when their cross products agree.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: GaugedFunction, den: GaugedFunction):
        if den.is_zero():
            raise ZeroDivisionError("gauged ratio with zero denominator")
        self.num, self.den = num, den

    def __eq__(self, other):
        if isinstance(other, GaugedFunction):
            other = GaugedRatio(other, scalar_gauge(1))
        if not isinstance(other, GaugedRatio):
            return NotImplemented
        lhs, rhs = self.num * other.den, other.num * self.den
        if lhs.is_zero() or rhs.is_zero():
            return lhs.is_zero() and rhs.is_zero()
        return lhs == rhs

    __hash__ = None

    def __repr__(self):
        return f"GaugedRatio({self.num!r}, {self.den!r})"

    def __str__(self):
        return f"({self.num}) / ({self.den})"

    def reciprocal(self) -> "GaugedRatio":
        return GaugedRatio(self.den, self.num)
