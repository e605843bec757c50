"""Exact scalars: rationals and the quartic field Q[y]/(y^4 - 3).

Rationals are plain :class:`fractions.Fraction` objects.  ``NFScalar`` holds
``r0 + r1*y + r2*y**2 + r3*y**3`` with ``y = 3**(1/4)``, so ``y**2`` is
``sqrt(3)``.  Both kinds mix freely in arithmetic; an ``NFScalar`` whose
irrational part vanishes compares equal to the corresponding Fraction.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational as _RationalABC

from .errors import IrrationalResidueError

__all__ = [
    "Fraction",
    "NFScalar",
    "SQRT3",
    "ROOT4_3",
    "as_scalar",
    "is_zero",
    "nf_arith",
    "nf_to_rational",
    "parse_rational",
    "rational_to_str",
    "scalar_from_json",
    "scalar_to_json",
]


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rational(x)
    if isinstance(x, _RationalABC):
        return Fraction(x.numerator, x.denominator)
    raise TypeError(f"not an exact rational: {x!r}")


class NFScalar:
    """Element of Q(3^(1/4)), stored as four Fractions in the power basis."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=(0,)):
        c = [Fraction(0)] * 4
        for i, v in enumerate(coeffs):
            v = _frac(v)
            if v:
                c[i % 4] += v * 3 ** (i // 4)
        self.coeffs = tuple(c)

    @classmethod
    def _raw(cls, c0, c1, c2, c3):
        obj = object.__new__(cls)
        obj.coeffs = (c0, c1, c2, c3)
        return obj

    @classmethod
    def rational(cls, x) -> "NFScalar":
        return cls._raw(_frac(x), Fraction(0), Fraction(0), Fraction(0))

    # ------------------------------------------------------------------ queries
    def is_rational(self) -> bool:
        _, c1, c2, c3 = self.coeffs
        return not (c1 or c2 or c3)

    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, NFScalar):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        return NotImplemented

    def __hash__(self):
        if self.is_rational():
            return hash(self.coeffs[0])
        return hash(self.coeffs)

    def __repr__(self):
        return f"NFScalar({[str(c) for c in self.coeffs]})"

    def __str__(self):
        names = ("", "*y", "*y^2", "*y^3")
        parts = [f"{c}{names[i]}" for i, c in enumerate(self.coeffs) if c]
        return " + ".join(parts) if parts else "0"

    def __float__(self):
        y = 3.0 ** 0.25
        return float(sum(float(c) * y**i for i, c in enumerate(self.coeffs)))

    # --------------------------------------------------------------- arithmetic
    @staticmethod
    def _coerce(other):
        if isinstance(other, NFScalar):
            return other
        if isinstance(other, (int, Fraction)):
            return NFScalar.rational(other)
        return None

    def __neg__(self):
        a, b, c, d = self.coeffs
        return NFScalar._raw(-a, -b, -c, -d)

    def __pos__(self):
        return self

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            a, b, c, d = self.coeffs
            return NFScalar._raw(a + other, b, c, d)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return NFScalar._raw(*(x + y for x, y in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            a, b, c, d = self.coeffs
            return NFScalar._raw(a - other, b, c, d)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return NFScalar._raw(*(x - y for x, y in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return NFScalar._raw(Fraction(0), Fraction(0), Fraction(0), Fraction(0))
            return NFScalar._raw(*(x * other for x in self.coeffs))
        if not isinstance(other, NFScalar):
            return NotImplemented
        out = [0, 0, 0, 0]
        # most values met in practice are monomials c*y^j: skip zero products
        for i, x in enumerate(self.coeffs):
            if not x:
                continue
            for j, y in enumerate(other.coeffs):
                if not y:
                    continue
                k = i + j
                if k >= 4:
                    out[k - 4] += 3 * x * y
                else:
                    out[k] += x * y
        return NFScalar._raw(*(Fraction(v) if isinstance(v, int) else v for v in out))

    __rmul__ = __mul__

    def conjugate_y(self) -> "NFScalar":
        """Image under y -> -y."""
        a, b, c, d = self.coeffs
        return NFScalar._raw(a, -b, c, -d)

    def norm(self) -> Fraction:
        """Field norm down to Q."""
        a, b, c, d = self.coeffs
        # x * x(-y) = (a + c y^2)^2 - y^2 (b + d y^2)^2 = A + C y^2
        A = a * a + 3 * c * c - 6 * b * d
        C = 2 * a * c - b * b - 3 * d * d
        return A * A - 3 * C * C

    def inverse(self) -> "NFScalar":
        if not self:
            raise ZeroDivisionError("NFScalar division by zero")
        a, b, c, d = self.coeffs
        if not (b or c or d):
            return NFScalar.rational(1 / a)
        A = a * a + 3 * c * c - 6 * b * d
        C = 2 * a * c - b * b - 3 * d * d
        n = A * A - 3 * C * C
        # 1/x = x(-y) * (A - C y^2) / n
        return self.conjugate_y() * NFScalar._raw(A / n, Fraction(0), -C / n, Fraction(0))

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                raise ZeroDivisionError("NFScalar division by zero")
            return NFScalar._raw(*(x / other for x in self.coeffs))
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.inverse() ** (-e)
        result = NFScalar.rational(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result


ROOT4_3 = NFScalar((0, 1))
SQRT3 = NFScalar((0, 0, 1))


def is_zero(x) -> bool:
    return not x


def as_scalar(x):
    """Coerce ints/strings to Fraction; pass Fractions and NFScalars through."""
    if isinstance(x, (Fraction, NFScalar)):
        return x
    return _frac(x)


def nf_arith(x, y, op: str):
    x = NFScalar._coerce(as_scalar(x))
    y = NFScalar._coerce(as_scalar(y))
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "div":
        return x / y
    raise ValueError(f"unknown op {op!r}")


def nf_to_rational(x) -> Fraction:
    """Return ``x`` as a Fraction, or raise if it has an irrational part."""
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    if not x.is_rational():
        raise IrrationalResidueError(x.coeffs)
    return x.coeffs[0]


def rational_to_str(q) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    text = text.strip()
    if "/" in text:
        p, q = text.split("/")
        return Fraction(int(p), int(q))
    return Fraction(int(text))


def scalar_to_json(x):
    if isinstance(x, NFScalar):
        return [rational_to_str(c) for c in x.coeffs]
    return rational_to_str(x)


def scalar_from_json(obj):
    if isinstance(obj, list):
        if len(obj) != 4:
            raise ValueError("NFScalar must serialize as 4 rationals")
        return NFScalar([parse_rational(s) for s in obj])
    return parse_rational(obj)
