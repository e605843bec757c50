"""Univariate polynomials and Laurent polynomials with exact coefficients."""

from __future__ import annotations

from fractions import Fraction

from ..errors import IntegrityError, VariableMismatchError
from ..scalars import as_scalar
from . import _dense

VARIABLES = ("x", "z", "s", "zeta")


def _check_var(var):
    if var not in VARIABLES:
        raise ValueError(f"unknown variable tag {var!r}")
    return var


class Poly:
    """Ordinary polynomial in one tagged variable (``x``, ``z``, ``s`` or ``zeta``).

    Coefficients are ascending; the zero polynomial has no coefficients.
    Arithmetic between polynomials in different variables raises
    :class:`VariableMismatchError`.
    """

    __slots__ = ("var", "coeffs")

    def __init__(self, var: str, coeffs=()):
        self.var = _check_var(var)
        self.coeffs = _dense.trim([as_scalar(c) for c in coeffs])

    @classmethod
    def _make(cls, var, coeffs):
        obj = object.__new__(cls)
        obj.var = var
        obj.coeffs = coeffs
        return obj

    @classmethod
    def const(cls, var, c):
        return cls(var, [c])

    @classmethod
    def monomial(cls, var, k, c=1):
        return cls(var, [0] * k + [c])

    @classmethod
    def gen(cls, var):
        return cls.monomial(var, 1)

    # ------------------------------------------------------------------ queries
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self):
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def coeff(self, k):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.var == other.var and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == _dense.trim([Fraction(other)])
        return NotImplemented

    def __hash__(self):
        return hash((self.var, self.coeffs))

    def __repr__(self):
        return f"Poly({self.var!r}, {[str(c) for c in self.coeffs]})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if k == 0 else (self.var if k == 1 else f"{self.var}^{k}")
            if not mono:
                terms.append(f"({c})")
            elif c == 1:
                terms.append(mono)
            else:
                terms.append(f"({c})*{mono}")
        return " + ".join(reversed(terms))

    # --------------------------------------------------------------- arithmetic
    def _other(self, other):
        if isinstance(other, Poly):
            if other.var != self.var:
                raise VariableMismatchError(f"{self.var} vs {other.var}")
            return other.coeffs
        if isinstance(other, LaurentPoly):
            return None
        try:
            c = as_scalar(other)
        except TypeError:
            return None
        return _dense.trim([c])

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return Poly._make(self.var, _dense.add(self.coeffs, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return Poly._make(self.var, _dense.sub(self.coeffs, o))

    def __rsub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return Poly._make(self.var, _dense.sub(o, self.coeffs))

    def __neg__(self):
        return Poly._make(self.var, _dense.neg(self.coeffs))

    def __mul__(self, other):
        if isinstance(other, Poly):
            if other.var != self.var:
                raise VariableMismatchError(f"{self.var} vs {other.var}")
            return Poly._make(self.var, _dense.mul(self.coeffs, other.coeffs))
        if isinstance(other, LaurentPoly):
            return NotImplemented
        try:
            c = as_scalar(other)
        except TypeError:
            return NotImplemented
        return Poly._make(self.var, _dense.scale(self.coeffs, c))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            return NotImplemented
        result = Poly._make(self.var, (Fraction(1),))
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __truediv__(self, other):
        # scalar division only; polynomial quotients go through exquo/divmod
        if isinstance(other, (Poly, LaurentPoly)):
            return NotImplemented
        c = as_scalar(other)
        return Poly._make(self.var, _dense.scale(self.coeffs, 1 / c))

    def __divmod__(self, other):
        o = self._other(other)
        q, r = _dense.divmod_(self.coeffs, o)
        return Poly._make(self.var, q), Poly._make(self.var, r)

    def exquo(self, other) -> "Poly":
        """Exact quotient; raises IntegrityError if ``other`` does not divide."""
        o = self._other(other)
        return Poly._make(self.var, _dense.exquo(self.coeffs, o))

    def monic(self) -> "Poly":
        return Poly._make(self.var, _dense.monic(self.coeffs))

    def derivative(self) -> "Poly":
        """Derivative with respect to the polynomial's own variable."""
        return Poly._make(self.var, _dense.deriv(self.coeffs))

    def __call__(self, x):
        return _dense.evaluate(self.coeffs, x)

    def map_coeffs(self, f) -> "Poly":
        return Poly(self.var, [f(c) for c in self.coeffs])

    def rename(self, var: str) -> "Poly":
        return Poly._make(_check_var(var), self.coeffs)

    def substitute_power(self, var: str, scale, power: int) -> "Poly":
        """Return ``p(scale * var**power)`` as a polynomial in ``var``."""
        out = [Fraction(0)] * (power * self.degree + 1) if self.coeffs else []
        s = as_scalar(scale)
        sk = Fraction(1)
        for k, c in enumerate(self.coeffs):
            out[power * k] = c * sk
            sk = sk * s
        return Poly(var, out)

    def to_laurent(self) -> "LaurentPoly":
        if self.var != "zeta":
            raise VariableMismatchError("only zeta polynomials embed as Laurent polynomials")
        return LaurentPoly._make(0, self.coeffs)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd (the gcd of two zero polynomials is zero)."""
    if a.var != b.var:
        raise VariableMismatchError(f"{a.var} vs {b.var}")
    return Poly._make(a.var, _dense.gcd(a.coeffs, b.coeffs))


class LaurentPoly:
    """Laurent polynomial in zeta: ``sum coeffs[i] * zeta**(lowest + i)``.

    The first and last stored coefficients are non-zero; the zero Laurent
    polynomial is stored as ``lowest=0, coeffs=()``.
    """

    __slots__ = ("lowest", "coeffs")
    var = "zeta"

    def __init__(self, lowest: int = 0, coeffs=()):
        self._set(lowest, _dense.trim([as_scalar(c) for c in coeffs]))

    def _set(self, lowest, coeffs):
        k = 0
        while k < len(coeffs) and not coeffs[k]:
            k += 1
        if k == len(coeffs):
            self.lowest, self.coeffs = 0, ()
        else:
            self.lowest, self.coeffs = lowest + k, tuple(coeffs[k:])

    @classmethod
    def _make(cls, lowest, coeffs):
        obj = object.__new__(cls)
        obj._set(lowest, coeffs)
        return obj

    @classmethod
    def monomial(cls, k: int, c=1):
        return cls(k, [c])

    @classmethod
    def const(cls, c):
        return cls(0, [c])

    @classmethod
    def from_terms(cls, terms: dict):
        """Build from ``{exponent: coefficient}``."""
        terms = {k: as_scalar(v) for k, v in terms.items() if v}
        if not terms:
            return cls()
        lo, hi = min(terms), max(terms)
        out = [Fraction(0)] * (hi - lo + 1)
        for k, v in terms.items():
            out[k - lo] = v
        return cls(lo, out)

    # ------------------------------------------------------------------ queries
    @property
    def highest(self) -> int:
        return self.lowest + len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def coeff(self, k):
        i = k - self.lowest
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def terms(self):
        return {self.lowest + i: c for i, c in enumerate(self.coeffs) if c}

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self.lowest == other.lowest and self.coeffs == other.coeffs
        if isinstance(other, Poly) and other.var == "zeta":
            return self == other.to_laurent()
        if isinstance(other, (int, Fraction)):
            return self == LaurentPoly.const(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.lowest, self.coeffs))

    def __repr__(self):
        return f"LaurentPoly({self.lowest}, {[str(c) for c in self.coeffs]})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k, c in sorted(self.terms().items(), reverse=True):
            terms.append(f"({c})" if k == 0 else f"({c})*zeta^{k}")
        return " + ".join(terms)

    # --------------------------------------------------------------- arithmetic
    def _other(self, other):
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, Poly):
            if other.var != "zeta":
                raise VariableMismatchError(f"zeta vs {other.var}")
            return other.to_laurent()
        try:
            return LaurentPoly._make(0, _dense.trim([as_scalar(other)]))
        except TypeError:
            return None

    @staticmethod
    def _align(a, b):
        lo = min(a.lowest, b.lowest) if a.coeffs and b.coeffs else (a.lowest if a.coeffs else b.lowest)
        ca = (Fraction(0),) * (a.lowest - lo) + a.coeffs if a.coeffs else ()
        cb = (Fraction(0),) * (b.lowest - lo) + b.coeffs if b.coeffs else ()
        return lo, ca, cb

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        lo, a, b = self._align(self, o)
        return LaurentPoly._make(lo, _dense.add(a, b))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        lo, a, b = self._align(self, o)
        return LaurentPoly._make(lo, _dense.sub(a, b))

    def __rsub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return LaurentPoly._make(self.lowest, _dense.neg(self.coeffs))

    def __mul__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return LaurentPoly._make(self.lowest + o.lowest, _dense.mul(self.coeffs, o.coeffs))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (Poly, LaurentPoly)):
            return NotImplemented
        c = as_scalar(other)
        return LaurentPoly._make(self.lowest, _dense.scale(self.coeffs, 1 / c))

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            if len(self.coeffs) != 1:
                raise IntegrityError("only monomials have Laurent inverses")
            return LaurentPoly._make(-self.lowest, (1 / self.coeffs[0],)) ** (-e)
        result = LaurentPoly.const(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by zeta**k."""
        if not self.coeffs:
            return self
        return LaurentPoly._make(self.lowest + k, self.coeffs)

    def exquo(self, other) -> "LaurentPoly":
        o = self._other(other)
        if not o.coeffs:
            raise ZeroDivisionError("Laurent division by zero")
        if not self.coeffs:
            return self
        q = _dense.exquo(self.coeffs, o.coeffs)
        return LaurentPoly._make(self.lowest - o.lowest, q)

    def derivative_zeta(self) -> "LaurentPoly":
        if not self.coeffs:
            return self
        lo = self.lowest
        return LaurentPoly._make(lo - 1, _dense.trim([c * (lo + i) for i, c in enumerate(self.coeffs)]))

    def d_dz(self) -> "LaurentPoly":
        """Derivative in z = 2*zeta**3, i.e. (1/(6 zeta^2)) d/dzeta."""
        if not self.coeffs:
            return self
        lo = self.lowest
        return LaurentPoly._make(
            lo - 3, _dense.trim([c * Fraction(lo + i, 6) for i, c in enumerate(self.coeffs)])
        )

    def __call__(self, x):
        v = _dense.evaluate(self.coeffs, x)
        return v * x**self.lowest if self.lowest >= 0 else v / x ** (-self.lowest)

    def map_coeffs(self, f) -> "LaurentPoly":
        return LaurentPoly(self.lowest, [f(c) for c in self.coeffs])

    def to_poly(self) -> Poly:
        if self.coeffs and self.lowest < 0:
            raise IntegrityError(f"negative power zeta^{self.lowest} in a polynomial")
        return Poly._make("zeta", (Fraction(0),) * self.lowest + self.coeffs if self.coeffs else ())

    def split(self):
        """Return ``(k, p)`` with ``self == zeta**k * p`` and ``p(0) != 0``."""
        return self.lowest, Poly._make("zeta", self.coeffs)
