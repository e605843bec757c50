"""Algebraic solutions P_n, potentials V_n and the Backlund transformations."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from ..errors import IntegrityError
from ..rings import LaurentPoly, Poly, RationalFunction
from .gauged import theta
from .profiles import CANONICAL, get_profile
from .rho import rho, s_to_zeta

ZETA = RationalFunction.gen("zeta")
Z = RationalFunction(LaurentPoly.monomial(3, 2))  # z = 2 zeta^3
V0 = RationalFunction(LaurentPoly.from_terms({-6: Fraction(5, 144), -2: Fraction(-1, 4)}))


def _rf(p: Poly) -> RationalFunction:
    return RationalFunction(p.to_laurent())


@lru_cache(maxsize=None)
def algebraic_P(n: int, route: str = "recurrence") -> RationalFunction:
    """P_n as a rational function of zeta (rho's evaluated at s = 3 zeta^2)."""
    num = s_to_zeta(rho(n + 1, route)) * s_to_zeta(rho(n - 1, route))
    den = s_to_zeta(rho(n, route)) ** 2
    pre = LaurentPoly.monomial(-1, Fraction(1, 3)) if n % 2 else LaurentPoly.monomial(1)
    return RationalFunction(num.to_laurent() * pre, den.to_laurent())


def p3d7_residual(P: RationalFunction, beta) -> RationalFunction:
    """z P P'' - z P'^2 + P P' - P(2P^2 - beta) + z: the equation multiplied by z P."""
    d1 = P.d_dz()
    d2 = d1.d_dz()
    return Z * P * d2 - Z * d1 * d1 + P * d1 - P * (P * P * 2 - beta) + Z


def potential_from_P(P: RationalFunction, beta) -> RationalFunction:
    d1 = P.d_dz()
    return -(d1 * d1 - 1) / (P * P * 4) + (d1 - P * P * 2 + beta) / (Z * P * 2)


@lru_cache(maxsize=None)
def potential_V(n: int, route: str = "fromP", profile=CANONICAL) -> RationalFunction:
    if route == "fromP":
        return potential_from_P(algebraic_P(n), 2 * n)
    if route == "fromTheta":
        if n == 0:
            return V0
        return V0 + theta(n, get_profile(profile)).log_derivative().d_dz() * 2
    raise ValueError(f"unknown route {route!r}; choose fromP or fromTheta")


def y_pm(P: RationalFunction, sign: int) -> RationalFunction:
    """y_+- = (P' -+ 1)/(2P)."""
    return (P.d_dz() - sign) / (P * 2)


def backlund_alt(P: RationalFunction, sign: int) -> RationalFunction:
    """P_+- = P - d/dz (z y_+-)."""
    return P - (Z * y_pm(P, sign)).d_dz()


def backlund(P: RationalFunction, beta, sign: int) -> RationalFunction:
    """P_+- = z(-+P' + 1)/(2P^2) + (+-1 + beta)/(2P).

    The result is cross-checked against the Darboux form and an
    IntegrityError is raised when the two disagree (which happens exactly when
    P does not solve the equation with this beta).
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if P.is_zero():
        raise ZeroDivisionError("Backlund transformation of P = 0")
    d1 = P.d_dz()
    out = Z * (1 - d1 * sign) / (P * P * 2) + (sign + beta) / (P * 2)
    if out != backlund_alt(P, sign):
        raise IntegrityError("Backlund transformation disagrees with its Darboux form")
    return out


def eta(P: RationalFunction, V: RationalFunction) -> RationalFunction:
    return -P - Z * V / 2
