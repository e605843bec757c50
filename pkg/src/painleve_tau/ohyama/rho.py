"""Three independent constructions of the Ohyama polynomials rho_n(s)."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from ..errors import IntegrityError
from ..rings import LaurentPoly, Poly, wronskian
from ..scalars import ROOT4_3, nf_to_rational
from .coefficients import entry_W
from .profiles import CANONICAL, column_scale, get_profile

ROUTES = ("wronskian", "recurrence", "bc")

_ONE = Poly.const("s", 1)
_S = Poly.gen("s")


def _sign(n: int) -> int:
    return 1 if n > 0 else -1


def zeta_to_s(f: LaurentPoly) -> Poly:
    """Rewrite an even polynomial in zeta as a polynomial in s = 3 zeta^2."""
    if f.is_zero():
        return Poly("s", [])
    if f.lowest < 0:
        raise IntegrityError(f"negative power zeta^{f.lowest} where a polynomial was expected")
    coeffs = []
    for e in range(0, f.highest + 1):
        c = f.coeff(e)
        if e % 2:
            if c:
                raise IntegrityError(f"odd power zeta^{e} where a polynomial in zeta^2 was expected")
            continue
        coeffs.append(c / Fraction(3) ** (e // 2))
    return Poly("s", coeffs)


def s_to_zeta(p: Poly) -> Poly:
    """rho(s) -> rho(3 zeta^2)."""
    return p.substitute_power("zeta", 3, 2)


def _integral_rational(p: Poly) -> Poly:
    coeffs = []
    for c in p.coeffs:
        q = nf_to_rational(c)
        if q.denominator != 1:
            raise IntegrityError(f"non-integral coefficient {q} in an Ohyama polynomial")
        coeffs.append(q)
    return Poly("s", coeffs)


@lru_cache(maxsize=None)
def rho_wronskian(n: int, profile=CANONICAL) -> Poly:
    """rho_n from the Wronskian of W_delta, ..., W_n (z-derivatives).

    The Wronskian is multiplied by 3^(-1/4) zeta^((|n|-1)/2) for odd n and by
    zeta^(|n|/2) for even n.  For a non-canonical profile the columns are first
    rescaled to the canonical constants.
    """
    if n == 0:
        return _ONE
    profile = get_profile(profile)
    d = _sign(n)
    w = wronskian([entry_W(d * j, profile) for j in range(1, abs(n) + 1)])
    scale = column_scale(CANONICAL, n) / column_scale(profile, n)
    if n % 2:
        scale = scale / ROOT4_3
    w = (w * scale).shift(abs(n) // 2)
    return _integral_rational(zeta_to_s(w))


def _ohrec_lhs(r: Poly, n: int) -> Poly:
    d1 = r.derivative()
    d2 = d1.derivative()
    return (_S + n) * r * r - _S * r * d2 * 2 + _S * d1 * d1 * 2 - r * d1 * 2


@lru_cache(maxsize=None)
def rho_recurrence(n: int) -> Poly:
    """rho_n from the Toda-type recurrence, by exact division."""
    if n in (-1, 0, 1):
        return _ONE
    if n > 0:
        m = n - 1  # rho_n = rho_{m+1}
        lhs = _ohrec_lhs(rho_recurrence(m), m)
        if m % 2 == 0:
            lhs = lhs.exquo(_S)
        return lhs.exquo(rho_recurrence(m - 1))
    m = n + 1  # rho_n = rho_{m-1}
    lhs = _ohrec_lhs(rho_recurrence(m), m)
    if m % 2 == 0:
        lhs = lhs.exquo(_S)
    return lhs.exquo(rho_recurrence(m + 1))


def solve_first_order(A: Poly, B: Poly, R: Poly) -> Poly:
    """Polynomial N with N*A + N'*B = R, where deg B <= deg A.

    L(s^j) has degree j + deg A with leading coefficient lc(A), so N is
    found top-down like a long division; a non-zero remainder means there is
    no polynomial solution.
    """
    if A.is_zero() or B.degree > A.degree:
        raise ValueError("need deg B <= deg A and A != 0")
    da = A.degree
    if R.is_zero():
        return Poly(A.var, [])
    dn = R.degree - da
    if dn < 0:
        raise IntegrityError("right-hand side has lower degree than the operator allows")
    coeffs = [Fraction(0)] * (dn + 1)
    rem = R
    for j in range(dn, -1, -1):
        c = rem.coeff(j + da) / A.leading
        if c:
            coeffs[j] = c
            mono = Poly.monomial(A.var, j, c)
            rem = rem - (mono * A + mono.derivative() * B)
    if not rem.is_zero():
        raise IntegrityError("no polynomial solution of the first-order relation")
    return Poly(A.var, coeffs)


@lru_cache(maxsize=None)
def rho_bc(n: int) -> Poly:
    """rho_n from the Burchnall-Chaundy type relation, one first-order solve per step.

    Going up, ``rho_{m+1}`` solves N (rho_{m-1} + rho_{m-1}') - N' rho_{m-1} = rhs_m;
    going down, ``rho_{m-1}`` solves M (K - K') + M' K = rhs_m with K = rho_{m+1};
    rhs_m is s rho_m^2 for odd m and rho_m^2 for even m.
    """
    if n in (-1, 0, 1):
        return _ONE
    if n > 0:
        m = n - 1
        low, mid = rho_bc(m - 1), rho_bc(m)
        rhs = mid * mid * (_S if m % 2 else 1)
        return solve_first_order(low + low.derivative(), -low, rhs)
    m = n + 1
    high, mid = rho_bc(m + 1), rho_bc(m)
    rhs = mid * mid * (_S if m % 2 else 1)
    return solve_first_order(high - high.derivative(), high, rhs)


def rho(n: int, route: str = "recurrence", profile=CANONICAL) -> Poly:
    if route == "wronskian":
        return rho_wronskian(n, get_profile(profile))
    if route == "recurrence":
        return rho_recurrence(n)
    if route == "bc":
        return rho_bc(n)
    raise ValueError(f"unknown route {route!r}; choose from {ROUTES}")


def sign_symmetry_factor(n: int) -> int:
    """(-1)^(n^2/4) for even n, (-1)^((n^2-1)/4) for odd n."""
    return -1 if (n * n // 4) % 2 else 1


def reflect(p: Poly, n: int) -> Poly:
    """The right-hand side of the sign symmetry: +-rho_n(-s)."""
    return p.substitute_power("s", -1, 1) * sign_symmetry_factor(n)
