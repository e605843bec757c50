"""Gauged eigenfunctions, Wronskians and tau functions on the zeta side."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from ..rings import GaugedFunction, GaugedRatio, LaurentPoly, wronskian
from .coefficients import entry_W
from .profiles import CANONICAL, get_profile

# sigma_0 = zeta^(-5/24) exp(-9/8 zeta^4)
SIGMA0 = GaugedFunction(LaurentPoly.const(1), Fraction(-5, 24), 0, Fraction(-9, 8))


def gen_eigenfunction_psi(n: int, profile=CANONICAL) -> GaugedFunction:
    """psi_n = zeta^(1/2) exp(-3/2 delta zeta^2) W_n."""
    if n == 0:
        raise ValueError("psi_n is defined for n != 0")
    delta = 1 if n > 0 else -1
    return GaugedFunction(entry_W(n, profile), Fraction(1, 2), Fraction(-3, 2) * delta, 0)


@lru_cache(maxsize=None)
def theta(n: int, profile=CANONICAL) -> GaugedFunction:
    """theta_n = Wr(psi_delta, ..., psi_n); theta_0 = 1."""
    if n == 0:
        return GaugedFunction(1)
    profile = get_profile(profile)
    delta = 1 if n > 0 else -1
    return wronskian([gen_eigenfunction_psi(delta * j, profile) for j in range(1, abs(n) + 1)])


def sigma(n: int, profile=CANONICAL) -> GaugedFunction:
    return SIGMA0 * theta(n, profile)


def phi(n: int, profile=CANONICAL) -> GaugedRatio:
    """phi_n = theta_{n+1}/theta_n."""
    return GaugedRatio(theta(n + 1, profile), theta(n, profile))


def phi_tilde(n: int, profile=CANONICAL) -> GaugedRatio:
    """theta_{n-1}/theta_n, the second eigenfunction for V_n."""
    return GaugedRatio(theta(n - 1, profile), theta(n, profile))


def gauged_objects(n: int, profile=CANONICAL):
    """(theta_n, sigma_n, phi_n)."""
    return theta(n, profile), sigma(n, profile), phi(n, profile)
