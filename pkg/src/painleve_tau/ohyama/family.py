"""A per-profile view of the whole family with observed degrees."""

from __future__ import annotations

from .gauged import phi, sigma, theta
from .profiles import CANONICAL, get_profile
from .rho import rho
from .solutions import algebraic_P, potential_V


class OhyamaFamily:
    """Convenience facade; the underlying constructions are memoized module-wide."""

    def __init__(self, profile=CANONICAL, route: str = "recurrence"):
        self.profile = get_profile(profile)
        self.route = route

    def rho(self, n: int):
        return rho(n, self.route, self.profile)

    def P(self, n: int):
        return algebraic_P(n)

    def V(self, n: int, route: str = "fromP"):
        return potential_V(n, route, self.profile)

    def theta(self, n: int):
        return theta(n, self.profile)

    def sigma(self, n: int):
        return sigma(n, self.profile)

    def phi(self, n: int):
        return phi(n, self.profile)

    def degrees(self, n_max: int) -> dict:
        """Observed deg rho_n for |n| <= n_max (recorded, never asserted)."""
        return {n: self.rho(n).degree for n in range(-n_max, n_max + 1)}
