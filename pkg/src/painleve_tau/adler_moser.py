"""Painleve II side: the Adler-Moser chain and its specializations.

Everything lives in exact polynomial rings in ``x`` (KdV picture) or ``z``
(Painleve picture).  The exponential factor ``exp(-z**3/24)`` of the
determinantal tau function is never materialized; its contribution ``-z/2``
to second log-derivatives is added by hand.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .report import Report
from .rings import Poly, RationalFunction, wronskian
from .scalars import as_scalar

__all__ = [
    "AMChain",
    "PiiSolution",
    "YV_CHAIN",
    "ZERO_TAIL_CHAIN",
    "am_psi",
    "am_theta",
    "kdv_potential",
    "ko_tau",
    "p34_residual",
    "p34_solution",
    "pii_rational",
    "pii_residual",
    "schur_p",
    "verify_am_identities",
    "yv_polynomial",
    "yv_constant",
    "yv_prefactor",
]


class AMChain:
    """Constants ``c_2, c_3, ...`` of an Adler-Moser chain, with cached psi/theta.

    ``constants`` maps ``i -> c_i`` (a sequence is read as ``c_2, c_3, ...``;
    a callable is asked for each ``c_i`` on demand).  Without ``default`` a
    missing constant is an error.
    """

    def __init__(self, constants=(), default=None, var: str = "x"):
        self._source = None
        if callable(constants):
            self._source, consts = constants, {}
        elif isinstance(constants, dict):
            consts = {int(i): as_scalar(c) for i, c in constants.items()}
        else:
            consts = {i + 2: as_scalar(c) for i, c in enumerate(constants)}
        self.constants = consts
        self.default = None if default is None else as_scalar(default)
        self.var = var
        self._psi = {}
        self._theta = {}

    def c(self, i: int):
        if i in self.constants:
            return self.constants[i]
        if self._source is not None:
            self.constants[i] = as_scalar(self._source(i))
            return self.constants[i]
        if self.default is None:
            raise KeyError(f"Adler-Moser constant c_{i} not supplied")
        return self.default

    def psi(self, k: int) -> Poly:
        if k < 1:
            raise ValueError("psi_k is defined for k >= 1")
        if k not in self._psi:
            coeffs = [Fraction(0)] * (2 * k)
            coeffs[2 * k - 1] = Fraction(1, factorial(2 * k - 1))
            for i in range(k - 1):
                coeffs[2 * i] = self.c(k - i) / factorial(2 * i)
            self._psi[k] = Poly(self.var, coeffs)
        return self._psi[k]

    def theta(self, k: int) -> Poly:
        if k < -1:
            raise ValueError("theta_k is defined for k >= -1")
        if k <= 0:
            return Poly.const(self.var, 1)
        if k not in self._theta:
            self._theta[k] = wronskian([self.psi(j) for j in range(1, k + 1)])
        return self._theta[k]

    def scaled(self, gamma) -> "AMChain":
        """The chain with ``c_i -> gamma**(2i-1) c_i``."""
        gamma = as_scalar(gamma)
        if self._source is not None:
            return AMChain(lambda i: self.c(i) * gamma ** (2 * i - 1), var=self.var)
        consts = {i: c * gamma ** (2 * i - 1) for i, c in self.constants.items()}
        return AMChain(consts, default=self.default, var=self.var)


def am_psi(k: int, chain: AMChain) -> Poly:
    return chain.psi(k)


def am_theta(k: int, chain: AMChain) -> Poly:
    return chain.theta(k)


def log_dd(p: Poly) -> RationalFunction:
    """Second logarithmic derivative ``(p p'' - p'^2)/p^2``."""
    d1 = p.derivative()
    return RationalFunction(p * d1.derivative() - d1 * d1, p * p)


def kdv_potential(k: int, chain: AMChain) -> RationalFunction:
    return log_dd(chain.theta(k)) * 2


@lru_cache(maxsize=None)
def _schur_reduced(k: int) -> Poly:
    """p_{2k-1} minus the multiples of lower chain members that carry odd powers.

    What is left has the shape of psi_k: the top odd monomial plus even powers.
    """
    p = schur_p(2 * k - 1)
    for j in range(k - 1, 0, -1):
        c = p.coeff(2 * j - 1)
        if c:
            p = p - _schur_reduced(j) * (c * factorial(2 * j - 1))
    return p


def yv_constant(i: int) -> Fraction:
    """Adler-Moser constant c_i of the Painleve II similarity reduction.

    The times t_1 = z, t_3 = -4/3, t_j = 0 otherwise do not map to c_i = 0 for
    i > 2: removing lower chain members from p_{2i-1} leaves non-zero constants
    from i = 5 on (c_5 = 64/81, c_8 = -2048/3645, ...).
    """
    if i < 2:
        raise ValueError("constants start at c_2")
    return _schur_reduced(i).coeff(0)


# Yablonskii-Vorob'ev specialization (c_2 = -4/3, higher constants from the reduction)
YV_CHAIN = AMChain(yv_constant, var="z")

# the chain with every constant beyond c_2 set to zero; it agrees with the
# Yablonskii-Vorob'ev sequence only up to n = 4
ZERO_TAIL_CHAIN = AMChain({2: Fraction(-4, 3)}, default=0, var="z")


def yv_polynomial(n: int) -> Poly:
    if n < 0:
        raise ValueError("Yablonskii-Vorob'ev polynomials are indexed by n >= 0")
    return YV_CHAIN.theta(n)


def yv_prefactor(n: int) -> Fraction:
    """Leading coefficient of yv_polynomial(n); dividing by it gives the monic integer form."""
    return yv_polynomial(n).leading


@lru_cache(maxsize=None)
def schur_p(k: int) -> Poly:
    """Coefficient of lambda**k in exp(z*lambda - 4/3*lambda**3)."""
    if k < 0:
        return Poly("z", [])
    coeffs = [Fraction(0)] * (k + 1)
    for j in range(k // 3 + 1):
        coeffs[k - 3 * j] = Fraction(-4, 3) ** j / (factorial(j) * factorial(k - 3 * j))
    return Poly("z", coeffs)


@lru_cache(maxsize=None)
def ko_tau(n: int) -> Poly:
    """Polynomial part of the Schur-function determinant, as Wr(p_1, p_3, ..., p_{2n-1})."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        return Poly.const("z", 1)
    return wronskian([schur_p(2 * j - 1) for j in range(1, n + 1)])


@dataclass(frozen=True)
class PiiSolution:
    ell: Fraction
    q: RationalFunction
    p: RationalFunction
    tau_poly: Poly

    @property
    def alpha(self) -> Fraction:
        return self.ell - Fraction(1, 2)


def _log_d(p: Poly) -> RationalFunction:
    return RationalFunction(p.derivative(), p)


def _tau_index(ell: Fraction) -> int:
    # tau_ell = tau_{-ell} is the Yablonskii-Vorob'ev polynomial of index |ell| - 1/2
    return int(abs(ell) - Fraction(1, 2))


def miura(q: RationalFunction) -> RationalFunction:
    z = RationalFunction.gen("z")
    return -q.derivative() - q * q - z / 2


def pii_rational(alpha: int) -> PiiSolution:
    alpha = int(alpha)
    n = abs(alpha)
    if n == 0:
        q = RationalFunction.const("z", 0)
    else:
        q = _log_d(yv_polynomial(n - 1)) - _log_d(yv_polynomial(n))
        if alpha < 0:
            q = -q
    ell = Fraction(alpha) + Fraction(1, 2)
    return PiiSolution(ell=ell, q=q, p=miura(q), tau_poly=yv_polynomial(_tau_index(ell)))


def p34_solution(ell) -> RationalFunction:
    ell = Fraction(ell)
    if ell.denominator != 2 or ell < 0:
        raise ValueError("ell must be n + 1/2 with n >= 0")
    z = RationalFunction.gen("z")
    return log_dd(yv_polynomial(_tau_index(ell))) * 2 - z / 2


def pii_residual(q: RationalFunction, alpha) -> RationalFunction:
    """q'' - 2q^3 - z q - alpha."""
    z = RationalFunction.gen("z")
    return q.derivative().derivative() - q * q * q * 2 - z * q - as_scalar(alpha)


def p34_residual(p: RationalFunction, ell) -> RationalFunction:
    """2p p'' - p'^2 + 4p^3 + 2z p^2 + ell^2  (the equation multiplied by 2p)."""
    z = RationalFunction.gen("z")
    ell = Fraction(ell)
    d1 = p.derivative()
    return p * d1.derivative() * 2 - d1 * d1 + p * p * p * 4 + z * p * p * 2 + ell * ell


def _identity(value, perturb, identity, index):
    return perturb(identity, index, value) if perturb else value


def verify_am_identities(k_max: int, chain: AMChain | None = None, perturb=None) -> Report:
    """Exact checks on the Adler-Moser / Painleve II side.

    * ``psi_chain``: psi_k'' = psi_{k-1} for k <= k_max (needs ``chain``);
    * ``AMTheta``: theta_{k+1}' theta_{k-1} - theta_{k+1} theta_{k-1}' = theta_k^2;
    * on the Yablonskii-Vorob'ev chain for 0 <= n <= k_max: ``bcmod``, ``todal``,
      ``ko_tau``, ``pii`` (alpha = +-n) and ``p34`` (ell = n + 1/2).

    ``perturb(identity, index, value)`` may replace the object under test and
    exists for negative controls.
    """
    if k_max < 1:
        raise ValueError("k_max must be at least 1")
    report = Report()
    if chain is not None:
        for k in range(1, k_max + 1):
            psi = _identity(chain.psi(k), perturb, "psi_chain", k)
            lower = chain.psi(k - 1) if k > 1 else Poly(chain.var, [])
            report.add("psi_chain", k, psi.derivative().derivative() == lower)
        for k in range(0, k_max):
            hi = _identity(chain.theta(k + 1), perturb, "AMTheta", k)
            lo = chain.theta(k - 1)
            lhs = hi.derivative() * lo - hi * lo.derivative()
            report.add("AMTheta", k, lhs == chain.theta(k) ** 2)

    z = Poly.gen("z")
    for n in range(0, k_max + 1):
        ell = Fraction(2 * n + 1, 2)
        ym, y, yp = (yv_polynomial(n - 1) if n > 0 else Poly.const("z", 1)), yv_polynomial(n), yv_polynomial(n + 1)
        yp_t = _identity(yp, perturb, "bcmod", n)
        # -ell C_ell is normalized to 1 on this chain
        report.add("bcmod", n, yp_t.derivative() * ym - yp_t * ym.derivative() == y * y)
        yp_t = _identity(yp, perturb, "todal", n)
        d1 = y.derivative()
        rhs = (y * d1.derivative() - d1 * d1) * 2 - z * y * y / 2
        report.add("todal", n, ym * yp_t * (-ell) == rhs)
        report.add("ko_tau", n, _identity(ko_tau(n), perturb, "ko_tau", n) == y)
        for alpha in sorted({n, -n}):
            q = _identity(pii_rational(alpha).q, perturb, "pii", alpha)
            report.add("pii", alpha, pii_residual(q, alpha).is_zero())
        p = _identity(p34_solution(ell), perturb, "p34", str(ell))
        report.add("p34", str(ell), p34_residual(p, ell).is_zero())
    return report
