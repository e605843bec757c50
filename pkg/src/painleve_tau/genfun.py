"""Generating functions for the Jordan chains via the Airy asymptotic series.

The coefficient of lambda^j in the generating function is a gauged function
``3^(1/4) zeta^(1/2) exp(-delta 3/2 zeta^2) * (polynomial in zeta^2)``.  It is
obtained by composing exact truncated power series in lambda whose
coefficients are polynomials in zeta:

    (1 + 4 lambda zeta^2)^(-1/4) * exp(-delta E) * (1 + sum_k (-delta)^k u_k (4 lambda)^k (1 + 4 lambda zeta^2)^(-3k/2))

with ``E = xi - 1/(4 lambda) - 3/2 zeta^2`` and ``xi = (1 + 4 lambda zeta^2)^(3/2) / (4 lambda)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .ohyama import custom_profile, gen_eigenfunction_psi
from .ohyama.verify import V0_LAURENT
from .report import Report
from .rings import GaugedFunction, LaurentPoly
from .scalars import ROOT4_3

DEFAULT_ORDER = 8


@lru_cache(maxsize=None)
def airy_u(k: int) -> Fraction:
    """Coefficient u_k of the large-argument Airy expansion (u_0 = 1)."""
    if k < 0:
        raise ValueError("k must be non-negative")
    if k == 0:
        return Fraction(1)
    return Fraction((6 * k - 5) * (6 * k - 3) * (6 * k - 1), 216 * k * (2 * k - 1)) * airy_u(k - 1)


def binom(alpha: Fraction, j: int) -> Fraction:
    out = Fraction(1)
    for i in range(j):
        out = out * (alpha - i) / (i + 1)
    return out


# truncated lambda-series: a list of LaurentPoly coefficients of lambda^0..lambda^N


def _zero(N):
    return [LaurentPoly() for _ in range(N + 1)]


def _series_mul(f, g, N):
    out = _zero(N)
    for i, fi in enumerate(f[: N + 1]):
        if fi.is_zero():
            continue
        for j in range(N + 1 - i):
            if not g[j].is_zero():
                out[i + j] = out[i + j] + fi * g[j]
    return out


def _series_exp(g, N):
    """exp(g) for a series without constant term: f_n = (1/n) sum_k k g_k f_{n-k}."""
    if not g[0].is_zero():
        raise ValueError("series exponential needs a vanishing constant term")
    f = [LaurentPoly.const(1)] + _zero(N)[1:]
    for n in range(1, N + 1):
        acc = LaurentPoly()
        for k in range(1, n + 1):
            if not g[k].is_zero():
                acc = acc + g[k] * f[n - k] * k
        f[n] = acc / n
    return f


def _binomial_series(alpha: Fraction, N):
    """(1 + 4 lambda zeta^2)^alpha."""
    return [LaurentPoly.monomial(2 * j, binom(alpha, j) * 4**j) for j in range(N + 1)]


def _e_series(N):
    """E = sum_{j >= 2} C(3/2, j) 4^(j-1) lambda^(j-1) zeta^(2j)."""
    out = _zero(N)
    for j in range(2, N + 2):
        out[j - 1] = LaurentPoly.monomial(2 * j, binom(Fraction(3, 2), j) * 4 ** (j - 1))
    return out


@dataclass(frozen=True)
class LambdaSeries:
    delta: int
    order: int
    coeffs: tuple  # GaugedFunctions, coefficient of lambda^j

    def __getitem__(self, j):
        return self.coeffs[j]

    def __len__(self):
        return len(self.coeffs)

    def replace(self, j: int, value: GaugedFunction) -> "LambdaSeries":
        coeffs = list(self.coeffs)
        coeffs[j] = value
        return LambdaSeries(self.delta, self.order, tuple(coeffs))


@lru_cache(maxsize=None)
def expand_generating(delta: int, N: int = DEFAULT_ORDER) -> LambdaSeries:
    if delta not in (1, -1):
        raise ValueError("delta must be +1 or -1")
    if N < 0:
        raise ValueError("order must be non-negative")
    pre = _binomial_series(Fraction(-1, 4), N)
    expo = _series_exp([c * (-delta) for c in _e_series(N)], N)
    tail = _zero(N)
    tail[0] = LaurentPoly.const(1)
    for k in range(1, N + 1):
        scale = (-delta) ** k * airy_u(k) * 4**k
        term = [LaurentPoly()] * k + [c * scale for c in _binomial_series(Fraction(-3 * k, 2), N - k)]
        tail = [tail[i] + term[i] for i in range(N + 1)]
    body = _series_mul(_series_mul(pre, expo, N), tail, N)
    coeffs = tuple(
        GaugedFunction(b * ROOT4_3, Fraction(1, 2), Fraction(-3, 2) * delta, 0) for b in body
    )
    return LambdaSeries(delta, N, coeffs)


def _solve_linear(columns, target):
    """Exact least-structure solve of sum x_i columns[i] = target over the scalars.

    ``columns`` and ``target`` are dicts exponent -> scalar.  Returns the list
    of x_i, or None if the system is inconsistent.
    """
    keys = sorted(set(target).union(*[set(c) for c in columns]))
    rows = [[c.get(e, Fraction(0)) for c in columns] + [target.get(e, Fraction(0))] for e in keys]
    ncol = len(columns)
    pivots = []
    r = 0
    for col in range(ncol):
        piv = next((i for i in range(r, len(rows)) if rows[i][col]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][col]
        rows[r] = [v * inv for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col]:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
    if any(row[-1] for row in rows[r:]):
        return None
    x = [Fraction(0)] * ncol
    for i, col in enumerate(pivots):
        x[col] = rows[i][-1]
    return x


def chain_profile(delta: int):
    """Profile whose Jordan chain matches psi'' + V0 psi = psi_prev, i.e. a = -delta."""
    return custom_profile(-delta, ROOT4_3, name=f"generating{'+' if delta > 0 else '-'}")


def lower_chain_coefficients(series: LambdaSeries, j: int):
    """x_i with  coeff_j - psi_{delta(j+1)} = sum_{i<j} x_i psi_{delta(i+1)}, or None."""
    delta = series.delta
    prof = chain_profile(delta)
    target = series[j]
    psis = [gen_eigenfunction_psi(delta * (i + 1), prof) for i in range(j + 1)]
    if any(p.gauge != target.gauge for p in psis):
        return None
    diff = (target - psis[j]).body.terms()
    return _solve_linear([p.body.terms() for p in psis[:j]], diff)


def verify_series_chain(series: LambdaSeries, N: int | None = None) -> Report:
    """Exact checks on a generating series.

    ``series_chain`` j:  coeff_j'' + V0 coeff_j = coeff_{j-1}  (coeff_{-1} = 0);
    ``lower_combination`` j: coeff_j equals psi_{delta(j+1)} of the matching
    chain plus a combination of lower members;
    ``even_powers`` j: only even powers of zeta occur.
    """
    N = series.order if N is None else N
    if N < 1 or N > series.order:
        raise ValueError("N must satisfy 1 <= N <= series order")
    report = Report()
    for j in range(N + 1):
        c = series[j]
        lhs = c.d_dz().d_dz() + c * V0_LAURENT
        ok = lhs.is_zero() if j == 0 else lhs == series[j - 1]
        report.add("series_chain", j, ok)
        report.add("lower_combination", j, lower_chain_coefficients(series, j) is not None)
        report.add("even_powers", j, all(e % 2 == 0 for e in c.body.terms()))
    return report
