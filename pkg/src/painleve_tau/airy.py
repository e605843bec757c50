"""Numeric spot check of the Airy solution of the seed Lax pair.

Ai and Bi are summed from their Maclaurin series in mpmath multiprecision
floats.  Near |x| = 16 the series loses about 37 digits to cancellation, so
the series is summed with that many extra digits and the evaluator refuses
larger arguments.  Derivatives are central differences at that precision.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import mpmath

from .report import Report

AIRY_RANGE = 16
WORK_DPS = 60
# digits lost to cancellation in the Maclaurin sum near |x| = 16, plus margin
_CANCEL_DPS = 45


class AiryRangeError(ValueError):
    pass


def _mp(x):
    if isinstance(x, Fraction):
        return mpmath.mpf(x.numerator) / x.denominator
    return mpmath.mpf(x)


def airy_maclaurin(x):
    """(Ai(x), Bi(x)) for real |x| <= AIRY_RANGE from the Maclaurin series."""
    x = _mp(x)
    if abs(x) > AIRY_RANGE:
        raise AiryRangeError(f"Airy argument {mpmath.nstr(x, 8)} outside the validated range |x| <= {AIRY_RANGE}")
    with mpmath.workdps(WORK_DPS + _CANCEL_DPS):
        c1 = 1 / (mpmath.cbrt(9) * mpmath.gamma(mpmath.mpf(2) / 3))
        c2 = 1 / (mpmath.cbrt(3) * mpmath.gamma(mpmath.mpf(1) / 3))
        x3 = x**3
        # f = sum x^(3k) prod_{i<k} 1/((3i+2)(3i+3)),  g = sum x^(3k+1) prod 1/((3i+3)(3i+4))
        f_term, g_term = mpmath.mpf(1), x
        f, g = f_term, g_term
        eps = mpmath.mpf(10) ** (-(WORK_DPS + _CANCEL_DPS))
        k = 0
        while True:
            f_term = f_term * x3 / ((3 * k + 2) * (3 * k + 3))
            g_term = g_term * x3 / ((3 * k + 3) * (3 * k + 4))
            f += f_term
            g += g_term
            k += 1
            if abs(f_term) <= eps * abs(f) and abs(g_term) <= eps * (abs(g) + eps):
                break
        ai = c1 * f - c2 * g
        bi = mpmath.sqrt(3) * (c1 * f + c2 * g)
    return +ai, +bi


@dataclass(frozen=True)
class LaxResidual:
    zeta: Fraction
    lam: Fraction
    residual1: float
    residual2: float

    @property
    def max(self) -> float:
        return max(self.residual1, self.residual2)


def airy_argument(zeta, lam):
    zeta, lam = _mp(zeta), _mp(lam)
    return mpmath.cbrt(9 / lam**2) * (mpmath.mpf(1) / 4 + lam * zeta**2)


def _psi(z, lam, c1, c2, lam_exp, zeta_exp):
    zeta = mpmath.cbrt(z / 2)
    ai, bi = airy_maclaurin(airy_argument(zeta, lam))
    return lam**lam_exp * zeta**zeta_exp * (c1 * ai + c2 * bi)


def lax_residuals(zeta, lam, c1=1, c2=1, lam_exp=Fraction(-1, 6), zeta_exp=Fraction(1, 2)) -> LaxResidual:
    """Relative residuals of both Lax equations for the seed P = zeta, V = V0.

    ``lam_exp``/``zeta_exp`` are the prefactor exponents; changing them is
    only useful as a negative control.
    """
    zq, lq = Fraction(zeta), Fraction(lam)
    if zq <= 0 or lq == 0:
        raise ValueError("need zeta > 0 and lambda != 0")
    with mpmath.workdps(WORK_DPS):
        zt, lm = _mp(zq), _mp(lq)
        c1, c2 = _mp(c1), _mp(c2)
        le, ze = _mp(Fraction(lam_exp)), _mp(Fraction(zeta_exp))
        z = 2 * zt**3
        h = mpmath.mpf(10) ** -15

        def psi(zz, ll):
            return _psi(zz, ll, c1, c2, le, ze)

        p0 = psi(z, lm)
        pzp, pzm = psi(z + h, lm), psi(z - h, lm)
        psi_z = (pzp - pzm) / (2 * h)
        psi_zz = (pzp - 2 * p0 + pzm) / h**2
        psi_l = (psi(z, lm + h) - psi(z, lm - h)) / (2 * h)

        v0 = (5 - 36 * zt**4) / (144 * zt**6)
        P, dP = zt, 1 / (6 * zt**2)
        lhs1, rhs1 = psi_zz + v0 * p0, lm * p0
        rhs2 = (z / lm - P / lm**2) * psi_z / 2 - (1 / lm - dP / lm**2) * p0 / 4
        scale1 = max(abs(psi_zz), abs(v0 * p0), abs(rhs1))
        scale2 = max(abs(psi_l), abs(rhs2), abs(p0))
        r1 = abs(lhs1 - rhs1) / scale1
        r2 = abs(psi_l - rhs2) / scale2
    return LaxResidual(zq, lq, float(r1), float(r2))


def numeric_lax_check(zeta, lam, tol: float = 1e-8, **kwargs) -> Report:
    """Check both Lax equations at one point for Ai-only, Bi-only and mixed solutions."""
    report = Report()
    for c1, c2, tag in ((1, 0, "Ai"), (0, 1, "Bi"), (1, 1, "Ai+Bi")):
        res = lax_residuals(zeta, lam, c1, c2, **kwargs)
        index = f"zeta={Fraction(zeta)},lambda={Fraction(lam)},{tag}"
        report.add("lax_x", index, res.residual1 < tol)
        report.add("lax_lambda", index, res.residual2 < tol)
    return report


def lax_csv_rows(points, c1=1, c2=1, **kwargs):
    """(zeta, lambda, residual1, residual2) rows for the CLI."""
    for zeta, lam in points:
        r = lax_residuals(zeta, lam, c1, c2, **kwargs)
        yield (str(r.zeta), str(r.lam), f"{r.residual1:.3e}", f"{r.residual2:.3e}")
