from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st
from oracles import SYMBOLS, nonzero_fraction, poly_from_sympy, rf_from_sympy, small_fraction, to_sympy

from painleve_tau.adler_moser import (
    YV_CHAIN,
    ZERO_TAIL_CHAIN,
    AMChain,
    am_psi,
    am_theta,
    kdv_potential,
    ko_tau,
    p34_residual,
    p34_solution,
    pii_rational,
    pii_residual,
    schur_p,
    verify_am_identities,
    yv_constant,
    yv_polynomial,
    yv_prefactor,
)
from painleve_tau.rings import Poly, RationalFunction

F = Fraction
x, z = SYMBOLS["x"], SYMBOLS["z"]
Z = RationalFunction.gen("z")


def rf(expr):
    return rf_from_sympy(expr, "z")


# ----------------------------------------------------------------- chain
def test_psi_examples():
    c2, c3 = F(2, 5), F(-7, 3)
    chain = AMChain([c2, c3])
    assert am_psi(1, chain) == Poly.gen("x")
    assert am_psi(2, chain) == poly_from_sympy(x**3 / 6 + sympy.Rational(2, 5), "x")
    assert am_psi(3, chain) == poly_from_sympy(x**5 / 120 + sympy.Rational(2, 5) * x**2 / 2 - sympy.Rational(7, 3), "x")


def test_missing_constant():
    with pytest.raises(KeyError):
        am_psi(3, AMChain([F(1)]))
    with pytest.raises(ValueError):
        am_psi(0, AMChain())


def test_theta_examples():
    c2 = F(3, 4)
    chain = AMChain([c2, F(1, 9)])
    assert am_theta(-1, chain) == am_theta(0, chain) == Poly.const("x", 1)
    assert am_theta(1, chain) == Poly.gen("x")
    assert am_theta(2, chain) == poly_from_sympy(x**3 / 3 - sympy.Rational(3, 4), "x")
    t1, t2, t3 = (am_theta(k, chain) for k in (1, 2, 3))
    assert t3.derivative() * t1 - t3 * t1.derivative() == t2 * t2


def test_theta3_matches_sympy_wronskian():
    c2, c3 = sympy.symbols("c2 c3")
    psis = [x, x**3 / 6 + c2, x**5 / 120 + c2 * x**2 / 2 + c3]
    symbolic = sympy.expand(sympy.wronskian(psis, x))
    for v2, v3 in ((F(1, 2), F(-3)), (F(-4, 3), F(0)), (F(7, 5), F(2, 9))):
        chain = AMChain([v2, v3])
        ref = symbolic.subs({c2: sympy.Rational(v2.numerator, v2.denominator), c3: sympy.Rational(v3.numerator, v3.denominator)})
        assert sympy.expand(to_sympy(am_theta(3, chain)) - ref) == 0


def test_kdv_potential_examples():
    chain = AMChain([F(3)])
    assert kdv_potential(0, chain).is_zero()
    assert kdv_potential(1, chain) == rf_from_sympy(-2 / x**2, "x")
    t = sympy.Rational(3, 4)
    assert kdv_potential(2, chain) == rf_from_sympy(-6 * x * (x**3 + 24 * t) / (x**3 - 12 * t) ** 2, "x")


@settings(max_examples=15)
@given(st.lists(small_fraction, min_size=4, max_size=4), nonzero_fraction)
def test_weighted_homogeneity(consts, gamma):
    chain = AMChain(consts)
    scaled = AMChain(consts).scaled(gamma)
    for k in range(1, 5):
        lhs = scaled.theta(k).substitute_power("x", gamma, 1)
        assert lhs == chain.theta(k) * gamma ** (k * (k + 1) // 2)


# ----------------------------------------------------------------- Schur and Yablonskii-Vorob'ev
def test_schur_examples():
    assert schur_p(0) == Poly.const("z", 1)
    assert schur_p(-3).is_zero()
    assert schur_p(3) == poly_from_sympy(z**3 / 6 - sympy.Rational(4, 3), "z")


def test_schur_against_sympy_series():
    lam = sympy.Symbol("lam")
    series = sympy.series(sympy.exp(z * lam - sympy.Rational(4, 3) * lam**3), lam, 0, 12).removeO()
    for k in range(12):
        assert schur_p(k) == poly_from_sympy(series.coeff(lam, k), "z")
        if k:
            assert schur_p(k).derivative() == schur_p(k - 1)


def test_yv_examples():
    assert yv_polynomial(1) == Poly.gen("z")
    assert yv_polynomial(2) == poly_from_sympy((z**3 + 4) / 3, "z")
    assert yv_polynomial(4) == poly_from_sympy((z**10 + 60 * z**7 + 11200 * z) / 4725, "z")
    with pytest.raises(ValueError):
        yv_polynomial(-1)


def test_yv_monic_integer():
    for n in range(11):
        monic = yv_polynomial(n) / yv_prefactor(n)
        assert monic.leading == 1
        assert all(c.denominator == 1 for c in monic.coeffs)


def test_ko_tau_equals_yv():
    assert ko_tau(0) == Poly.const("z", 1)
    assert ko_tau(1) == Poly.gen("z")
    assert ko_tau(3) == poly_from_sympy((z**6 + 20 * z**3 - 80) / 45, "z")
    for n in range(9):
        assert ko_tau(n) == yv_polynomial(n)


def test_reduced_constants():
    nonzero = {i: yv_constant(i) for i in range(2, 11) if yv_constant(i)}
    assert nonzero == {2: F(-4, 3), 5: F(64, 81), 8: F(-2048, 3645)}


def test_zero_tail_chain_diverges_at_five():
    # with every constant past c_2 set to zero the chain leaves the
    # Yablonskii-Vorob'ev sequence at n = 5
    for n in range(5):
        assert ZERO_TAIL_CHAIN.theta(n) == yv_polynomial(n)
    assert ZERO_TAIL_CHAIN.theta(5) != yv_polynomial(5)
    t4, t5 = ZERO_TAIL_CHAIN.theta(4), ZERO_TAIL_CHAIN.theta(5)
    q = RationalFunction(t4.derivative(), t4) - RationalFunction(t5.derivative(), t5)
    assert not pii_residual(q, 5).is_zero()


# ----------------------------------------------------------------- PII and P34
def test_pii_examples():
    assert pii_rational(0).q.is_zero()
    assert pii_rational(1).q == rf(-1 / z)
    assert pii_rational(2).q == rf(1 / z - 3 * z**2 / (z**3 + 4))


def test_pii_negative_alpha_and_miura():
    for n in range(1, 6):
        assert pii_rational(-n).q == -pii_rational(n).q
        sol = pii_rational(n)
        assert sol.p == -sol.q.derivative() - sol.q * sol.q - Z / 2
        assert sol.alpha == n


def test_pii_residuals():
    for alpha in range(-8, 9):
        assert pii_residual(pii_rational(alpha).q, alpha).is_zero()


def test_pii_residual_against_sympy():
    q = to_sympy(pii_rational(3).q)
    assert sympy.cancel(sympy.diff(q, z, 2) - 2 * q**3 - z * q - 3) == 0


def test_p34_examples():
    assert p34_solution(F(1, 2)) == rf(-z / 2)
    assert p34_solution(F(3, 2)) == rf(-2 / z**2 - z / 2)
    assert p34_solution(F(5, 2)) == rf(-6 * z * (z**3 - 8) / (z**3 + 4) ** 2 - z / 2)
    for bad in (F(-1, 2), 1, F(1, 3)):
        with pytest.raises(ValueError):
            p34_solution(bad)


def test_p34_residuals_and_pii_link():
    for n in range(9):
        ell = F(2 * n + 1, 2)
        assert p34_residual(p34_solution(ell), ell).is_zero()
        # the momentum of the alpha = n solution is the ell = n + 1/2 P34 solution
        assert pii_rational(n).p == p34_solution(ell)


def test_p34_residual_against_sympy():
    p = to_sympy(p34_solution(F(7, 2)))
    lhs = 2 * p * sympy.diff(p, z, 2) - sympy.diff(p, z) ** 2 + 4 * p**3 + 2 * z * p**2 + sympy.Rational(49, 4)
    assert sympy.cancel(lhs) == 0


# ----------------------------------------------------------------- verification report
def test_verify_random_chain():
    chain = AMChain([F(3, 7), F(-2, 5), F(11, 3)])
    report = verify_am_identities(4, chain=chain)
    assert report.ok
    assert {c.index for c in report.by_identity("AMTheta")} == {0, 1, 2, 3}


def test_verify_detects_wrong_q():
    def perturb(identity, index, value):
        return value + 1 if (identity, index) == ("pii", 1) else value

    report = verify_am_identities(2, perturb=perturb)
    assert [(c.identity, c.index) for c in report.failures()] == [("pii", 1)]
    # the same perturbation by hand: q = -1/z + 1
    assert not pii_residual(rf(-1 / z + 1), 1).is_zero()


@pytest.mark.parametrize(
    "identity,index",
    [("psi_chain", 3), ("AMTheta", 2), ("bcmod", 2), ("todal", 2), ("ko_tau", 2), ("pii", -2), ("p34", "5/2")],
)
def test_negative_controls(identity, index):
    def perturb(ident, idx, value):
        if (ident, idx) != (identity, index):
            return value
        return value * 2 if isinstance(value, Poly) else value + 1

    chain = AMChain([F(1, 2), F(2, 3), F(3, 4)])
    report = verify_am_identities(3, chain=chain, perturb=perturb)
    assert [(c.identity, c.index) for c in report.failures()] == [(identity, index)]


def test_verify_rejects_bad_kmax():
    with pytest.raises(ValueError):
        verify_am_identities(0)


def test_yv_chain_shape():
    assert YV_CHAIN.c(2) == F(-4, 3)
    assert YV_CHAIN.psi(2) == poly_from_sympy(z**3 / 6 - sympy.Rational(4, 3), "z")
