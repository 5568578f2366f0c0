import json
import math
from fractions import Fraction

import pytest

import dirint


def test_dirichlet_integral():
    r = dirint.evaluate(1, 1)
    assert r.is_exact
    assert r.value.pi_coeff == Fraction(1, 2)
    assert r.value.log_coeffs == {}
    assert float(r.value) == pytest.approx(math.pi / 2, abs=1e-15)


def test_log_valued_entries():
    r = dirint.evaluate(4, 5)
    assert r.value.pi_coeff == 0
    assert r.value.log_coeffs == {3: Fraction(-45, 32), 5: Fraction(125, 96)}
    assert str(r) == "-45/32*ln(3) + 125/96*ln(5)"
    assert dirint.evaluate(2, 3).latex() == r"\frac{3}{4}\ln 3"


def test_divergent_cases():
    r = dirint.evaluate(1, 2)
    assert not r.is_exact
    assert r.value is None
    assert r.divergence_reason == "EvenNWithM1"
    assert dirint.evaluate(3, 2).divergence_reason == "OriginSingularity"
    assert dirint.classify(3, 2) == "DivergentOrigin"
    with pytest.raises(ValueError):
        dirint.evaluate(0, 1)


def test_combinatorics():
    assert dirint.binomial(64, 32) == 1832624140942590534
    assert dirint.harmonic(4) == Fraction(25, 12)
    assert dirint.alternating_power_sum(12, 7) == 0
    assert dirint.alternating_power_sum(5, 6) == 2**5 * math.factorial(5)


def test_quadrature_matches_closed_form():
    est = dirint.integrate_sinc_power(3, 4)
    assert abs(est.value - math.log(2)) <= est.error_bound + 1e-12
    est = dirint.integrate_sinc_power(1, 3)
    assert abs(est.value - math.pi / 4) <= est.error_bound + 1e-9
    with pytest.raises(dirint.QuadratureError):
        dirint.integrate_sinc_power(2, 2, abs_tol=1e-30)


def test_regularized():
    z = dirint.eval_regularized(2, 2, 0.5)
    assert z.real == pytest.approx(math.atan(4) - math.log(17) / 8, abs=1e-13)
    assert abs(z.imag) < 1e-12
    assert dirint.integrate_regularized(2, 2, 0.5).value == pytest.approx(z.real, abs=1e-9)
    k = dirint.ft_theta_over_x(1.0)
    assert k == pytest.approx(complex(-dirint.EULER_GAMMA, -math.pi / 2))


def test_json_and_cli():
    rec = json.loads(dirint.to_json(5, 5))
    assert rec["pi_coeff"] == "115/384"
    code, out, _ = dirint.run_cli(["eval", "2", "3"])
    assert (code, out) == (0, "3/4*ln(3)\n")
    code, out, _ = dirint.run_cli(["eval", "1", "2"])
    assert code == 2
