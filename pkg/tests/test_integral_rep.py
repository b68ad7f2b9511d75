import math

import numpy as np
import pytest

from barneszeta import (
    BarnesParams,
    DomainError,
    IntegralControls,
    PoleError,
    QuadratureProblem,
    barnes_zeta_integral,
    deriv0_barnes_integral,
    deriv0_bh_integral,
    fp_barnes_integral,
    fp_bh_integral,
    hurwitz_zeta,
    quad_semiinfinite,
    residue,
    residue_bh,
    zeta_bh_integral,
)
from barneszeta.bernoulli import bernoulli_poly
from barneszeta.integral_rep import _homog_bracket, _inhom_bracket

from conftest import rel_err

EULER_GAMMA = 0.57721566490153286
LOG_2PI = math.log(2 * math.pi)
ZETA2 = math.pi**2 / 6
ZETA4 = math.pi**4 / 90
ZETA5 = 1.0369277551433699


class TestQuadEngine:
    def test_exponential(self):
        prob = QuadratureProblem(lambda t: np.exp(-t), 0.0, 1.0, 1e-12)
        v, e, _ = quad_semiinfinite(prob)
        assert rel_err(v, 1.0) <= 1e-12

    def test_gamma_two_scaled(self):
        prob = QuadratureProblem(lambda t: t * np.exp(-2 * t), 1.0, 2.0, 1e-12, poly_growth=1)
        v, e, _ = quad_semiinfinite(prob)
        assert rel_err(v, 0.25) <= 1e-12

    def test_half_power(self):
        prob = QuadratureProblem(lambda t: np.sqrt(t) * np.exp(-t), 0.5, 1.0, 1e-12,
                                 poly_growth=0.5)
        v, e, _ = quad_semiinfinite(prob)
        assert rel_err(v, math.sqrt(math.pi) / 2) <= 1e-11

    def test_invalid_decay(self):
        with pytest.raises(DomainError):
            QuadratureProblem(lambda t: t, 0.0, 0.0, 1e-10)


class TestContinuation:
    def test_unit_d2_at_5(self):
        res = barnes_zeta_integral(5.0, BarnesParams(1.0, (1.0, 1.0)), IntegralControls(M=0))
        assert rel_err(res.value, ZETA4) <= 1e-11

    def test_below_abscissa(self):
        res = barnes_zeta_integral(0.5, BarnesParams(1.0, (1.0, 1.0)), IntegralControls(M=2))
        assert rel_err(res.value, hurwitz_zeta(-0.5, 1.0)) <= 1e-11

    def test_hurwitz_collapse(self):
        res = barnes_zeta_integral(-1.5, BarnesParams(0.3, (1.0,)), IntegralControls(M=3))
        assert rel_err(res.value, hurwitz_zeta(-1.5, 0.3)) <= 1e-10

    def test_pole(self):
        with pytest.raises(PoleError):
            barnes_zeta_integral(1.0, BarnesParams(1.0, (1.0, 1.0)))

    def test_region_guard(self):
        with pytest.raises(DomainError):
            barnes_zeta_integral(-0.5, BarnesParams(1.0, (1.0,)), IntegralControls(M=0))

    def test_M_independence(self, d2_params):
        v1 = barnes_zeta_integral(0.5, d2_params, IntegralControls(M=2)).value
        v2 = barnes_zeta_integral(0.5, d2_params, IntegralControls(M=4)).value
        assert rel_err(v1, v2) <= 1e-9

    def test_nonpositive_integer_alpha_prefactor_only(self):
        # at alpha = 0 the 1/Gamma factor kills the integral and the
        # prefactor carries the exact value: zeta_H(0, a) = 1/2 - a
        res = barnes_zeta_integral(0.0, BarnesParams(0.7, (1.0,)), IntegralControls(M=4))
        assert res.diagnostics.get("integral_skipped") is True
        assert abs(res.value - (0.5 - 0.7)) <= 1e-12


class TestHomogeneous:
    def test_unit_d2_at_5(self):
        res = zeta_bh_integral(5.0, (1.0, 1.0), IntegralControls(M=0))
        assert rel_err(res.value, ZETA4 + ZETA5) <= 1e-10

    def test_d1_is_riemann(self):
        res = zeta_bh_integral(2.0, (1.0,), IntegralControls(M=0))
        assert rel_err(res.value, ZETA2) <= 1e-12

    def test_c_independence(self):
        v1 = zeta_bh_integral(0.5, (1.0, 1.0), IntegralControls(M=2, c=1.0)).value
        v2 = zeta_bh_integral(0.5, (1.0, 1.0), IntegralControls(M=2, c=2.0)).value
        assert rel_err(v1, v2) <= 1e-8

    def test_regulator_domain(self):
        with pytest.raises(DomainError):
            IntegralControls(c=-1.0)


class TestFiniteParts:
    def test_d1_euler(self):
        res = fp_barnes_integral(1, BarnesParams(1.0, (1.0,)))
        assert abs(res.value - EULER_GAMMA) <= 1e-12

    def test_d2_reduction(self):
        res = fp_barnes_integral(2, BarnesParams(1.0, (1.0, 1.0)))
        assert abs(res.value - EULER_GAMMA) <= 1e-12

    def test_homogeneous_d1(self):
        res = fp_bh_integral(1, (1.0,))
        assert abs(res.value - EULER_GAMMA) <= 1e-12

    def test_homogeneous_d2(self):
        res = fp_bh_integral(2, (1.0, 1.0))
        assert abs(res.value - (EULER_GAMMA + ZETA2)) <= 1e-12


class TestDerivative:
    def test_d1_lerch(self):
        res = deriv0_barnes_integral(BarnesParams(1.0, (1.0,)))
        assert abs(res.value + 0.5 * LOG_2PI) <= 1e-8

    def test_d1_a3(self):
        res = deriv0_barnes_integral(BarnesParams(3.0, (1.0,)))
        assert abs(res.value - (math.log(2) - 0.5 * LOG_2PI)) <= 1e-8

    def test_homogeneous_d1(self):
        res = deriv0_bh_integral((1.0,))
        assert abs(res.value + 0.5 * LOG_2PI) <= 1e-10

    def test_homogeneous_scaling(self):
        res = deriv0_bh_integral((2.0,))
        assert abs(res.value - (0.5 * math.log(2) - 0.5 * LOG_2PI)) <= 1e-10


class TestResidues:
    def test_hurwitz(self):
        assert residue(1, BarnesParams(1.0, (1.0,))) == 1.0

    def test_d2_unit_weights(self):
        for a in (0.4, 1.0, 1.7):
            assert residue(1, BarnesParams(a, (1.0, 1.0))) == pytest.approx(1 - a)
            assert residue(2, BarnesParams(a, (1.0, 1.0))) == pytest.approx(1.0)

    def test_homogeneous_is_a0_specialization(self, d3_params):
        w = d3_params.w
        d = len(w)
        for q in range(1, d + 1):
            pw = w[0] * w[1] * w[2]
            want = ((-1.0) ** (d - q) * bernoulli_poly(d - q, 0.0, w)
                    / (math.factorial(q - 1) * math.factorial(d - q) * pw))
            assert residue_bh(q, w) == want


class TestIntegrandRegularity:
    """At t = 1e-6 the regularized brackets must show their subtraction order.

    A wrong sign or convention in the B_k(-c|w) ladder would leave the raw
    t^(-d) blowup in place; the subtracted bracket has to sit many orders
    below that.
    """

    @pytest.mark.parametrize("M", [0, 1, 3])
    def test_inhomogeneous(self, M, d2_params):
        w = d2_params.w
        d = len(w)
        t = 1e-6
        val = abs(_inhom_bracket(w, M)(np.array([t]))[0])
        assert val <= 1e3 * t ** (M + 1 - d)
        assert val <= 1e-4 * t ** (-d)

    @pytest.mark.parametrize("M", [0, 2, 3])
    def test_homogeneous(self, M, d2_params):
        w = d2_params.w
        d = len(w)
        t = 1e-6
        val = abs(_homog_bracket(w, M, 1.0 + 0j)(np.array([t]))[0])
        # for M < d the counter-exponential sum is empty and a -1 floor remains
        expected = t ** (M + 1 - d) if M >= d else max(t ** (M + 1 - d), 1.0)
        assert val <= 1e3 * expected
        assert val <= 1e-4 * t ** (-d)
