import math
from math import factorial

import pytest

from barneszeta import (
    BarnesParams,
    DomainError,
    MethodChoice,
    Route,
    fp_barnes_series,
    gamma_dq,
    harmonic,
    log_gamma_B,
    log_gamma_ref,
    log_rho,
    multiple_gamma,
    psi_B,
    residue,
)
from barneszeta.oracles import digamma_ref

from conftest import scaled_err

EULER_GAMMA = 0.57721566490153286
LOG_2PI = math.log(2 * math.pi)


class TestLogRho:
    def test_unit_weight(self):
        assert abs(log_rho((1.0,), Route.SERIES).value - 0.5 * LOG_2PI) <= 1e-12

    def test_scaled_weight(self):
        assert abs(log_rho((2.0,), Route.SERIES).value - 0.5 * math.log(math.pi)) <= 1e-12

    def test_routes_agree_d2(self):
        s = log_rho((1.0, 1.0), Route.SERIES).value
        i = log_rho((1.0, 1.0), Route.INTEGRAL).value
        assert scaled_err(s, i) <= 1e-6


class TestLogGammaB:
    def test_d1_at_one(self):
        assert abs(log_gamma_B(BarnesParams(1.0, (1.0,)), Route.SERIES).value) <= 1e-12

    def test_d1_at_three(self):
        got = log_gamma_B(BarnesParams(3.0, (1.0,)), Route.SERIES).value
        assert abs(got - math.log(2)) <= 1e-12

    @pytest.mark.parametrize("a", [0.5, 1.0, 3.7])
    def test_d1_collapse_to_reference(self, a):
        got = log_gamma_B(BarnesParams(a, (1.0,)), Route.SERIES).value
        assert abs(got - log_gamma_ref(a)) <= 1e-9

    def test_best_route_carries_cross_check(self):
        res = log_gamma_B(BarnesParams(2.0, (1.0, 1.0)), MethodChoice(Route.BEST))
        assert "cross_check_delta" in res.diagnostics["deriv0"]


class TestPsi:
    def test_digamma_at_one(self):
        got = psi_B(1, BarnesParams(1.0, (1.0,)), Route.SERIES).value
        assert abs(got + EULER_GAMMA) <= 1e-12

    def test_digamma_at_half(self):
        got = psi_B(1, BarnesParams(0.5, (1.0,)), Route.SERIES).value
        assert abs(got - (-EULER_GAMMA - 2 * math.log(2))) <= 1e-12

    @pytest.mark.parametrize("a", [0.5, 1.3, 2.2])
    def test_d1_matches_termwise_digamma(self, a):
        got = psi_B(1, BarnesParams(a, (1.0,)), Route.SERIES).value
        assert abs(got - digamma_ref(a)) <= 1e-9

    def test_routes_agree(self, d2_params):
        s = psi_B(2, d2_params, Route.SERIES).value
        i = psi_B(2, d2_params, Route.INTEGRAL).value
        l = psi_B(2, d2_params, Route.LIMIT).value
        assert scaled_err(s, i) <= 1e-6
        assert scaled_err(s, l) <= 1e-4

    def test_relation_round_trip(self, d2_params):
        # recombining psi through the finite-part relation reproduces fp exactly
        q = 2
        fp = fp_barnes_series(q, d2_params).value
        res = residue(q, d2_params)
        psi = (-1.0) ** q * factorial(q - 1) * (fp + float(harmonic(q - 1)) * res)
        fp_back = (-1.0) ** q / factorial(q - 1) * psi - float(harmonic(q - 1)) * res
        assert abs(fp_back - fp) <= 1e-14 * (1 + abs(fp))

    def test_q_out_of_range(self):
        with pytest.raises(DomainError):
            psi_B(2, BarnesParams(1.0, (1.0,)))


class TestGammaModularForms:
    def test_euler_constant(self):
        got = gamma_dq(1, (1.0,), Route.SERIES).value
        assert abs(got - EULER_GAMMA) <= 1e-12

    def test_scaled_weight(self):
        got = gamma_dq(1, (2.0,), Route.SERIES).value
        assert abs(got - (EULER_GAMMA - math.log(2)) / 2) <= 1e-12

    @pytest.mark.parametrize("q", [1, 2])
    def test_routes_agree_d2(self, q):
        s = gamma_dq(q, (1.0, 1.0), Route.SERIES).value
        i = gamma_dq(q, (1.0, 1.0), Route.INTEGRAL).value
        assert scaled_err(s, i) <= 1e-6


class TestMultipleGamma:
    def test_d1_is_ordinary_gamma(self):
        assert abs(multiple_gamma(3.0, 1, Route.SERIES).value - math.log(2)) <= 1e-12
        got = multiple_gamma(0.5, 1, Route.SERIES).value
        assert abs(got - 0.5 * math.log(math.pi)) <= 1e-12

    @pytest.mark.parametrize("a", [1.0, 2.0])
    def test_d2_routes_agree(self, a):
        s = multiple_gamma(a, 2, Route.SERIES).value
        i = multiple_gamma(a, 2, Route.INTEGRAL).value
        assert scaled_err(s, i) <= 1e-6
