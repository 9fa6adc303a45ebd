import math

import numpy as np
import pytest

from smoothed_pnt.errors import DomainError, ParseError, RangeError
from smoothed_pnt.metrics import (
    EtaFunction,
    eta_from_zeros,
    load_eta,
    metrics_row,
    omega_eta,
    omega_from_value,
    omega_zero,
    varpi,
    zero_sum_W,
    zero_sum_W_terms,
)
from smoothed_pnt.specfun import gamma_complex
from smoothed_pnt.zeros import ZeroSet

GAMMA1 = 14.134725141734693


def brute_force_min(eta, log_x, grid, arg="t"):
    if arg == "t":
        return float(np.min(eta(grid) * log_x + np.log(grid)))
    return float(np.min(eta(grid) * log_x + grid))


class TestW:
    def test_single_zero_closed_form(self, zeros_rh):
        one = ZeroSet(betas=zeros_rh.betas[:1], gammas=zeros_rh.gammas[:1])
        x = 1234.0
        expected = (
            2.0
            * abs(gamma_complex(complex(1.5, GAMMA1)))
            * math.sqrt(x)
            / GAMMA1
        )
        assert zero_sum_W(x, one) == pytest.approx(expected, rel=1e-10)

    def test_monotone_in_x(self, zeros_rh):
        assert zero_sum_W(4000.0, zeros_rh) > zero_sum_W(1000.0, zeros_rh)

    def test_first_zero_dominates(self, zeros_rh):
        terms = zero_sum_W_terms(1e6, zeros_rh)
        assert terms[0] / terms.sum() > 0.999


class TestOmegaZero:
    def test_rh_set_minimizes_at_first_zero(self, zeros_rh):
        for x in (10.0, 1e4, 1e12):
            expected = 0.5 * math.log(x) + math.log(GAMMA1)
            assert omega_zero(x, zeros_rh) == pytest.approx(expected, rel=1e-12)

    def test_synthetic_low_beta_zero_wins_at_large_x(self, zeros_rh):
        synth = ZeroSet(
            betas=np.concatenate([[0.5], [0.9]]),
            gammas=np.concatenate([[GAMMA1], [100.0]]),
            assume_rh=False,
        )
        x = math.exp(100.0)
        # 0.1*100 + log 100 < 0.5*100 + log 14.13
        assert omega_zero(x, synth) == pytest.approx(10.0 + math.log(100.0), rel=1e-12)

    def test_single_zero_exact(self):
        zs = ZeroSet(betas=np.array([0.7]), gammas=np.array([33.0]), assume_rh=False)
        x = 55.0
        assert omega_zero(x, zs) == 0.3 * math.log(x) + math.log(33.0)


class TestEtaFunction:
    def test_constant_and_classical_shapes(self):
        eta_c = EtaFunction.constant(0.25)
        assert eta_c(5.0) == 0.25
        eta_cl = EtaFunction.classical(0.1)
        assert eta_cl(0.0) == pytest.approx(0.1, rel=1e-12)
        assert eta_cl(1e6) == pytest.approx(0.1 / math.log(1e6 + math.e), rel=1e-9)

    def test_validation(self):
        with pytest.raises(DomainError):
            EtaFunction.constant(0.7)
        with pytest.raises(DomainError):
            EtaFunction.tabulated([1.0, 2.0], [0.1, 0.2])  # increasing
        with pytest.raises(DomainError):
            EtaFunction.tabulated([2.0, 1.0], [0.2, 0.1])  # u not ascending

    def test_tabulated_step_lookup(self):
        eta = EtaFunction.tabulated([0.0, 10.0], [0.5, 0.25])
        assert eta(5.0) == 0.5
        assert eta(10.0) == 0.25
        assert eta(1e9) == 0.25

    def test_load_eta(self, tmp_path):
        p = tmp_path / "eta.txt"
        p.write_text("# profile\n0.0 0.5\n10.0 0.3\n20.0 0.2\n")
        eta = load_eta(p)
        assert eta(15.0) == 0.3
        p2 = tmp_path / "bad.txt"
        p2.write_text("0.0 0.5 9\n")
        with pytest.raises(ParseError):
            load_eta(p2)


class TestOmegaEta:
    def test_constant_half_minimizes_at_one(self):
        for x in (10.0, 1e5):
            res = omega_eta(x, EtaFunction.constant(0.5))
            assert res.value == pytest.approx(0.5 * math.log(x), rel=1e-10)
            assert res.minimizer == pytest.approx(1.0, abs=1e-6)

    def test_classical_against_dense_grid(self):
        eta = EtaFunction.classical(0.1)
        for x in (1e3, 1e6):
            log_x = math.log(x)
            grid = np.exp(np.linspace(0.0, 2.0 * log_x, 1_000_000))
            brute = brute_force_min(eta, log_x, grid, arg="t")
            assert abs(omega_eta(x, eta).value - brute) <= 1e-4

    def test_boundary_at_e(self):
        eta = EtaFunction.classical(0.3)
        res = omega_eta(math.e, eta)
        assert res.value == pytest.approx(float(eta(1.0)), abs=1e-9)

    def test_monotone_in_x(self):
        eta = EtaFunction.classical(0.2)
        vals = [omega_eta(x, eta).value for x in np.geomspace(2.0, 1e8, 25)]
        assert np.all(np.diff(vals) >= -1e-9)

    def test_domain(self):
        with pytest.raises(DomainError):
            omega_eta(1.0, EtaFunction.constant(0.5))


class TestVarpi:
    def test_constant_half_minimizes_at_zero(self):
        x = 50.0
        res = varpi(x, EtaFunction.constant(0.5))
        assert res.value == pytest.approx(0.5 * math.log(x), rel=1e-12)
        assert res.minimizer == pytest.approx(0.0, abs=1e-9)

    def test_classical_against_dense_grid(self):
        eta = EtaFunction.classical(0.1)
        for x in (1e3, 1e6):
            log_x = math.log(x)
            grid = np.linspace(0.0, log_x + 10.0, 1_000_000)
            brute = brute_force_min(eta, log_x, grid, arg="u")
            assert abs(varpi(x, eta).value - brute) <= 1e-4

    def test_upper_bounded_by_left_endpoint(self):
        eta = EtaFunction.classical(0.4)
        for x in (5.0, 1e4):
            assert varpi(x, eta).value <= float(eta(0.0)) * math.log(x) + 1e-12

    def test_monotone_in_x(self):
        eta = EtaFunction.classical(0.2)
        vals = [varpi(x, eta).value for x in np.geomspace(2.0, 1e8, 25)]
        assert np.all(np.diff(vals) >= -1e-9)


class TestMetricsRow:
    def test_log_ratio_invariant(self, table_mid, zeros_rh):
        row = metrics_row(table_mid, zeros_rh, 500.0, grid=64, tol=1e-6)
        assert row.omega_S == pytest.approx(math.log(500.0 / row.S), rel=1e-12)
        assert row.omega_D == pytest.approx(math.log(500.0 / row.D), rel=1e-12)
        assert row.omega_W == pytest.approx(math.log(500.0 / row.W), rel=1e-12)
        assert row.omega_S <= row.omega_D  # equivalent to S >= D


class TestOmegaFromValue:
    def test_identities(self):
        assert omega_from_value(10.0, 10.0) == 0.0
        assert omega_from_value(10.0, 1.0) == pytest.approx(math.log(10.0))

    def test_errors(self):
        with pytest.raises(DomainError):
            omega_from_value(10.0, 0.0)
        with pytest.raises(RangeError):
            omega_from_value(-1.0, 1.0)


class TestEnvelopeChain:
    def test_omega_eta_below_omega_for_consistent_profile(self, zeros_rh):
        eta = eta_from_zeros(zeros_rh, convention="height")
        for x in (10.0, 1e3, 1e6):
            assert omega_eta(x, eta).value <= omega_zero(x, zeros_rh) + 1e-9

    def test_with_synthetic_off_line_zeros(self, zeros_rh):
        synth = ZeroSet(
            betas=np.array([0.5, 0.75, 0.6]),
            gammas=np.array([GAMMA1, 40.0, 90.0]),
            assume_rh=False,
        )
        eta = eta_from_zeros(synth, convention="height")
        for x in (10.0, 1e4, 1e8):
            assert omega_eta(x, eta).value <= omega_zero(x, synth) + 1e-9

    def test_both_argument_conventions_supported(self, zeros_rh):
        for conv in ("height", "log-height"):
            eta = eta_from_zeros(zeros_rh, convention=conv)
            assert 0.0 < eta(20.0) <= 0.5
        with pytest.raises(DomainError):
            eta_from_zeros(zeros_rh, convention="other")
