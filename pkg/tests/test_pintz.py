import cmath
import math

import numpy as np
import pytest

from smoothed_pnt.errors import DomainError, NormalizationError
from smoothed_pnt.pintz import (
    PintzParams,
    U_integral,
    U_residue,
    gaussian_line_check,
    mellin_H_closed,
    mellin_H_quadrature,
    turan_bound,
)
from smoothed_pnt.specfun import gamma_complex
from smoothed_pnt.zeros import ZeroSet

GAMMA1 = 14.134725141734693
RHO1 = complex(0.5, GAMMA1)


class TestParams:
    def test_validation(self):
        with pytest.raises(DomainError):
            PintzParams(mu=1.0, k=0.0, rho0=RHO1)
        with pytest.raises(DomainError):
            PintzParams(mu=1.0, k=1.0, rho0=complex(1.2, 5.0))
        with pytest.raises(DomainError):
            PintzParams(mu=1.0, k=1.0, rho0=complex(0.5, -5.0))


class TestMellinClosed:
    def test_factor_oracles_at_two(self, table_small):
        n = np.arange(1, table_small.limit + 1, dtype=float)
        logderiv_oracle = -float(np.dot(table_small.values[1:], n**-2.0))
        zeta_oracle = math.pi**2 / 6.0
        expected = 2.0 * 1.0 * (logderiv_oracle + zeta_oracle)
        # the Lambda Dirichlet tail at 1e4 is ~1e-3; allow for it
        assert mellin_H_closed(2.0).real == pytest.approx(expected, abs=3e-3)
        assert abs(mellin_H_closed(2.0).imag) < 1e-12

    def test_finite_and_stable_near_one(self):
        v1 = mellin_H_closed(1.001)
        v2 = mellin_H_closed(1.0011)
        assert np.isfinite(v1.real) and np.isfinite(v2.real)
        assert abs(v1) < 1e7 and abs(v2) < 1e7

    def test_conjugate_symmetry(self):
        s = complex(2.0, 3.7)
        assert mellin_H_closed(s.conjugate()) == mellin_H_closed(s).conjugate()

    def test_domain(self):
        with pytest.raises(DomainError):
            mellin_H_closed(0.5)


class TestMellinQuadrature:
    def test_matches_closed_at_two(self, table_mid):
        quad = mellin_H_quadrature(table_mid, 2.0)
        assert abs(quad.value - mellin_H_closed(2.0)) <= 1e-4
        assert quad.error <= 1e-4

    def test_matches_closed_off_axis(self, table_mid):
        s = complex(2.0, 5.0)
        quad = mellin_H_quadrature(table_mid, s)
        assert abs(quad.value - mellin_H_closed(s)) <= 1e-3

    def test_zero_hook(self, table_small):
        quad = mellin_H_quadrature(table_small, 2.0, delta_fn=lambda u: 0.0)
        assert quad.value == 0.0

    def test_domain(self, table_small):
        with pytest.raises(DomainError):
            mellin_H_quadrature(table_small, complex(1.5, 0.0))
        with pytest.raises(DomainError):
            mellin_H_quadrature(table_small, 2.0, upper=100.0)


class TestGaussianLine:
    def test_w_zero(self):
        quad, closed = gaussian_line_check(1.0, 0.0)
        assert closed.real == pytest.approx(1.0 / (2.0 * math.sqrt(math.pi)), rel=1e-14)
        assert quad.real == pytest.approx(closed.real, rel=1e-10)

    def test_example_kk1_w2(self):
        quad, closed = gaussian_line_check(1.0, 2.0)
        expected = math.exp(-1.0) / (2.0 * math.sqrt(math.pi))
        assert closed.real == pytest.approx(expected, rel=1e-14)
        assert quad.real == pytest.approx(closed.real, rel=1e-10)

    def test_even_in_w(self):
        qp, cp = gaussian_line_check(2.0, 3.0)
        qm, cm = gaussian_line_check(2.0, -3.0)
        assert cp == cm
        assert qp.real == pytest.approx(qm.real, rel=1e-10)

    def test_random_suite(self, rng):
        for _ in range(100):
            kk = rng.uniform(0.1, 10.0)
            w = rng.uniform(-20.0, 20.0)
            quad, closed = gaussian_line_check(kk, w)  # raises on failure
            assert abs(quad.real - closed.real) <= 1e-10 * max(abs(closed.real), 1e-300)

    def test_domain(self):
        with pytest.raises(DomainError):
            gaussian_line_check(-1.0, 0.0)


class TestUIntegral:
    def test_zero_hook(self, table_small):
        p = PintzParams(mu=math.log(200.0), k=1.0, rho0=RHO1)
        res = U_integral(table_small, p, tol=0.1, delta_fn=lambda u: 0.0)
        assert res.value == 0.0

    def test_panel_refinement(self, table_mid):
        p = PintzParams(mu=math.log(50.0), k=0.3, rho0=RHO1)
        r1 = U_integral(table_mid, p, tol=0.1)
        r2 = U_integral(table_mid, p, tol=0.1, panel_scale=0.5)
        assert abs(r1.value - r2.value) <= 0.1 * max(abs(r1.value), 1e-300)

    def test_capacity_gate(self, table_small):
        p = PintzParams(mu=math.log(200.0), k=1.0, rho0=RHO1)
        from smoothed_pnt.errors import CapacityError

        with pytest.raises(CapacityError):
            U_integral(table_small, p, tol=0.01)

    def test_dual_representation_secondary_point(self, zeros_rh):
        # a second (mu, k) besides the acceptance one
        from smoothed_pnt.sieve import build_lambda

        table = build_lambda(2_000_000)
        p = PintzParams(mu=math.log(60.0), k=0.6, rho0=RHO1)
        ui = U_integral(table, p, tol=0.1)
        ur = U_residue(zeros_rh, p)
        assert abs(ui.value - ur.value) <= 0.1 * abs(ur.value)


class TestUResidue:
    def test_single_zero_dominant_term(self, zeros_rh):
        one = ZeroSet(betas=zeros_rh.betas[:1], gammas=zeros_rh.gammas[:1])
        rho0 = complex(0.6, 10.0)
        p = PintzParams(mu=4.0, k=0.25, rho0=rho0)
        rho1 = complex(one.betas[0], one.gammas[0])
        term = (
            gamma_complex(rho1)
            * rho1
            * cmath.exp(p.k * (rho1 - rho0) ** 2 + p.mu * (rho1 - rho0))
        )
        pole = cmath.exp(p.k * (1 - rho0) ** 2 + p.mu * (1 - rho0))
        conj_term = (
            gamma_complex(rho1.conjugate())
            * rho1.conjugate()
            * cmath.exp(
                p.k * (rho1.conjugate() - rho0) ** 2 + p.mu * (rho1.conjugate() - rho0)
            )
        )
        res = U_residue(one, p)
        assert res.value == pytest.approx(pole + term + conj_term, rel=1e-10)

    def test_reference_zero_term_is_k_independent(self, zeros_rh):
        one = ZeroSet(betas=zeros_rh.betas[:1], gammas=zeros_rh.gammas[:1])
        p_lo = PintzParams(mu=math.log(200.0), k=0.5, rho0=RHO1)
        p_hi = PintzParams(mu=math.log(200.0), k=2.0, rho0=RHO1)
        v_lo = U_residue(one, p_lo).value
        v_hi = U_residue(one, p_hi).value
        expected = gamma_complex(RHO1) * RHO1
        assert v_lo == pytest.approx(expected, rel=1e-6)
        assert v_hi == pytest.approx(expected, rel=1e-6)

    def test_remainder_envelope_attached(self, zeros_rh):
        p = PintzParams(mu=math.log(200.0), k=1.0, rho0=RHO1)
        res = U_residue(zeros_rh, p)
        assert res.error == pytest.approx(math.exp(-p.mu + 2.25 * p.k), rel=1e-12)

    def test_empty_set(self):
        zs = ZeroSet(betas=np.array([]), gammas=np.array([]))
        p = PintzParams(mu=1.0, k=1.0, rho0=RHO1)
        from smoothed_pnt.errors import EmptySetError

        with pytest.raises(EmptySetError):
            U_residue(zs, p)


class TestTuran:
    def test_single_exponent(self):
        gmax, bound = turan_bound([0.0], 1.0, 2.0)
        assert gmax == pytest.approx(1.0, rel=1e-12)
        assert bound == pytest.approx(2.0 / (8 * math.e * 3.0), rel=1e-12)
        assert gmax >= bound

    def test_two_exponents(self):
        gmax, bound = turan_bound([0.0, 1j * math.pi], 1.0, 2.0)
        assert gmax >= 0.99 * bound
        assert gmax == pytest.approx(2.0, abs=1e-6)  # constructive max at even t

    def test_normalization_guard(self):
        with pytest.raises(NormalizationError):
            turan_bound([complex(-0.5, 1.0)], 1.0, 1.0)
        with pytest.raises(NormalizationError):
            turan_bound([complex(-0.5, 0.0), 0.0], 1.0, 1.0)

    def test_domain(self):
        with pytest.raises(DomainError):
            turan_bound([0.0], 0.0, 1.0)
        with pytest.raises(DomainError):
            turan_bound(np.zeros(40, dtype=complex), 1.0, 1.0)

    def test_random_contract(self, rng):
        for _ in range(200):
            n = int(rng.integers(1, 9))
            alphas = np.zeros(n, dtype=complex)
            alphas[0] = 1j * rng.uniform(-10, 10)
            if n > 1:
                alphas[1:] = rng.uniform(-1, 0, n - 1) + 1j * rng.uniform(-10, 10, n - 1)
            a = rng.uniform(1, 10)
            b = rng.uniform(1, 10)
            gmax, bound = turan_bound(alphas, a, b)
            assert gmax >= 0.99 * bound
