import math

import numpy as np
import pytest

from smoothed_pnt.errors import AliasError, CapacityError, DomainError
from smoothed_pnt.goldbach import (
    contour_extract,
    convolve_psik,
    fk_tail_bound,
    psi2_centered,
    smooth_Fk,
)
from smoothed_pnt.smooth import smooth_psi, truncation_cutoff

LOG2 = math.log(2)
LOG3 = math.log(3)


class TestConvolution:
    def test_small_values_k2(self, table_small):
        conv = convolve_psik(table_small, 2, 50)
        assert conv.values[4] == pytest.approx(LOG2**2, rel=1e-14)
        assert conv.values[5] == pytest.approx(2 * LOG2 * LOG3, rel=1e-14)

    def test_small_values_k3(self, table_small):
        conv = convolve_psik(table_small, 3, 50)
        assert conv.values[6] == pytest.approx(LOG2**3, rel=1e-14)

    def test_zero_below_2k_and_nonnegative(self, table_small):
        conv = convolve_psik(table_small, 4, 200)
        assert np.all(conv.values[:8] == 0.0)
        assert np.all(conv.values >= 0.0)

    def test_enumeration_oracle_k2(self, table_small):
        # O(N^2) brute force over ordered pairs
        N = 60
        lam = table_small.values
        for n in range(2, N + 1):
            brute = sum(lam[m] * lam[n - m] for m in range(1, n))
            conv = convolve_psik(table_small, 2, N)
            assert conv.values[n] == pytest.approx(brute, rel=1e-12, abs=1e-15)

    def test_direct_and_fft_agree(self, table_small):
        d = convolve_psik(table_small, 2, 5000, method="direct").values
        f = convolve_psik(table_small, 2, 5000, method="fft").values
        nz = d > 0
        assert np.max(np.abs(f[nz] / d[nz] - 1.0)) <= 1e-9

    def test_k_range_and_capacity(self, table_small):
        with pytest.raises(DomainError):
            convolve_psik(table_small, 9, 100)
        with pytest.raises(CapacityError):
            convolve_psik(table_small, 2, 20_000)


class TestCentered:
    def test_smallest_values(self, table_small):
        c = psi2_centered(table_small, 10)
        assert c[2] == pytest.approx(1.0, rel=1e-14)  # (Lambda(1)-1)^2
        assert c[3] == pytest.approx(2 * (1 - LOG2), rel=1e-14)

    def test_binomial_expansion_identity(self, table_small):
        # psi2_0(n) = psi2(n) - 2 sum_{m<n} Lambda(m) + (n-1)
        N = 100
        c = psi2_centered(table_small, N)
        psi2 = convolve_psik(table_small, 2, N).values
        for n in range(2, N + 1):
            expected = psi2[n] - 2.0 * table_small.prefix[n - 1] + (n - 1)
            assert c[n] == pytest.approx(expected, rel=1e-11, abs=1e-10)


class TestSmoothFk:
    def test_k1_equals_smooth_psi(self, table_mid):
        x = 100.0
        limit = truncation_cutoff(x, 1e-9)
        conv = convolve_psik(table_mid, 1, limit)
        fk = smooth_Fk(conv, x, tol=1e-9)
        assert fk == pytest.approx(smooth_psi(table_mid, x, tol=1e-9).psi, rel=1e-12)

    @pytest.mark.parametrize("k,x,tol", [(2, 50.0, 1e-8), (3, 50.0, 1e-7)])
    def test_power_identity(self, table_small, k, x, tol):
        conv = convolve_psik(table_small, k, 3000)
        fk = smooth_Fk(conv, x, tol=1e-9)
        psi = smooth_psi(table_small, x, tol=1e-12).psi
        assert fk == pytest.approx(psi**k, rel=tol)

    def test_capacity_reports_required_limit(self, table_small):
        conv = convolve_psik(table_small, 2, 100)
        with pytest.raises(CapacityError) as exc:
            smooth_Fk(conv, 50.0, tol=1e-9)
        assert ">=" in str(exc.value)

    def test_tail_bound_conservative(self, table_small):
        # the bound must dominate the actual omitted tail
        x = 20.0
        full = convolve_psik(table_small, 2, 4000)
        short = convolve_psik(table_small, 2, 1200)
        actual_tail = smooth_Fk(full, x, tol=1e-12) - float(
            np.dot(
                short.values[1:],
                np.exp(-np.arange(1, short.limit + 1, dtype=float) / x),
            )
        )
        assert fk_tail_bound(2, 1200, x) >= abs(actual_tail)


class TestContour:
    def test_smallest_case(self, table_small):
        val, imag = contour_extract(table_small, 2, r=math.exp(-0.5))
        assert val == pytest.approx(1.0, rel=1e-10)
        assert imag <= 1e-10

    def test_matches_direct_sum(self, table_small):
        val, imag = contour_extract(table_small, 100, r=math.exp(-0.01))
        direct = float(np.sum(psi2_centered(table_small, 100)[:101]))
        assert val == pytest.approx(direct, rel=1e-6)
        assert imag <= 1e-10

    def test_unsquared_reading_extracts_lambda_sum(self, table_small):
        # the literal (unsquared) generating factor picks out sum (Lambda - 1)
        val, _ = contour_extract(table_small, 100, r=math.exp(-0.01), squared=False)
        expected = float(np.sum(table_small.values[1:101])) - 100.0
        assert val == pytest.approx(expected, rel=1e-6)

    def test_default_radius(self, table_small):
        v1, _ = contour_extract(table_small, 50)
        v2, _ = contour_extract(table_small, 50, r=math.exp(-1.0 / 50))
        assert v1 == v2

    def test_alias_guard(self, table_small):
        with pytest.raises(AliasError):
            contour_extract(table_small, 100, r=math.exp(-0.01), nodes=2000)

    def test_radius_capacity(self, table_small):
        with pytest.raises(CapacityError):
            contour_extract(table_small, 100, r=math.exp(-1.0 / 20_000))

    def test_radius_domain(self, table_small):
        with pytest.raises(DomainError):
            contour_extract(table_small, 100, r=1.5)
