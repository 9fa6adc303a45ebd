#!/usr/bin/env python3
"""The deviation-metric family: S, D, W and the omega transforms.

S(x) is the running sup of |Delta|, D(x) its running average, W(x) the
zero-sum envelope, and omega_V(x) = log(x / V(x)) puts each on the same
log scale.  On matched grids S >= D always holds here.  W >= S does NOT
hold at desk scale and nothing asserts it: the first-zero coefficient
2|Gamma(rho_1 + 1)|/gamma_1 ~ 1.1e-9 only absorbs the constant ~1.84
once sqrt(x) > 1.6e9, i.e. x beyond roughly 1e18.

Also demonstrated: the zero-free-region minimizers omega_eta and varpi,
and the envelope inequality omega_eta <= omega for a profile consistent
with the zero set.
"""


import numpy as np

from smoothed_pnt.metrics import (
    EtaFunction,
    eta_from_zeros,
    omega_eta,
    omega_from_value,
    omega_zero,
    varpi,
    zero_sum_W,
    zero_sum_W_terms,
)
from smoothed_pnt.sieve import build_lambda
from smoothed_pnt.smooth import avg_metric, sup_metric
from smoothed_pnt.specfun import gamma_complex
from smoothed_pnt.zeros import builtin_zeros

print(__doc__)

table = build_lambda(600_000)
zs = builtin_zeros()

print(f"{'x':>8} {'S(x)':>10} {'D(x)':>10} {'W(x)':>12} {'omega':>8} {'omega_S':>8} {'omega_D':>8}")
for x in np.geomspace(10, 1e4, 6):
    S = sup_metric(table, x, grid=64, tol=1e-6)
    D = avg_metric(table, x, panels=64, tol=1e-6).value
    W = zero_sum_W(x, zs)
    print(
        f"{x:>8.0f} {S:>10.5f} {D:>10.5f} {W:>12.3e} "
        f"{omega_zero(x, zs):>8.4f} {omega_from_value(x, S):>8.4f} {omega_from_value(x, D):>8.4f}"
    )
print()

coeff = 2.0 * abs(gamma_complex(complex(1.5, zs.gammas[0]))) / zs.gammas[0]
print(f"first-zero coefficient of W: {coeff:.3e} * sqrt(x)")
print(f"W/S crossover needs sqrt(x) ~ 1.84/{coeff:.2e}, i.e. x ~ {(1.84/coeff)**2:.1e}")
terms = zero_sum_W_terms(1e6, zs)
print(f"at x = 1e6 the first zero carries {100 * terms[0] / terms.sum():.4f}% of W")
print()

print("zero-free-region minimizers (classical profile, c = 0.1):")
eta = EtaFunction.classical(0.1)
for x in (1e3, 1e6):
    oe = omega_eta(x, eta)
    vp = varpi(x, eta)
    print(
        f"  x = {x:g}: omega_eta = {oe.value:.6f} at t = {oe.minimizer:.3f}; "
        f"varpi = {vp.value:.6f} at u = {vp.minimizer:.3f}"
    )
print()

env = eta_from_zeros(zs, convention="height")
print("envelope inequality with the profile derived from the zero set:")
for x in (10.0, 1e3, 1e6):
    print(
        f"  x = {x:>9g}: omega_eta = {omega_eta(x, env).value:.4f} "
        f"<= omega = {omega_zero(x, zs):.4f}"
    )
