#!/usr/bin/env python3
"""Smoothed prime sums and their limit constant.

Walks through the three basic objects: the smoothed Chebyshev sum
Psi(x), the geometric baseline I(x), and their difference Delta(x).
Shows the smoothed prime-counting trend Psi(x)/x -> 1 and the
convergence of Delta(x) to 1/2 - log 2pi, including the negative
control: the frequently quoted constant -log 2pi misses by exactly 1/2.
"""

import math

import numpy as np

from smoothed_pnt.sieve import build_lambda, chebyshev_psi
from smoothed_pnt.smooth import DELTA_LIMIT, delta, smooth_baseline

print(__doc__)

table = build_lambda(500_000)
print(f"sieved Lambda up to {table.limit}; psi(1e5) = {chebyshev_psi(table, 1e5):.3f}")
print()

print(f"{'x':>10} {'psi/x':>12} {'Delta(x)':>14} {'Delta - limit':>14}")
for x in np.geomspace(10, 1e4, 7):
    pt = delta(table, x, tol=1e-9)
    print(
        f"{x:>10.1f} {pt.psi / x:>12.6f} {pt.delta:>14.8f} "
        f"{pt.delta - DELTA_LIMIT:>14.2e}"
    )

print()
print(f"limit constant 1/2 - log 2pi = {DELTA_LIMIT:.10f}")
d4 = delta(table, 1e4, tol=1e-9).delta
print(f"Delta(1e4)                   = {d4:.10f}")
print(f"|deviation|                  = {abs(d4 - DELTA_LIMIT):.2e}  (tolerance 1e-3)")
bad = -math.log(2 * math.pi)
print(f"negative control vs -log 2pi: off by {abs(d4 - bad):.4f} (should be ~0.5)")

print()
print("cancellation-safe baseline at large x: I(x) ~ x - 1/2 + 1/(12x)")
for x in (1e4, 1e6):
    i = smooth_baseline(x)
    print(f"  x = {x:g}: I(x) - (x - 1/2) = {i - (x - 0.5):.3e}  vs 1/(12x) = {1/(12*x):.3e}")
