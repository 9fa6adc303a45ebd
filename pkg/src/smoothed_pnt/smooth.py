"""Exponentially smoothed prime sums and the sup/average deviation metrics.

The central objects: Psi(x) = sum Lambda(n) e^{-n/x}, the geometric
baseline I(x) = sum e^{-n/x} = 1/(e^{1/x} - 1), and their difference
Delta(x).  As x grows, Delta(x) converges to the constant 1/2 - log 2pi.
A widely quoted form of the explicit-formula display gives this constant
as -log 2pi; direct summation pins it at 1/2 - log 2pi (the extra 1/2 is
the second term of the baseline's Laurent expansion 1/(e^y - 1) =
1/y - 1/2 + y/12 - ...), and that is the value this package certifies.

Every "max/average over a continuum" here is a grid approximation that
certifies a one-sided bound: sup_metric never exceeds the true sup, and
avg_metric reports its own trapezoid error estimate.
"""

import math
from dataclasses import dataclass
from typing import Callable, NamedTuple, Optional

import numpy as np

from .errors import CapacityError, RangeError
from .sieve import LambdaTable

__all__ = [
    "DELTA_LIMIT",
    "SmoothedPoint",
    "smooth_baseline",
    "truncation_cutoff",
    "smooth_psi",
    "delta",
    "hybrid_grid",
    "sup_metric",
    "avg_metric",
    "AvgMetric",
]

#: lim_{x->inf} Delta(x), certified by the direct-summation oracle.
DELTA_LIMIT = 0.5 - math.log(2.0 * math.pi)


@dataclass(frozen=True)
class SmoothedPoint:
    """One evaluation of the smoothed sums at scale x."""

    x: float
    psi: float
    baseline: float
    delta: float
    cutoff: int
    tail_bound: float


def smooth_baseline(x):
    """I(x) = 1/(e^{1/x} - 1), cancellation-safe for large x via expm1."""
    if x <= 0.0:
        raise RangeError("x must be positive")
    return 1.0 / math.expm1(1.0 / x)


def truncation_cutoff(x, tol):
    """Smallest M >= 10x with (M log M) e^{-M/x} x <= tol.

    The left side dominates the omitted tail sum_{n>M} (log n) e^{-n/x}
    by an integral comparison, so stopping at M certifies the tail.
    """
    if x <= 0.0:
        raise RangeError("x must be positive")
    if tol <= 0.0:
        raise RangeError("tol must be positive")

    def log_bound(m):
        return math.log(m) + math.log(math.log(m)) - m / x + math.log(x)

    lo = max(20, int(math.ceil(10.0 * x)))
    log_tol = math.log(tol)
    if log_bound(lo) <= log_tol:
        return lo
    hi = lo
    while log_bound(hi) > log_tol:
        hi *= 2
    while lo + 1 < hi:
        mid = (lo + hi) // 2
        if log_bound(mid) > log_tol:
            lo = mid
        else:
            hi = mid
    return hi


_BLOCK = 4096


def weighted_exp_sum(coeffs, x):
    """sum_{n=1}^{M} coeffs[n-1] * e^{-n/x} for a contiguous coefficient array.

    For long arrays the factorization e^{-(qB+m)/x} = e^{-qB/x} e^{-m/x}
    replaces M exp() calls with ~2 sqrt(M) of them plus two BLAS dots;
    each weight is then a product of two correctly rounded factors (a
    couple of ulp), far below every tolerance used in this package.
    """
    M = len(coeffs)
    if M == 0:
        return 0.0
    if M < 2 * _BLOCK:
        n = np.arange(1, M + 1, dtype=float)
        return float(np.dot(coeffs, np.exp(-n / x)))
    B = _BLOCK
    Q = M // B
    inner = np.exp(-np.arange(1, B + 1, dtype=float) / x)
    outer = np.exp(-(B / x) * np.arange(Q, dtype=float))
    total = float(outer @ (coeffs[: Q * B].reshape(Q, B) @ inner))
    rem = coeffs[Q * B :]
    if len(rem):
        n = np.arange(Q * B + 1, M + 1, dtype=float)
        total += float(np.dot(rem, np.exp(-n / x)))
    return total


def _psi_sum(table, x, cutoff):
    return weighted_exp_sum(table.values[1 : cutoff + 1], x)


def smooth_psi(table: LambdaTable, x, tol=1e-9):
    """Psi(x) truncated with a certified tail bound.

    CapacityError when the table cannot reach the cutoff the tolerance
    demands.  The returned point also carries baseline and delta (they
    cost nothing extra, and delta = psi - baseline in one rounding).
    """
    cutoff = truncation_cutoff(x, tol)
    if cutoff > table.limit:
        raise CapacityError(
            f"cutoff {cutoff} exceeds table limit {table.limit} (x={x:g}, tol={tol:g})"
        )
    psi = _psi_sum(table, x, cutoff)
    baseline = smooth_baseline(x)
    tail = math.exp(
        math.log(cutoff) + math.log(math.log(cutoff)) - cutoff / x + math.log(x)
    )
    return SmoothedPoint(
        x=float(x),
        psi=psi,
        baseline=baseline,
        delta=psi - baseline,
        cutoff=cutoff,
        tail_bound=tail,
    )


def delta(table: LambdaTable, x, tol=1e-9):
    """Delta(x) = Psi(x) - I(x) with both sums at the matched cutoff."""
    return smooth_psi(table, x, tol=tol)


def hybrid_grid(x, points=2048, include_zero=False):
    """Sampling grid for the sup/average metrics on (0, x].

    Geometric points on [1, x] catch the slow global drift, a linear
    block on [max(1, x/10), x] resolves the fine structure near x, and a
    short geometric run on [0.02, 1] covers the essentially-zero head.
    Doubling `points` refines every block in place, so grids nest and
    grid maxima are monotone under refinement.
    """
    if x <= 0.0:
        raise RangeError("x must be positive")
    if points < 16:
        raise RangeError("points must be at least 16")
    m = int(points)
    if x <= 1.0:
        lo = min(0.02, x / 8.0)
        parts = [lo * (x / lo) ** (np.arange(m + 1) / m)]
    else:
        j = np.arange(m + 1) / m
        head = 0.02 * (1.0 / 0.02) ** j
        geo = x**j
        lin_lo = max(1.0, x / 10.0)
        lin = lin_lo + (x - lin_lo) * j
        parts = [head, geo, lin, np.array([float(x)])]
    grid = np.unique(np.concatenate(parts))
    if include_zero:
        grid = np.concatenate([[0.0], grid])
    return grid


def delta_on_grid(table, us, tol=1e-9, delta_fn: Optional[Callable] = None):
    """Delta at every grid point; the hook replaces the integrand in tests."""
    if delta_fn is not None:
        return np.array([delta_fn(u) for u in us], dtype=float)
    out = np.empty(len(us))
    for i, u in enumerate(us):
        out[i] = 0.0 if u == 0.0 else delta(table, u, tol=tol).delta
    return out


def sup_metric(table, x, grid=2048, tol=1e-9, delta_fn=None):
    """max |Delta(u)| over the hybrid grid: a lower bound on the true sup."""
    us = hybrid_grid(x, points=grid)
    return float(np.max(np.abs(delta_on_grid(table, us, tol=tol, delta_fn=delta_fn))))


class AvgMetric(NamedTuple):
    value: float
    quad_error: float


def avg_metric(table, x, panels=2048, tol=1e-9, delta_fn=None):
    """(1/x) integral of |Delta| over [0, x] by composite trapezoid.

    Uses the same hybrid grid (plus u = 0, where the integrand vanishes)
    and reports a Richardson error estimate from comparing against the
    every-other-point trapezoid.
    """
    us = hybrid_grid(x, points=panels, include_zero=True)
    vals = np.abs(delta_on_grid(table, us, tol=tol, delta_fn=delta_fn))
    full = float(np.trapezoid(vals, us) / x)
    keep = np.zeros(len(us), dtype=bool)
    keep[::2] = True
    keep[-1] = True  # the coarse grid must still end at x
    half = float(np.trapezoid(vals[keep], us[keep]) / x)
    return AvgMetric(value=full, quad_error=abs(full - half) / 3.0)
