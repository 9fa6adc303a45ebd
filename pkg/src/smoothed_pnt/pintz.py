"""Analytic lower-bound machinery: the Mellin transform H(s), the Gaussian
line-integral identity, the smoothing integral U(mu) in both of its
representations, and a numerical verifier for the Turan power-sum bound.

The two U representations form the main cross-check.  U_integral works
purely from the sieved table (the u-side), U_residue purely from a zero
set (the s-side); neither sees the other's data, which is the point.
U_residue omits the shifted-contour remainder and instead attaches the
crude envelope e^{-mu + 9k/4} as reported uncertainty; at the parameter
scales used here the actual remainder is orders of magnitude smaller
(the Gamma factor on the shifted line decays like e^{-pi Im /2}), so the
attached bound is honest but very loose.

The Turan bound verified here is  max_{a<=t<=a+b} |sum_j e^{alpha_j t}|
>= (b / (8e(a+b)))^n.  The denominator of this bound is frequently
misprinted as 8e(a + b/b), which is dimensionally incoherent; the form
used here is the standard one, and the verifier makes it falsifiable.
"""

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np
from scipy.optimize import minimize_scalar
from scipy.special import roots_legendre

from .errors import (
    CapacityError,
    DomainError,
    NormalizationError,
    ToleranceError,
)
from .sieve import LambdaTable
from .smooth import DELTA_LIMIT, smooth_baseline, weighted_exp_sum
from .specfun import gamma_complex, loggamma, zeta_em, zeta_logderiv
from .zeros import ZeroSet

__all__ = [
    "PintzParams",
    "mellin_H_closed",
    "mellin_H_quadrature",
    "gaussian_line_check",
    "U_integral",
    "U_residue",
    "turan_bound",
    "QuadResult",
]


@dataclass(frozen=True)
class PintzParams:
    """Free parameters of the smoothing integral: center, width, reference zero."""

    mu: float
    k: float
    rho0: complex

    def __post_init__(self):
        if self.k <= 0.0:
            raise DomainError("k must be positive")
        r = complex(self.rho0)
        if not (0.0 < r.real < 1.0) or r.imag <= 0.0:
            raise DomainError("rho0 must satisfy 0 < Re < 1 and Im > 0")
        object.__setattr__(self, "rho0", r)


class QuadResult(NamedTuple):
    value: complex
    error: float


def mellin_H_closed(s):
    """H(s) = s Gamma(s) (zeta'/zeta(s) + zeta(s)), the closed form (Re s > 1)."""
    s = complex(s)
    if s.real <= 1.0:
        raise DomainError("closed form requires Re s > 1")
    return s * gamma_complex(s) * (zeta_logderiv(s) + zeta_em(s))


def _loose_cutoff(u, eps):
    """Direct tail bound for sum_{n>M} log(n) e^{-n/u}: first-term/(1-ratio) style."""
    u = max(u, 1.0)
    m = u * max(5.0, math.log(2.4 * u * 20.0 / eps))
    for _ in range(40):
        m_new = u * math.log(2.4 * u * (math.log(m) + 1.0) / eps)
        if abs(m_new - m) < 1.0:
            break
        m = m_new
    return int(m) + 1


def _delta_point(table, u, eps, delta_fn=None):
    """Delta(u) to absolute accuracy ~eps, cheap tail rule (not the certified one)."""
    if delta_fn is not None:
        return float(delta_fn(u))
    if u < 0.004:
        return 0.0
    cutoff = min(_loose_cutoff(u, eps), table.limit)
    psi = weighted_exp_sum(table.values[1 : cutoff + 1], u)
    return psi - smooth_baseline(u)


def mellin_H_quadrature(table: LambdaTable, s, upper=2000.0, delta_fn=None):
    """H(s) from its integral form: -s * integral of Delta(u) u^{-s-1} du.

    Composite Gauss-Legendre in log u on [0.02, upper]; the omitted head
    is doubly-exponentially small and the tail beyond `upper` is bounded
    with the trivial |Delta| envelope and folded into the reported error.
    Requires Re s >= 2 and upper >= 1e3; raises ToleranceError when the
    estimate exceeds 1e-4.
    """
    s = complex(s)
    if s.real < 2.0:
        raise DomainError("quadrature form requires Re s >= 2")
    if upper < 1e3:
        raise DomainError("upper must be at least 1e3")
    u_min = 0.02
    node_eps = 1e-10
    h = 0.5 / max(abs(s.imag), 1.0)
    m = 10
    xg, wg = roots_legendre(m)
    v_lo, v_hi = math.log(u_min), math.log(upper)
    n_panels = int(math.ceil((v_hi - v_lo) / h))
    edges = np.linspace(v_lo, v_hi, n_panels + 1)

    def integral(step):
        total = 0j
        for i in range(0, n_panels, step):
            va, vb = edges[i], edges[min(i + step, n_panels)]
            mid, rad = 0.5 * (va + vb), 0.5 * (vb - va)
            for xx, ww in zip(xg, wg):
                v = mid + rad * xx
                u = math.exp(v)
                d = _delta_point(table, u, node_eps, delta_fn)
                total += ww * rad * d * np.exp(-s * v)
        return -s * total

    fine = integral(1)
    coarse = integral(2)
    d_upper = abs(_delta_point(table, upper, 1e-6, delta_fn))
    tail = max(2.0, 1.5 * d_upper) * abs(s) * upper ** (-s.real) / s.real
    head = 3.0 * math.exp(-1.0 / u_min) * abs(s) * u_min ** (-s.real)
    est = abs(fine - coarse) + tail + head + node_eps * abs(s) * 60.0
    if est > 1e-4:
        raise ToleranceError(f"H quadrature error estimate {est:.2e} > 1e-4")
    return QuadResult(value=complex(fine), error=float(est))


def gaussian_line_check(kk, w, height=None):
    """Quadrature vs closed form for (1/2pi i) int exp(kk s^2 + w s) ds.

    The closed form is exp(-w^2/(4 kk)) / (2 sqrt(pi kk)).  The vertical
    line defaults to Re s = 2; when evaluating there would demand more
    cancellation than binary64 carries (the integrand modulus exceeds
    the answer by e^{kk(2 + w/2kk)^2}), the line is shifted toward the
    saddle at -w/(2 kk), offset by 2/sqrt(kk) so the quadrature still
    exercises genuine oscillation.  Any vertical line gives the same
    integral; the shift is pure conditioning.
    """
    if kk <= 0.0:
        raise DomainError("kk must be positive")
    sigma = 2.0
    if kk * (sigma + w / (2.0 * kk)) ** 2 > 8.0:
        sigma = -w / (2.0 * kk) + 2.0 / math.sqrt(kk)
    omega = abs(2.0 * kk * sigma + w)
    if height is None:
        height = 10.0 / math.sqrt(kk) + (abs(w) / kk if sigma == 2.0 else 0.0) + 2.0
    h = 0.5 / max(omega, math.sqrt(kk), 1.0)
    xg, wg = roots_legendre(12)
    n_panels = int(math.ceil(2.0 * height / h))
    edges = np.linspace(-height, height, n_panels + 1)
    mids = 0.5 * (edges[:-1] + edges[1:])
    rads = 0.5 * (edges[1:] - edges[:-1])
    t = (mids[:, None] + rads[:, None] * xg[None, :]).ravel()
    weights = (rads[:, None] * wg[None, :]).ravel()
    s = sigma + 1j * t
    vals = np.exp(kk * s * s + w * s)
    quad = complex(np.sum(weights * vals) / (2.0 * math.pi))
    arg = -w * w / (4.0 * kk)
    closed = complex(math.exp(arg) / (2.0 * math.sqrt(math.pi * kk)) if arg > -745 else 0.0)
    scale = max(abs(closed), 1e-300)
    if abs(quad.real - closed.real) > 1e-10 * scale or abs(quad.imag) > 1e-12 * max(
        1.0, scale
    ):
        raise ToleranceError(
            f"gaussian line check failed: quad={quad!r} closed={closed!r}"
        )
    return quad, closed


def _g_weight(u, p: PintzParams):
    """g(u) = u^{-rho0} exp(-(mu - log u)^2 / 4k); accepts scalars or arrays."""
    lu = np.log(u)
    return np.exp(-p.rho0 * lu - (p.mu - lu) ** 2 / (4.0 * p.k))


def _g_prime_times_u(u, p: PintzParams):
    """u * g'(u) = u^{-rho0} e^{-(mu-log u)^2/4k} (-rho0 + (mu - log u)/2k)."""
    lu = np.log(u)
    return np.exp(-p.rho0 * lu - (p.mu - lu) ** 2 / (4.0 * p.k)) * (
        -p.rho0 + (p.mu - lu) / (2.0 * p.k)
    )


def U_integral(table: LambdaTable, p: PintzParams, tol=0.1, delta_fn=None, panel_scale=1.0):
    """The smoothing integral from the u-side:

        U = (1/(2 sqrt(pi k))) * int Delta(u) d/du[u^{-rho0} e^{-(mu-log u)^2/4k}] du

    over the window [e^{mu-width}, e^{mu+width}], width = 6 sqrt(k log(1/tol)).

    The smooth limit constant of Delta is split off and integrated in
    closed form (the integrand is an exact derivative, so this is an
    identity, not an approximation; it only reduces the cancellation the
    quadrature has to resolve).  The oscillatory remainder is integrated
    by adaptive Gauss-Legendre panels in log u, which stop once panel
    contributions fall below the running tolerance; what remains of the
    window is covered by an empirical envelope bound from probe
    evaluations, reported inside `error` together with head/tail bounds.
    """
    if tol <= 0.0 or tol >= 1.0:
        raise DomainError("tol must lie in (0, 1)")
    width = 6.0 * math.sqrt(p.k * math.log(1.0 / tol))
    b = math.exp(p.mu + width)
    pref = 1.0 / (2.0 * math.sqrt(math.pi * p.k))
    if delta_fn is None and _loose_cutoff(b, 1e-5) > table.limit:
        raise CapacityError(
            f"window reaches u = {b:.3g}, beyond table limit {table.limit}"
        )
    c_split = 0.0 if delta_fn is not None else DELTA_LIMIT
    gamma0 = abs(p.rho0.imag)
    h = min(0.7 / max(gamma0, 1.0), 0.25 * math.sqrt(p.k)) * panel_scale
    m = 12
    xg, wg = roots_legendre(m)
    # march a little below the nominal window: the integrand there is
    # doubly-exponentially small and cheap, and it shrinks the head bound
    y_lo = max(math.log(0.004) - p.mu, -width - 8.0)

    def run(node_eps):
        total = 0j
        weight_mass = 0.0
        y_stop = width
        small_run = 0
        y = y_lo
        while y < width - 1e-12:
            yb = min(y + h, width)
            mid, rad = 0.5 * (y + yb), 0.5 * (yb - y)
            panel = 0j
            for xx, ww in zip(xg, wg):
                u = math.exp(p.mu + mid + rad * xx)
                d = _delta_point(table, u, node_eps, delta_fn) - c_split
                gw = _g_prime_times_u(u, p)
                panel += ww * rad * d * gw
                weight_mass += ww * rad * abs(gw)
            total += panel
            y = yb
            if y > 0.0 and abs(panel) < tol * max(abs(total), 1e-300) / 50.0:
                small_run += 1
                if small_run >= 4:
                    y_stop = y
                    break
            else:
                small_run = 0
        return total, weight_mass, y_stop

    node_eps = 1e-8
    total, weight_mass, y_stop = run(node_eps)
    if delta_fn is None:
        refined = max(1e-13, tol * abs(total) / max(30.0 * weight_mass, 1.0))
        if refined < node_eps:
            node_eps = refined
            total, weight_mass, y_stop = run(node_eps)
    # the constant's share over the full half line is exactly zero
    # (int c g' du = c [g] with g vanishing at both ends), so splitting it
    # off leaves one exact boundary term at the start of the march; the
    # far end is inside the envelope bound below since Delta - c decays
    const_term = -c_split * _g_weight(math.exp(p.mu + y_lo), p)
    # tail envelope for the skipped [y_stop, width] from probe evaluations
    tail_bound = 0.0
    if y_stop < width - 1e-9 and delta_fn is None:
        u_stop = math.exp(p.mu + y_stop)
        probes = np.geomspace(u_stop, b, 6)
        env = max(abs(_delta_point(table, u, 1e-7) - c_split) for u in probes)
        # cover the skipped stretch plus the beyond-window residue of the
        # Gaussian weight (the envelope is taken non-increasing past b)
        ys = np.linspace(y_stop, width + 6.0, 240)
        us = np.exp(p.mu + ys)
        wts = np.abs(_g_prime_times_u(us, p))
        tail_bound = 3.0 * env * float(np.trapezoid(wts, ys))
    u_head = math.exp(p.mu + y_lo)
    head_bound = 3.0 * math.exp(-1.0 / u_head) * abs(_g_prime_times_u(u_head, p))
    node_error = 0.0 if delta_fn is not None else node_eps * weight_mass
    err = pref * (node_error + tail_bound + head_bound)
    err += tol * abs(pref * (total + const_term)) * 0.1  # quadrature share
    value = pref * (total + const_term)
    if err > tol * max(abs(value), 1e-300) + 1e-12:
        raise ToleranceError(
            f"U_integral error estimate {err:.2e} exceeds tol*|U| + 1e-12"
        )
    return QuadResult(value=complex(value), error=float(err))


def U_residue(zeros: ZeroSet, p: PintzParams):
    """The smoothing integral from the s-side: pole term plus zero sum.

    exp(k(1-rho0)^2 + mu(1-rho0)) + sum over zeros rho (conjugates
    entered explicitly: the summand is not conjugate-symmetric because
    rho0 sits in the upper half plane) of Gamma(rho) rho exp(k(rho-rho0)^2
    + mu(rho-rho0)).  The shifted-contour remainder is not computed; the
    envelope e^{-mu + 9k/4} ships as `error`.
    """
    zeros.require_nonempty()
    pole_exp = p.k * (1.0 - p.rho0) ** 2 + p.mu * (1.0 - p.rho0)
    total = np.exp(pole_exp) if pole_exp.real > -745.0 else 0j
    for beta, gamma in zip(zeros.betas, zeros.gammas):
        for sign in (1.0, -1.0):
            rho = complex(beta, sign * gamma)
            expo = (
                loggamma(rho)
                + np.log(rho)
                + p.k * (rho - p.rho0) ** 2
                + p.mu * (rho - p.rho0)
            )
            if expo.real > -745.0:
                total += np.exp(expo)
    remainder = math.exp(min(709.0, -p.mu + 2.25 * p.k))
    return QuadResult(value=complex(total), error=float(remainder))


def turan_bound(alphas, a, b, refine=1):
    """Grid maximum of |sum_j e^{alpha_j t}| on [a, a+b] against the power-sum bound.

    Returns (grid_max, bound) with bound = (b/(8e(a+b)))^n.  The grid max
    is a lower bound on the true maximum, so the verified contract is
    grid_max >= 0.99 * bound.  Callers must normalize: max Re alpha_j = 0,
    attained by the first entry.
    """
    alphas = np.asarray(alphas, dtype=complex)
    n = len(alphas)
    if not (1 <= n <= 32):
        raise DomainError("need 1 to 32 exponents")
    if not (0.0 < a <= 100.0 and 0.0 < b <= 100.0):
        raise DomainError("a, b must lie in (0, 100]")
    re = alphas.real
    if abs(re.max()) > 1e-12 or abs(re[0]) > 1e-12:
        raise NormalizationError(
            "max Re(alpha) must be 0 and attained by the first exponent"
        )
    ts = np.linspace(a, a + b, 10_000 * int(refine))
    vals = np.abs(np.exp(np.outer(alphas, ts)).sum(axis=0))
    i = int(np.argmax(vals))
    grid_max = float(vals[i])

    def neg_abs(t):
        return -abs(np.exp(alphas * t).sum())

    lo = ts[max(i - 1, 0)]
    hi = ts[min(i + 1, len(ts) - 1)]
    if lo < ts[i] < hi:
        try:
            res = minimize_scalar(neg_abs, bracket=(lo, ts[i], hi), method="golden")
            grid_max = max(grid_max, float(-res.fun))
        except ValueError:
            pass  # flat bracket; the grid value stands
    bound = (b / (8.0 * math.e * (a + b))) ** n
    return grid_max, bound
