"""The deviation-metric family: W, omega, omega_eta, varpi, and log ratios.

W(x) bounds the zero-sum contribution, S(x) and D(x) (from .smooth) the
actual deviation, and the omega transforms put everything on the same
logarithmic yardstick.  One caveat belongs up front: at desk scale W(x)
is NOT above S(x).  The comparison only kicks in once the first-zero
term c*sqrt(x) with c = 2|Gamma(rho_1 + 1)|/gamma_1 ~ 1.1e-9 absorbs the
constant log 2pi, i.e. for x beyond roughly 1e18.  Nothing here asserts
W >= S and no test should.

Zero-free-region profiles eta(u) come in three kinds: a constant, the
classical shape c / max(log(u + e), 1), or a tabulated staircase.  The
height argument passed to eta is a convention choice (height t versus
log-height log t); both appear in the literature and both are supported,
explicitly, by the `convention` argument of eta_from_zeros.
"""

import math
from dataclasses import dataclass
from typing import NamedTuple, Optional

import numpy as np
from scipy.optimize import minimize_scalar

from .errors import DomainError, ParseError, RangeError
from .specfun import loggamma
from .zeros import ZeroSet

__all__ = [
    "EtaFunction",
    "load_eta",
    "eta_from_zeros",
    "MetricsRow",
    "zero_sum_W",
    "omega_zero",
    "omega_eta",
    "varpi",
    "omega_from_value",
    "Minimum",
]


@dataclass(frozen=True)
class EtaFunction:
    """A non-increasing zero-free-region profile valued in (0, 1/2]."""

    kind: str
    c: float = 0.5
    table: Optional[tuple] = None  # (u array, eta array) for kind="tabulated"

    def __post_init__(self):
        if self.kind not in ("constant", "classical", "tabulated"):
            raise DomainError(f"unknown eta kind {self.kind!r}")
        if self.kind in ("constant", "classical"):
            if not (0.0 < self.c <= 0.5):
                raise DomainError("eta parameter must lie in (0, 1/2]")
        else:
            us, vs = self.table
            us = np.asarray(us, dtype=float)
            vs = np.asarray(vs, dtype=float)
            if len(us) == 0 or np.any(np.diff(us) <= 0.0):
                raise DomainError("tabulated eta needs strictly ascending u")
            if np.any(vs <= 0.0) or np.any(vs > 0.5):
                raise DomainError("tabulated eta values must lie in (0, 1/2]")
            if np.any(np.diff(vs) > 0.0):
                raise DomainError("tabulated eta must be non-increasing")
            object.__setattr__(self, "table", (us, vs))

    @classmethod
    def constant(cls, c):
        return cls(kind="constant", c=c)

    @classmethod
    def classical(cls, c):
        return cls(kind="classical", c=c)

    @classmethod
    def tabulated(cls, us, values):
        return cls(kind="tabulated", table=(us, values))

    def __call__(self, u):
        u = np.asarray(u, dtype=float)
        if self.kind == "constant":
            out = np.full(u.shape, self.c)
        elif self.kind == "classical":
            out = np.clip(self.c / np.maximum(np.log(u + math.e), 1.0), None, 0.5)
        else:
            us, vs = self.table
            # step interpolation, held constant beyond the ends
            idx = np.clip(np.searchsorted(us, u, side="right") - 1, 0, len(us) - 1)
            out = vs[idx]
        return float(out) if out.ndim == 0 else out


def load_eta(path):
    """Tabulated eta from a text file of "u value" pairs ('#' comments)."""
    us, vs = [], []
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            fields = line.split()
            if len(fields) != 2:
                raise ParseError("expected 'u value'", line=lineno)
            try:
                us.append(float(fields[0]))
                vs.append(float(fields[1]))
            except ValueError as exc:
                raise ParseError(str(exc), line=lineno) from None
    if not us:
        raise ParseError(f"no entries in {path}")
    return EtaFunction.tabulated(np.array(us), np.array(vs))


def eta_from_zeros(zeros: ZeroSet, convention="height"):
    """Largest staircase profile consistent with a zero set.

    eta(u) = min(1/2, min of delta_j over zeros with argument <= u) where
    the argument is gamma_j ("height") or log gamma_j ("log-height").
    By construction eta(arg_j) <= delta_j for every zero, so the region
    sigma > 1 - eta(...) really is zero-free for this set.
    """
    zeros.require_nonempty()
    if convention == "height":
        args = zeros.gammas
    elif convention == "log-height":
        args = np.log(zeros.gammas)
    else:
        raise DomainError(f"unknown convention {convention!r}")
    deltas = 1.0 - zeros.betas
    order = np.argsort(args)
    us, vs = [], []
    running = 0.5
    # a leading segment at 1/2 so eta is defined from u = 0
    us.append(min(0.0, float(args[order[0]]) - 1.0))
    vs.append(0.5)
    for i in order:
        running = min(running, float(deltas[i]), 0.5)
        u = float(args[i])
        if us and u <= us[-1]:
            vs[-1] = min(vs[-1], running)
        else:
            us.append(u)
            vs.append(running)
    return EtaFunction.tabulated(np.array(us), np.array(vs))


@dataclass(frozen=True)
class MetricsRow:
    """One line of the metric family at scale x (what the CLI emits)."""

    x: float
    S: float
    D: float
    W: float
    omega: float
    omega_S: float
    omega_D: float
    omega_W: float


def metrics_row(table, zeros: ZeroSet, x, grid=64, tol=1e-6):
    """Assemble a MetricsRow; the omega_V columns are log(x/V) by construction."""
    from .smooth import avg_metric, sup_metric

    S = sup_metric(table, x, grid=grid, tol=tol)
    D = avg_metric(table, x, panels=grid, tol=tol).value
    W = zero_sum_W(max(x, 1.0), zeros)
    return MetricsRow(
        x=float(x),
        S=S,
        D=D,
        W=W,
        omega=omega_zero(x, zeros) if x > 1.0 else float("nan"),
        omega_S=omega_from_value(x, S),
        omega_D=omega_from_value(x, D),
        omega_W=omega_from_value(x, W),
    )


def zero_sum_W(x, zeros: ZeroSet):
    """W(x) = sum over zeros (conjugates doubled) of |Gamma(rho+1)| x^beta / gamma."""
    zeros.require_nonempty()
    if x < 1.0:
        raise DomainError("x must be >= 1")
    log_x = math.log(x)
    total = 0.0
    for b, g in zip(zeros.betas, zeros.gammas):
        expo = loggamma(complex(b + 1.0, g)).real + b * log_x - math.log(g)
        if expo > -745.0:
            total += 2.0 * math.exp(expo)
    return total


def zero_sum_W_terms(x, zeros: ZeroSet):
    """Per-zero contributions to W(x), for dominance diagnostics."""
    zeros.require_nonempty()
    log_x = math.log(x)
    out = np.empty(len(zeros))
    for i, (b, g) in enumerate(zip(zeros.betas, zeros.gammas)):
        expo = loggamma(complex(b + 1.0, g)).real + b * log_x - math.log(g)
        out[i] = 0.0 if expo <= -745.0 else 2.0 * math.exp(expo)
    return out


def omega_zero(x, zeros: ZeroSet):
    """omega(x) = min over stored zeros of ((1 - beta) log x + log gamma)."""
    zeros.require_nonempty()
    if x <= 1.0:
        raise DomainError("x must be > 1")
    vals = (1.0 - zeros.betas) * math.log(x) + np.log(zeros.gammas)
    return float(np.min(vals))


class Minimum(NamedTuple):
    value: float
    minimizer: float


def _grid_golden_min(f, grid):
    """Grid scan plus golden-section refinement on the best bracket.

    The objectives here are sums of one decreasing and one increasing
    term, near-unimodal but possibly flat; the 1024-point grid guards
    against the refinement latching onto the wrong valley.
    """
    vals = np.array([f(t) for t in grid])
    i = int(np.argmin(vals))
    if 0 < i < len(grid) - 1:
        try:
            res = minimize_scalar(
                f,
                bracket=(grid[i - 1], grid[i], grid[i + 1]),
                method="golden",
                options={"xtol": 1e-12},
            )
            if res.fun <= vals[i]:
                return Minimum(float(res.fun), float(res.x))
        except ValueError:
            pass  # flat bracket; keep the grid point
    return Minimum(float(vals[i]), float(grid[i]))


def omega_eta(x, eta: EtaFunction, grid_points=1024):
    """omega_eta(x) = inf over t >= 1 of (eta(t) log x + log t).

    Searches t in [1, x^2]: beyond that log t alone already exceeds the
    value at t = 1 for any eta <= 1/2.  Returns the minimizing t too.
    """
    if x <= 1.0:
        raise DomainError("x must be > 1")
    log_x = math.log(x)

    def f(t):
        return float(eta(t)) * log_x + math.log(t)

    grid = np.exp(np.linspace(0.0, 2.0 * log_x, grid_points))
    return _grid_golden_min(f, grid)


def varpi(x, eta: EtaFunction, grid_points=1024):
    """varpi(x) = min over u >= 0 of (eta(u) log x + u), searched on [0, log x + 10]."""
    if x <= 1.0:
        raise DomainError("x must be > 1")
    log_x = math.log(x)

    def f(u):
        return float(eta(u)) * log_x + u

    grid = np.linspace(0.0, log_x + 10.0, grid_points)
    return _grid_golden_min(f, grid)


def omega_from_value(x, v):
    """log(x / v): the log-ratio transform behind omega_S, omega_D, omega_W."""
    if x <= 0.0:
        raise RangeError("x must be positive")
    if v <= 0.0:
        raise DomainError("value must be positive to take log(x/v)")
    return math.log(x) - math.log(v)
