"""Nontrivial zeta zeros: location, persistence, and the explicit formula.

Only zeros with gamma > 0 are stored.  Every sum over zeros in this
package doubles the real part of each term to account for the conjugate
zero at -gamma; that convention is global and worth stating once: a
"zero sum" below always means  sum_{gamma>0} 2 Re(term(rho)).

Zero-table file format (also what the CLI emits): UTF-8 text, one zero
per line, either "gamma" (beta assumed 1/2) or "beta gamma" separated by
whitespace, gamma strictly ascending, '#' starts a comment line.
"""

import importlib.resources
import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import brentq

from .errors import DomainError, EmptySetError, OrderError, ParseError
from .smooth import DELTA_LIMIT
from .specfun import hardy_Z, loggamma

__all__ = [
    "ZeroSet",
    "load_zeros",
    "save_zeros",
    "builtin_zeros",
    "find_zeros",
    "riemann_vonmangoldt_count",
    "explicit_delta",
]


@dataclass(frozen=True)
class ZeroSet:
    """Ordered zeros rho = beta + i*gamma with gamma > 0.

    `height` is the completeness bound: every zero with 0 < gamma <=
    height is present.  `assume_rh` forces beta = 1/2 exactly.  Betas are
    stored even under RH so synthetic off-line zeros can be injected for
    experiments.
    """

    betas: np.ndarray
    gammas: np.ndarray
    assume_rh: bool = True
    height: float = 0.0

    def __post_init__(self):
        b = np.asarray(self.betas, dtype=float)
        g = np.asarray(self.gammas, dtype=float)
        object.__setattr__(self, "betas", b)
        object.__setattr__(self, "gammas", g)
        if b.shape != g.shape:
            raise DomainError("betas and gammas must have matching shapes")
        if len(g) and (np.any(g <= 0.0) or np.any(np.diff(g) <= 0.0)):
            raise OrderError("gammas must be positive and strictly ascending")
        if np.any(b <= 0.0) or np.any(b >= 1.0):
            raise DomainError("betas must lie in (0, 1)")
        if self.assume_rh and np.any(b != 0.5):
            raise DomainError("assume_rh requires beta = 1/2 exactly")

    def __len__(self):
        return len(self.gammas)

    def require_nonempty(self):
        if len(self) == 0:
            raise EmptySetError("operation needs at least one zero")


def load_zeros(path):
    """Read a zero table (format in the module docstring)."""
    betas, gammas = [], []
    explicit_beta = False
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            fields = line.split()
            try:
                if len(fields) == 1:
                    b, g = 0.5, float(fields[0])
                elif len(fields) == 2:
                    b, g = float(fields[0]), float(fields[1])
                    explicit_beta = True
                else:
                    raise ValueError("expected 1 or 2 columns")
            except ValueError as exc:
                raise ParseError(str(exc), line=lineno) from None
            if gammas and g <= gammas[-1]:
                raise OrderError(f"line {lineno}: gamma {g} not ascending")
            betas.append(b)
            gammas.append(g)
    if not gammas:
        raise EmptySetError(f"no zeros in {path}")
    return ZeroSet(
        betas=np.array(betas),
        gammas=np.array(gammas),
        assume_rh=not explicit_beta,
        height=gammas[-1],
    )


def save_zeros(zeros: ZeroSet, path):
    """Write a zero table in the shared file format (round-trips exactly)."""
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(f"# zeta zeros, gamma ascending, height {float(zeros.height)!r}\n")
        for b, g in zip(zeros.betas, zeros.gammas):
            if zeros.assume_rh:
                fh.write(f"{float(g)!r}\n")
            else:
                fh.write(f"{float(b)!r} {float(g)!r}\n")


def builtin_zeros():
    """The bundled table of the first 100 critical-line zeros.

    Generated by find_zeros() itself and cross-checked against the
    zero-counting formula; see tests/test_zeros.py for the checks.
    """
    ref = importlib.resources.files("smoothed_pnt").joinpath("data/zeros_rh_100.txt")
    with importlib.resources.as_file(ref) as path:
        return load_zeros(path)


def find_zeros(T, step=0.05):
    """All critical-line zeros with gamma <= T via sign changes of Z.

    Z is sampled on a grid of the given step (contract: step <= 0.05) and
    each sign change refined by Brent bisection to ~1e-10.  Supported for
    10 <= T <= 1e3; at these heights consecutive zeros are separated by
    far more than the grid step, so no pair can hide in one cell.
    """
    if not (10.0 <= T <= 1e3):
        raise DomainError("find_zeros supports 10 <= T <= 1e3")
    if step > 0.05:
        raise DomainError("grid step must be <= 0.05")
    ts = np.append(np.arange(1.0, T, step), T)
    zs = np.empty_like(ts)
    chunk = 2000
    for i in range(0, len(ts), chunk):
        zs[i : i + chunk] = hardy_Z(ts[i : i + chunk])
    found = []
    sign_change = np.nonzero(np.sign(zs[:-1]) * np.sign(zs[1:]) < 0)[0]
    for i in sign_change:
        root = brentq(lambda t: hardy_Z(float(t)), ts[i], ts[i + 1], xtol=1e-10)
        if root <= T:
            found.append(root)
    gam = np.array(sorted(found))
    return ZeroSet(
        betas=np.full(len(gam), 0.5),
        gammas=gam,
        assume_rh=True,
        height=float(T),
    )


def riemann_vonmangoldt_count(T):
    """Main term of the zero count up to height T: (T/2pi) log(T/2pi e) + 7/8."""
    if T <= 0:
        raise DomainError("T must be positive")
    return T / (2 * math.pi) * math.log(T / (2 * math.pi * math.e)) + 7.0 / 8.0


def _zero_sum_terms(zeros: ZeroSet, log_x):
    """2 Re(Gamma(rho) x^rho) per stored zero, in log space to dodge under/overflow."""
    out = np.empty(len(zeros))
    for i, (b, g) in enumerate(zip(zeros.betas, zeros.gammas)):
        rho = complex(b, g)
        expo = loggamma(rho) + rho * log_x
        out[i] = 0.0 if expo.real < -745.0 else 2.0 * math.exp(expo.real) * math.cos(expo.imag)
    return out


def explicit_delta(x, zeros: ZeroSet, constant_mode="derived"):
    """Explicit-formula prediction for Delta(x).

    -sum_{0<gamma<=height} 2 Re(Gamma(rho) x^rho) + C, the doubled real
    part standing in for the conjugate zeros.  constant_mode selects C:
    "derived" uses 1/2 - log 2pi (what direct summation certifies),
    "paper" uses -log 2pi (the widely quoted display, kept available as a
    negative control; it is off by exactly 1/2).
    """
    zeros.require_nonempty()
    if x < 1.0:
        raise DomainError("x must be >= 1")
    if constant_mode == "derived":
        const = DELTA_LIMIT
    elif constant_mode == "paper":
        const = -math.log(2.0 * math.pi)
    else:
        raise DomainError(f"unknown constant_mode {constant_mode!r}")
    return const - float(np.sum(_zero_sum_terms(zeros, math.log(x))))
