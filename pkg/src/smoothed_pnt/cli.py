"""Batch experiment driver.

Subcommands build the sieve tables, sweep a geometric x grid, and emit
CSV (or JSON) for plotting.  Output is deterministic: floats are printed
with repr (shortest round-trip decimal), rows are ordered by x, lines
end with LF.  Data goes to --out or standard output; everything
diagnostic goes to standard error.

Exit codes: 0 ok, 2 configuration error, 3 capacity (table too small),
4 tolerance/accuracy failure.

The default zero table is the builtin one; the SMOOTHED_PNT_ZEROS
environment variable overrides it and --zeros overrides both.
"""

import argparse
import json
import math
import os
import sys

import numpy as np

from . import goldbach, metrics, pintz, smooth, zeros as zeros_mod
from .errors import (
    AccuracyError,
    AliasError,
    CapacityError,
    NumericsError,
    ToleranceError,
)
from .sieve import build_lambda

ENV_ZEROS = "SMOOTHED_PNT_ZEROS"

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_CAPACITY = 3
EXIT_TOLERANCE = 4


class ConfigError(Exception):
    pass


def _fmt(v):
    if isinstance(v, float):
        return repr(float(v))  # shortest round-trip decimal, numpy scalars included
    return str(v)


def _parse_grid(spec):
    """Geometric grid spec 'start:stop:points'."""
    parts = spec.split(":")
    if len(parts) != 3:
        raise ConfigError(f"bad grid spec {spec!r}, expected start:stop:points")
    try:
        start, stop, points = float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError as exc:
        raise ConfigError(str(exc)) from None
    if start < 1.0 or stop < start or points < 1:
        raise ConfigError("grid needs start >= 1, stop >= start, points >= 1")
    if points == 1:
        return np.array([start])
    return np.geomspace(start, stop, points)


def _load_zero_source(arg):
    source = arg or os.environ.get(ENV_ZEROS) or "builtin"
    if source == "builtin":
        return zeros_mod.builtin_zeros()
    return zeros_mod.load_zeros(source)


def _check_tol(args):
    if not (0.0 < args.tol < 1.0):
        raise ConfigError(f"tol must lie in (0, 1), got {args.tol}")


def _emit(rows, header, out_path, fmt):
    if fmt == "csv":
        lines = [",".join(header)]
        for row in rows:
            lines.append(",".join(_fmt(row[h]) for h in header))
        text = "\n".join(lines) + "\n"
    else:
        text = json.dumps({"rows": rows}, indent=None, separators=(",", ":")) + "\n"
    if out_path:
        with open(out_path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        print(out_path)
    else:
        sys.stdout.write(text)


def _auto_limit(xs, tol):
    return smooth.truncation_cutoff(float(np.max(xs)), tol)


def _cmd_metrics(args):
    _check_tol(args)
    xs = _parse_grid(args.x)
    zs = _load_zero_source(args.zeros)
    limit = args.limit or _auto_limit(xs, args.tol)
    table = build_lambda(limit)
    header = [
        "x", "psi", "baseline", "delta", "S", "D", "W",
        "omega", "omega_S", "omega_D", "omega_W", "psi_over_x",
    ]
    rows = []
    for x in xs:
        pt = smooth.delta(table, x, tol=args.tol)
        row = metrics.metrics_row(table, zs, x, grid=args.s_grid, tol=args.tol)
        rows.append({
            "x": float(x),
            "psi": pt.psi,
            "baseline": pt.baseline,
            "delta": pt.delta,
            "S": row.S,
            "D": row.D,
            "W": row.W,
            "omega": row.omega,
            "omega_S": row.omega_S,
            "omega_D": row.omega_D,
            "omega_W": row.omega_W,
            "psi_over_x": pt.psi / float(x),
        })
    _emit(rows, header, args.out, args.format)
    return EXIT_OK


def _cmd_delta(args):
    _check_tol(args)
    xs = _parse_grid(args.x)
    zs = _load_zero_source(args.zeros)
    limit = args.limit or _auto_limit(xs, args.tol)
    table = build_lambda(limit)
    header = ["x", "psi", "baseline", "delta", "explicit_delta", "residual"]
    rows = []
    for x in xs:
        pt = smooth.delta(table, x, tol=args.tol)
        ed = zeros_mod.explicit_delta(max(x, 1.0), zs, constant_mode=args.constant)
        rows.append({
            "x": float(x),
            "psi": pt.psi,
            "baseline": pt.baseline,
            "delta": pt.delta,
            "explicit_delta": ed,
            "residual": pt.delta - ed,
        })
    _emit(rows, header, args.out, args.format)
    return EXIT_OK


def _cmd_goldbach(args):
    _check_tol(args)
    xs = _parse_grid(args.x)
    k = args.k
    if not (1 <= k <= 5):
        raise ConfigError("k must be in [1, 5]")
    x_max = float(np.max(xs))
    conv_limit = args.limit or (int(40 * x_max) + 16)
    # k=2 also runs the circle-quadrature check at N=100, whose power
    # series needs the table out to ~42*100
    table_limit = max(conv_limit, 4300) if k == 2 else conv_limit
    table = build_lambda(table_limit)
    conv = goldbach.convolve_psik(table, k, conv_limit)
    header = ["x", "F_k", "psi_pow_k", "ratio_to_xk", "err_ratio"]
    rows = []
    for x in xs:
        fk = goldbach.smooth_Fk(conv, x, tol=args.tol)
        # matched truncation: the identity F_k = Psi^k holds per cutoff
        psi = smooth.weighted_exp_sum(table.values[1 : conv_limit + 1], x)
        rows.append({
            "x": float(x),
            "F_k": fk,
            "psi_pow_k": psi**k,
            "ratio_to_xk": fk / float(x) ** k,
            "err_ratio": abs(fk - float(x) ** k) / float(x) ** (k - k / 2.0),
        })
    if k == 2:
        n_check = min(100, conv_limit)
        val, imag = goldbach.contour_extract(table, n_check)
        direct = float(np.sum(goldbach.psi2_centered(table, n_check)[: n_check + 1]))
        print(
            f"contour identity check at N={n_check}: quadrature={val!r} "
            f"direct={direct!r} |imag|={imag:.2e}",
            file=sys.stderr,
        )
    _emit(rows, header, args.out, args.format)
    return EXIT_OK


def _cmd_zeros(args):
    if not (10.0 <= args.T <= 1e3):
        raise ConfigError("T must lie in [10, 1e3]")
    zs = zeros_mod.find_zeros(args.T)
    expected = zeros_mod.riemann_vonmangoldt_count(args.T)
    print(
        f"found {len(zs)} zeros up to T={args.T:g}; "
        f"counting-formula main term {expected:.2f}",
        file=sys.stderr,
    )
    if args.out:
        zeros_mod.save_zeros(zs, args.out)
        print(args.out)
    else:
        for g in zs.gammas:
            sys.stdout.write(f"{float(g)!r}\n")
    return EXIT_OK


def _cmd_pintz(args):
    _check_tol(args)
    zs = _load_zero_source(args.zeros)
    zs.require_nonempty()
    rho0 = complex(zs.betas[0], zs.gammas[0])
    p = pintz.PintzParams(mu=math.log(args.mu_scale), k=args.k, rho0=rho0)
    width = 6.0 * math.sqrt(p.k * math.log(1.0 / args.tol))
    limit = args.limit or pintz._loose_cutoff(math.exp(p.mu + width), 1e-5)
    table = build_lambda(limit)
    ui = pintz.U_integral(table, p, tol=args.tol)
    ur = pintz.U_residue(zs, p)
    rel = abs(ui.value - ur.value) / max(abs(ur.value), 1e-300)
    header = [
        "mu", "k", "U_integral_re", "U_integral_im", "U_integral_err",
        "U_residue_re", "U_residue_im", "U_residue_err", "rel_diff",
    ]
    rows = [{
        "mu": p.mu,
        "k": p.k,
        "U_integral_re": ui.value.real,
        "U_integral_im": ui.value.imag,
        "U_integral_err": ui.error,
        "U_residue_re": ur.value.real,
        "U_residue_im": ur.value.imag,
        "U_residue_err": ur.error,
        "rel_diff": rel,
    }]
    _emit(rows, header, args.out, args.format)
    return EXIT_OK


def _cmd_turan(args):
    rng = np.random.default_rng(args.seed)
    header = ["instance", "n", "a", "b", "grid_max", "bound", "ratio"]
    rows = []
    for i in range(args.instances):
        n = int(rng.integers(1, 9))
        alphas = np.zeros(n, dtype=complex)
        alphas[0] = 1j * rng.uniform(-10, 10)
        if n > 1:
            alphas[1:] = rng.uniform(-1, 0, n - 1) + 1j * rng.uniform(-10, 10, n - 1)
        a = rng.uniform(1, 10)
        b = rng.uniform(1, 10)
        gmax, bound = pintz.turan_bound(alphas, a, b)
        rows.append({
            "instance": i,
            "n": n,
            "a": float(a),
            "b": float(b),
            "grid_max": gmax,
            "bound": bound,
            "ratio": gmax / bound,
        })
        if gmax < 0.99 * bound:
            raise ToleranceError(
                f"power-sum bound violated at instance {i}: {gmax} < 0.99*{bound}"
            )
    _emit(rows, header, args.out, args.format)
    return EXIT_OK


def build_parser():
    ap = argparse.ArgumentParser(
        prog="smoothed-pnt",
        description="Smoothed prime sums, zeta-zero metrics, and Goldbach convolutions.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, grid_default="10:1e4:13"):
        p.add_argument("--x", default=grid_default, help="geometric grid start:stop:points")
        p.add_argument("--limit", type=int, default=None, help="sieve table limit N")
        p.add_argument("--zeros", default=None, help="zero table path or 'builtin'")
        p.add_argument("--tol", type=float, default=1e-6)
        p.add_argument("--out", default=None, help="output path (default: stdout)")
        p.add_argument("--format", choices=("csv", "json"), default="csv")

    p = sub.add_parser("metrics", help="S/D/W/omega metric family per grid point")
    common(p)
    p.add_argument("--s-grid", type=int, default=64, help="grid size for S and D")
    p.set_defaults(func=_cmd_metrics)

    p = sub.add_parser("delta", help="smoothed sums and explicit-formula residual")
    common(p)
    p.add_argument("--constant", choices=("paper", "derived"), default="derived")
    p.set_defaults(func=_cmd_delta)

    p = sub.add_parser("goldbach", help="F_k identity columns for one k")
    common(p, grid_default="10:1e3:7")
    p.add_argument("--k", type=int, default=2)
    p.set_defaults(func=_cmd_goldbach)

    p = sub.add_parser("zeros", help="locate critical-line zeros up to T")
    p.add_argument("--T", type=float, required=True)
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_zeros)

    p = sub.add_parser("pintz", help="dual-representation check of the smoothing integral")
    p.add_argument("--mu-scale", type=float, default=200.0, help="u-scale e^mu")
    p.add_argument("--k", type=float, default=1.0)
    p.add_argument("--tol", type=float, default=0.1)
    p.add_argument("--limit", type=int, default=None)
    p.add_argument("--zeros", default=None)
    p.add_argument("--out", default=None)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=_cmd_pintz)

    p = sub.add_parser("turan", help="seeded random verification of the power-sum bound")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--instances", type=int, default=1000)
    p.add_argument("--out", default=None)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=_cmd_turan)
    return ap


def main(argv=None):
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_CONFIG if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except CapacityError as exc:
        print(f"capacity error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except (ToleranceError, AccuracyError, AliasError) as exc:
        print(f"tolerance error: {exc}", file=sys.stderr)
        return EXIT_TOLERANCE
    except NumericsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
