"""Command-line front end.

Subcommands:

  eval      one scaled-product evaluation plus the regime prediction (JSON)
  classify  regime prediction only, no product evaluation (JSON)
  sweep     CSV over an (alpha, tau, N) grid, optionally with a figure
  verify    named self-check suites with seeded randomness (JSON report)

Exit codes: 0 success, 1 verify-suite failure, 2 schema/validation error,
3 numerical failure (including output-file trouble mid-sweep).  Identical
inputs and seed produce byte-identical output.  Alpha values are parsed as
exact rationals when written with a slash ("1/2", "3/2") and as floats
otherwise; only exact rationals carry recurrence subsequences.
"""
from __future__ import annotations

import argparse
import json
import math
import os
import sys
from fractions import Fraction

import numpy as np

from .convolution import verify_powers_equal_convolution
from .engine import Exponent, ZenoParams, one_minus_survival, scaled_zeno_product, taylor_check
from .errors import NumericalError, SchemaError, UndefinedZenoTime, ZenoscaleError
from .measures import cantor, lorentzian, pure_point, uniform, zeno_time
from .regimes import (
    COMMENSURABILITY_TOL,
    MAX_DENOMINATOR,
    analyze_commensurability,
    predict_limit,
    recurrence_subsequence,
)
from .specio import parse_measure_spec

CSV_HEADER = "alpha,tau,N,p,log_p,predicted,regime"


def _fmt(x: float) -> str:
    return f"{x:.17g}"


def _parse_alpha(token: str) -> Exponent:
    token = token.strip()
    if not token:
        raise ValueError("empty alpha token")
    if "/" in token:
        try:
            return Fraction(token)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"bad rational alpha {token!r}: {exc}") from None
    try:
        return float(token)
    except ValueError:
        raise ValueError(f"bad alpha {token!r}: expected a decimal or a fraction like 1/2") from None


def _parse_alpha_list(text: str) -> list:
    return [_parse_alpha(tok) for tok in text.split(",")]


def _parse_tau_grid(text: str) -> list:
    parts = text.split(":")
    if len(parts) != 3:
        raise SchemaError("expected a:b:n", field="--tau-grid")
    try:
        a, b, n = float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError as exc:
        raise SchemaError(str(exc), field="--tau-grid") from None
    if n < 1:
        raise SchemaError("tau grid must be non-empty", field="--tau-grid")
    return [float(t) for t in np.linspace(a, b, n)]


def _parse_schedule(text: str) -> list:
    try:
        values = [int(tok) for tok in text.split(",")]
    except ValueError as exc:
        raise ValueError(f"bad N schedule: {exc}") from None
    if not values:
        raise ValueError("N schedule must be non-empty")
    if any(b <= a for a, b in zip(values, values[1:])):
        raise ValueError("N schedule must be strictly increasing")
    if values[0] < 1:
        raise ValueError("N values must be >= 1")
    return values


def _load_measure(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise SchemaError(f"cannot read measure file: {exc}") from None
    return parse_measure_spec(text)


def _resolve_taus(args) -> list:
    if args.tau is not None and args.tau_grid is not None:
        raise ValueError("use --tau or --tau-grid, not both")
    if args.tau is not None:
        return [args.tau]
    if args.tau_grid is not None:
        return _parse_tau_grid(args.tau_grid)
    raise SchemaError("tau grid must be non-empty", field="--tau-grid")


def _resolve_schedule(args) -> list:
    if args.n is not None and args.n_schedule is not None:
        raise ValueError("use --n or --n-schedule, not both")
    if args.n is not None:
        return _parse_schedule(str(args.n))
    if args.n_schedule is not None:
        return _parse_schedule(args.n_schedule)
    raise ValueError("one of --n or --n-schedule is required")


def _emit(payload: dict, out_path) -> None:
    text = json.dumps(payload, indent=2) + "\n"
    sys.stdout.write(text)
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)


def cmd_eval(args) -> int:
    measure = _load_measure(args.measure)
    alpha = _parse_alpha(args.alpha)
    lp = scaled_zeno_product(measure, ZenoParams(N=args.n, alpha=alpha,
                                                 tau=args.tau, hbar=args.hbar))
    pred = predict_limit(measure, alpha, args.tau, args.hbar,
                         args.max_denominator, args.tol)
    _emit({
        "alpha": args.alpha,
        "alpha_value": float(alpha),
        "tau": args.tau,
        "N": args.n,
        "hbar": args.hbar,
        "p": lp.p,
        "log_p": lp.log_p,
        "prediction": pred.to_dict(),
    }, args.out)
    return 0


def cmd_classify(args) -> int:
    measure = _load_measure(args.measure)
    alpha = _parse_alpha(args.alpha)
    pred = predict_limit(measure, alpha, args.tau, args.hbar,
                         args.max_denominator, args.tol)
    _emit(pred.to_dict(), args.out)
    return 0


def cmd_sweep(args) -> int:
    measure = _load_measure(args.measure)
    alphas = _parse_alpha_list(args.alpha)
    taus = _resolve_taus(args)
    schedule = _resolve_schedule(args)

    lines = [CSV_HEADER]
    records = []
    for alpha in alphas:
        for tau in taus:
            pred = predict_limit(measure, alpha, tau, args.hbar,
                                 args.max_denominator, args.tol)
            predicted = pred.limit
            pred_text = "none" if predicted is None else _fmt(predicted)
            for n in schedule:
                lp = scaled_zeno_product(measure, ZenoParams(N=n, alpha=alpha,
                                                             tau=tau, hbar=args.hbar))
                lines.append(f"{_fmt(float(alpha))},{_fmt(tau)},{n},{_fmt(lp.p)},"
                             f"{_fmt(lp.log_p)},{pred_text},{pred.regime.value}")
                records.append({"alpha": float(alpha), "tau": tau, "N": n,
                                "p": lp.p, "predicted": predicted})

    tmp = f"{args.out}.tmp"
    try:
        with open(tmp, "w", encoding="utf-8") as fh:
            fh.write("\n".join(lines) + "\n")
        os.replace(tmp, args.out)
    except OSError:
        if os.path.exists(tmp):
            os.remove(tmp)
        raise
    if args.fig:
        from .plots import render_sweep_figure
        try:
            render_sweep_figure(records, args.fig)
        except Exception:
            if os.path.exists(args.fig):
                os.remove(args.fig)
            raise
    return 0


def _check(name: str, measured: float, bound: float) -> dict:
    return {"name": name, "pass": bool(measured <= bound),
            "measured": float(measured), "bound": float(bound)}


def _qubit():
    return pure_point([(0.0, 0.5), (1.0, 0.5)])


def _three_atoms():
    w = 1.0 / 3.0
    return pure_point([(0.0, w), (2.0, w), (6.0, w)])


def _suite_convolution(seed: int) -> list:
    rng = np.random.default_rng(seed)
    tau_grid = np.linspace(-8.0, 8.0, 32)
    checks = []
    for i in range(50):
        r = int(rng.integers(2, 5))
        while True:
            energies = np.sort(rng.uniform(-3.0, 3.0, r))
            if float(np.min(np.diff(energies))) > 1e-3:
                break
        weights = rng.uniform(0.1, 1.0, r)
        weights = weights / weights.sum()
        mu = pure_point([(float(e), float(w)) for e, w in zip(energies, weights)])
        n = int(rng.integers(1, 9))
        alpha = Fraction(1) if i % 2 == 0 else Fraction(3, 2)
        worst = verify_powers_equal_convolution(mu, n, tau_grid, alpha)
        checks.append(_check(f"fourier_homomorphism_{i:02d}", worst, 1e-10))
    return checks


def _suite_thresholds(seed: int) -> list:
    qubit = _qubit()
    tz = zeno_time(qubit)
    tau = 1.0
    checks = []

    schedule = [10 ** 3, 10 ** 4, 10 ** 5, 10 ** 6]
    ps = [scaled_zeno_product(qubit, ZenoParams(n, 0.3, tau)).p for n in schedule]
    envelope = max((1.0 - p) * tz * tz * n ** 0.4 / (2.0 * tau * tau)
                   for p, n in zip(ps, schedule))
    checks.append(_check("zeno_envelope", envelope, 1.0))
    regress = max(0.0, max(a - b for a, b in zip(ps, ps[1:])))
    checks.append(_check("zeno_monotone", regress, 1e-12))

    for t in (1.0, 2.0, 4.0):
        p = scaled_zeno_product(qubit, ZenoParams(10 ** 6, Fraction(1, 2), t)).p
        gap = abs(p - math.exp(-((t / tz) ** 2)))
        checks.append(_check(f"gaussian_threshold_tau_{t:g}", gap, 5e-3))

    lp = scaled_zeno_product(qubit, ZenoParams(10 ** 6, 0.8, tau)).log_p
    log_bound = math.log(10.0) - tau * tau * (10 ** 6) ** 0.6 / (2.0 * tz * tz)
    checks.append(_check("classical_envelope", lp, log_bound))
    checks.append(_check("classical_log_floor", lp, -100.0))
    return checks


def _suite_lattice(seed: int) -> list:
    measure = _three_atoms()
    comm = analyze_commensurability(measure)
    checks = [_check("first_return_time", abs(comm.first_return_time - math.pi), 1e-9)]

    worst = 0.0
    for k in (1, 2, 3):
        for n in (10, 100, 1000):
            p = scaled_zeno_product(measure, ZenoParams(n, 1.0, k * comm.first_return_time)).p
            worst = max(worst, abs(1.0 - p))
    checks.append(_check("on_lattice_returns", worst, 1e-9))

    off = max(scaled_zeno_product(measure, ZenoParams(1000, 1.0, t)).p
              for t in (0.3 * comm.first_return_time, 1.0, 2.0))
    checks.append(_check("off_lattice_decay", off, 1e-6))
    return checks


def _suite_recurrence(seed: int) -> list:
    measure = _three_atoms()
    alpha = Fraction(3, 2)
    tau = analyze_commensurability(measure).first_return_time
    checks = []

    expected = [m * m for m in range(1, 11)]
    got = recurrence_subsequence(alpha, 10)
    checks.append(_check("subsequence_squares", 0.0 if got == expected else 1.0, 0.0))

    worst = max(abs(1.0 - scaled_zeno_product(measure, ZenoParams(n, alpha, tau)).p)
                for n in (1, 4, 9, 16, 25, 100))
    checks.append(_check("returns_on_squares", worst, 1e-12))

    off = max(scaled_zeno_product(measure, ZenoParams(n, alpha, tau)).p
              for n in (2, 3, 5))
    checks.append(_check("non_squares_stay_below_one", off, 1.0 - 1e-6))
    return checks


def _suite_taylor(seed: int) -> list:
    checks = []
    for name, measure in (("qubit", _qubit()),
                          ("uniform", uniform(0.0, 1.0)),
                          ("cantor", cantor())):
        tz = zeno_time(measure)
        h = 1e-3 * tz
        q = one_minus_survival(measure, h)
        checks.append(_check(f"curvature_{name}", abs(q * tz * tz / (h * h) - 1.0), 1e-4))
        checks.append(_check(f"taylor_residual_{name}", taylor_check(measure, h), h ** 4))
    try:
        taylor_check(lorentzian(0.0, 1.0), 0.01)
        raised = 1.0
    except UndefinedZenoTime:
        raised = 0.0
    checks.append(_check("lorentzian_undefined_zeno_time", raised, 0.0))
    return checks


_SUITES = {
    "convolution": _suite_convolution,
    "thresholds": _suite_thresholds,
    "lattice": _suite_lattice,
    "recurrence": _suite_recurrence,
    "taylor": _suite_taylor,
}


def cmd_verify(args) -> int:
    checks = _SUITES[args.suite](args.seed)
    _emit({"suite": args.suite, "seed": args.seed, "checks": checks}, args.out)
    return 0 if all(c["pass"] for c in checks) else 1


def _add_measure_arg(parser) -> None:
    parser.add_argument("--measure", required=True, metavar="FILE",
                        help="path to a JSON measure document")


def _add_common(parser) -> None:
    parser.add_argument("--hbar", type=float, default=1.0,
                        help="Planck constant over 2 pi (default 1; results depend on tau/hbar only)")
    parser.add_argument("--tol", type=float, default=COMMENSURABILITY_TOL,
                        help="commensurability residue tolerance")
    parser.add_argument("--max-denominator", type=int, default=MAX_DENOMINATOR,
                        help="largest denominator tried for gap ratios")
    parser.add_argument("--out", default=None, metavar="PATH",
                        help="also write the JSON output to this file")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zenoscale",
        description="Scaled repeated-measurement survival products for spectral measures.")
    sub = parser.add_subparsers(dest="command", required=True)

    pe = sub.add_parser("eval", help="evaluate p(tau N^(alpha-1))^N once, with the predicted regime")
    _add_measure_arg(pe)
    pe.add_argument("--alpha", required=True, help="exponent: decimal or fraction like 1/2")
    pe.add_argument("--tau", type=float, required=True, help="scaled time")
    pe.add_argument("--n", type=int, required=True, help="number of measurements N")
    _add_common(pe)
    pe.set_defaults(func=cmd_eval)

    pc = sub.add_parser("classify", help="predict the large-N regime without evaluating")
    _add_measure_arg(pc)
    pc.add_argument("--alpha", required=True, help="exponent: decimal or fraction like 1/2")
    pc.add_argument("--tau", type=float, required=True, help="scaled time")
    _add_common(pc)
    pc.set_defaults(func=cmd_classify)

    ps = sub.add_parser("sweep", help="CSV over an (alpha, tau, N) grid")
    _add_measure_arg(ps)
    ps.add_argument("--alpha", required=True,
                    help="comma-separated exponents; fractions like 1/2 stay exact")
    ps.add_argument("--tau", type=float, default=None, help="single scaled time")
    ps.add_argument("--tau-grid", default=None, metavar="A:B:N",
                    help="evenly spaced scaled times, endpoints included")
    ps.add_argument("--n", type=int, default=None, help="single measurement count")
    ps.add_argument("--n-schedule", default=None, metavar="LIST",
                    help="comma-separated strictly increasing measurement counts")
    ps.add_argument("--hbar", type=float, default=1.0)
    ps.add_argument("--tol", type=float, default=COMMENSURABILITY_TOL)
    ps.add_argument("--max-denominator", type=int, default=MAX_DENOMINATOR)
    ps.add_argument("--out", required=True, metavar="PATH", help="CSV output path")
    ps.add_argument("--fig", default=None, metavar="PATH",
                    help="also render a limit-vs-alpha figure to this file")
    ps.set_defaults(func=cmd_sweep)

    pv = sub.add_parser("verify", help="run a named self-check suite")
    pv.add_argument("suite", choices=sorted(_SUITES), help="suite name")
    pv.add_argument("--seed", type=int, default=0, help="seed for randomized checks")
    pv.add_argument("--out", default=None, metavar="PATH",
                    help="also write the JSON report to this file")
    pv.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else (0 if code is None else 2)
    try:
        return args.func(args)
    except NumericalError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 3
    except (ZenoscaleError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except OSError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 3


def entrypoint() -> None:
    sys.exit(main())
