"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 input error, 3 domain error
(state or vector outside the duality domain).

    wgeom measure --coeffs 0.6,0.8
    wgeom curves --coeffs 1,2,3,4,4.5 --normalize --samples 400 --output f.csv
    wgeom duality --from w --values 0.5,0.5,0.5,0.5
    wgeom verify --n 5 --trials 100 --seed 42
    wgeom sweep --n 3 --grid 10 --output sweep.csv
"""
from __future__ import annotations

import argparse
import csv
import itertools
import json
import logging
import math
import os
import sys
from collections import Counter
from pathlib import Path

import numpy as np

from . import duality
from .branch import r_crit
from .core import EntanglementClass, UnitVector, make_wstate
from .curves import COLUMNS, curve_table
from .errors import NotHighlyEntangled, RegionViolation, WGeomError
from .measure import MeasureResult, nearest_product
from .oracle import DEFAULT_MAX_ITERS, DEFAULT_RESTARTS, hopm_maximize
from .states import random_wstate

log = logging.getLogger("wgeom")

MAX_INLINE_COEFFS = 32

EXIT_OK, EXIT_VERIFY, EXIT_INPUT, EXIT_DOMAIN = 0, 1, 2, 3


class InputError(Exception):
    pass


def _setup_logging() -> None:
    level = {"quiet": logging.ERROR, "info": logging.INFO, "debug": logging.DEBUG}.get(
        os.environ.get("WGEOM_LOG", "quiet").lower(), logging.ERROR
    )
    logging.basicConfig(stream=sys.stderr, level=level, format="%(levelname)s %(name)s: %(message)s")


def _num(x):
    """15 significant digits; non-finite values become null."""
    if isinstance(x, (list, tuple, np.ndarray)):
        return [_num(v) for v in x]
    x = float(x)
    if not math.isfinite(x):
        return None
    return float(f"{x:.15g}")


def _parse_token(tok: str) -> complex:
    try:
        return complex(tok.strip().replace(" ", ""))
    except ValueError:
        raise InputError(f"cannot parse coefficient {tok!r}") from None


def _parse_values(text: str) -> list[complex]:
    toks = [t for t in text.split(",") if t.strip()]
    if len(toks) > MAX_INLINE_COEFFS:
        raise InputError(f"more than {MAX_INLINE_COEFFS} values on the command line; use --input FILE")
    return [_parse_token(t) for t in toks]


def _load_input(path: str) -> list[complex]:
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
        raw = data["coefficients"]
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise InputError(f"cannot read coefficients from {path}: {exc}") from None
    out = []
    for v in raw:
        if isinstance(v, (list, tuple)) and len(v) == 2:
            out.append(complex(float(v[0]), float(v[1])))
        elif isinstance(v, (int, float)):
            out.append(complex(v))
        else:
            raise InputError(f"bad coefficient entry {v!r} in {path}")
    return out


def _coefficients(args) -> list[complex]:
    if getattr(args, "input", None):
        return _load_input(args.input)
    if not args.coeffs:
        raise InputError("give --coeffs or --input")
    return _parse_values(args.coeffs)


def measure_report(res: MeasureResult, user_coeffs) -> dict:
    return {
        "n": len(user_coeffs),
        "coeffs": _num(user_coeffs),
        "class": res.cls.value,
        "branch": res.branch.branch.value,
        "r": _num(res.branch.r),
        "r1": _num(res.branch.r1),
        "r2": _num(res.branch.r2),
        "g": _num(res.g),
        "g_squared": _num(res.g_squared),
        "e_g_nats": _num(res.e_g),
        "thetas": _num(res.nearest.thetas),
        "x": _num(res.dual.x) if res.dual is not None else None,
        "nearest_product_amplitudes": _num(np.real(res.nearest.amplitudes()).tolist()),
        "residual_stationarity": _num(res.diagnostics.stationarity),
        "residual_constraint": _num(res.diagnostics.constraint),
    }


def _emit(report: dict, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(report, indent=2))
        return
    for key, val in report.items():
        if isinstance(val, float):
            val = f"{val:.15g}"
        print(f"{key}: {val}")


def cmd_measure(args) -> int:
    w = make_wstate(_coefficients(args), normalize=args.normalize)
    res = nearest_product(w)
    log.info("class=%s branch=%s", res.cls.value, res.branch.branch.value)
    _emit(measure_report(res, w.user_coeffs), args.format)
    return EXIT_OK


def _write_csv(header, rows, out) -> None:
    fh = open(out, "w", newline="", encoding="utf-8") if out else sys.stdout
    try:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([repr(float(v)) if isinstance(v, (float, np.floating)) else v for v in row])
    finally:
        if out:
            fh.close()


def cmd_curves(args) -> int:
    w = make_wstate(_coefficients(args), normalize=args.normalize)
    r_min = w.c_max if args.r_min is None else args.r_min
    if args.r_max is None:
        _, r2 = r_crit(w)
        r_max = 4.0 * max(r2, w.c_max)
    else:
        r_max = args.r_max
    table = curve_table(w, r_min, r_max, args.samples)
    _write_csv(COLUMNS, table.tolist(), args.output)
    return EXIT_OK


def cmd_duality(args) -> int:
    values = _parse_values(args.values) if args.values else _load_input(args.input)
    if args.source == "w":
        w = make_wstate(values, normalize=args.normalize)
        x = duality.w_to_unit_vector(w)
        p = duality.unit_vector_to_product(x)
        report = {"from": "w", "coeffs": _num(w.user_coeffs), "x": _num(x.x), "thetas": _num(p.thetas)}
    else:
        xv = np.array([v.real for v in values])
        if any(v.imag for v in values):
            raise InputError("unit vector components must be real")
        x = UnitVector(xv)
        w = duality.unit_vector_to_w(x)
        p = duality.unit_vector_to_product(x)
        report = {"from": "x", "x": _num(xv), "coeffs": _num(w.user_coeffs), "thetas": _num(p.thetas)}
    _emit(report, args.format)
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.n < 2 or args.trials < 1 or args.restarts < 1:
        raise InputError("need --n >= 2, --trials >= 1 and --restarts >= 1")
    rng = np.random.default_rng(args.seed)
    counts: Counter = Counter()
    max_dg = 0.0
    for t in range(args.trials):
        w = random_wstate(rng, args.n)
        res = nearest_product(w)
        oseed = int(np.random.SeedSequence([args.seed, t]).generate_state(1)[0])
        orc = hopm_maximize(w, restarts=args.restarts, max_iters=args.max_iters, seed=oseed)
        dg = abs(res.g - orc.g_est)
        log.debug("trial %d class=%s g=%.15g oracle=%.15g", t, res.cls.value, res.g, orc.g_est)
        counts[res.cls.value] += 1
        max_dg = max(max_dg, dg)
    ok = max_dg <= args.tol
    report = {
        "n": args.n,
        "trials": args.trials,
        "seed": args.seed,
        "restarts": args.restarts,
        "tol": args.tol,
        "max_abs_dg": _num(max_dg),
        "class_counts": {c.value: counts.get(c.value, 0) for c in EntanglementClass},
        "pass": ok,
    }
    _emit(report, args.format)
    return EXIT_OK if ok else EXIT_VERIFY


SWEEP_COLUMNS = ("class", "branch", "r", "r1", "r2", "g", "g_squared", "e_g")


def sweep_rows(n: int, grid: int):
    """Measure every state whose squared coefficients are multiples of 1/grid."""
    for bars in itertools.combinations(range(grid + n - 1), n - 1):
        parts = np.diff((-1,) + bars + (grid + n - 1,)) - 1
        c = np.sqrt(parts / grid)
        res = nearest_product(make_wstate(c, normalize=True))
        b = res.branch
        yield [*c.tolist(), res.cls.value, b.branch.value, b.r, b.r1, b.r2, res.g, res.g_squared, res.e_g]


def cmd_sweep(args) -> int:
    if args.n < 2 or args.grid < 1:
        raise InputError("need --n >= 2 and --grid >= 1")
    header = [f"c{k + 1}" for k in range(args.n)] + list(SWEEP_COLUMNS)
    _write_csv(header, sweep_rows(args.n, args.grid), args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="wgeom", description="Geometric measure of entanglement of W states")
    sub = ap.add_subparsers(dest="command", required=True)

    def add_coeffs(p):
        p.add_argument("--coeffs", help="comma-separated amplitudes (complex allowed, e.g. 0.5j)")
        p.add_argument("--input", help='JSON file {"coefficients": [...]} (required for n > 32)')
        p.add_argument("--normalize", action="store_true", help="rescale to unit norm")

    p = sub.add_parser("measure", help="classify a W state and compute g, E_g and the nearest product state")
    add_coeffs(p)
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.set_defaults(func=cmd_measure)

    p = sub.add_parser("curves", help="tabulate f_plus and f_minus against r as CSV")
    add_coeffs(p)
    p.add_argument("--r-min", type=float, default=None, help="default: largest coefficient")
    p.add_argument("--r-max", type=float, default=None, help="default: 4 * max(r2, c_max)")
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--output", default=None, help="CSV path (default: stdout)")
    p.set_defaults(func=cmd_curves)

    p = sub.add_parser("duality", help="map W coefficients to the dual unit vector or back")
    p.add_argument("--from", dest="source", choices=("w", "x"), required=True)
    p.add_argument("--values", help="comma-separated values")
    p.add_argument("--input", help='JSON file {"coefficients": [...]}')
    p.add_argument("--normalize", action="store_true")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.set_defaults(func=cmd_duality)

    p = sub.add_parser("verify", help="compare the closed form against the brute-force oracle")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--restarts", type=int, default=DEFAULT_RESTARTS)
    p.add_argument("--max-iters", type=int, default=DEFAULT_MAX_ITERS)
    p.add_argument("--tol", type=float, default=1e-6)
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sweep", help="measure every state on a simplex grid, CSV out")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--grid", type=int, default=10, help="squared coefficients are multiples of 1/grid")
    p.add_argument("--output", default=None)
    p.set_defaults(func=cmd_sweep)
    return ap


def main(argv=None) -> int:
    _setup_logging()
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (NotHighlyEntangled, RegionViolation) as exc:
        print(f"wgeom: {exc}", file=sys.stderr)
        return EXIT_DOMAIN if args.command == "duality" else EXIT_INPUT
    except (InputError, WGeomError) as exc:
        print(f"wgeom: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    raise SystemExit(main())
