"""Command line front-end.

Four subcommands: check (membership of a series file in one class),
extremal (emit a named catalog function as series JSON), suite (run a
verification suite and write its JSON report), decompose (convex weights of
a negative-coefficient member). Exit codes: 0 verified/pass, 1 refuted or a
failed suite, 2 usage or IO problems.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys

import numpy as np

from . import extremal, harness, tme
from .classes import Status, check_mf, check_starlike, me_margins
from .series import DiscGrid, LaurentFunction, eval_g, eval_g_prime, serialize_coeffs
from .tolerances import ZERO_TOL


def _build_grid(args) -> DiscGrid:
    rmax = getattr(args, "grid_rmax", None)
    theta = getattr(args, "grid_theta", None)
    if rmax is None and theta is None:
        return DiscGrid.default()
    if rmax is None:
        return DiscGrid(angular_samples=int(theta))
    return DiscGrid.with_rmax(float(rmax), int(theta) if theta else 2048)


def _margins_for(family: str, f: LaurentFunction, alpha: float, grid: DiscGrid) -> np.ndarray:
    pts = grid.points
    if family == "me":
        return me_margins(f, alpha, pts)
    g = eval_g(f, pts)
    zgp = pts * eval_g_prime(f, pts)
    degenerate = np.abs(g) < ZERO_TOL
    ratio = zgp / np.where(degenerate, 1.0, g)
    if family == "mf":
        out = (1.0 - alpha) - np.abs(ratio)
    else:
        out = (1.0 - alpha) - np.real(ratio)
    return np.where(degenerate, np.nan, out)


def _dump_margin_csv(path: str, grid: DiscGrid, margins: np.ndarray) -> None:
    pts = grid.points
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["radius", "theta", "re", "im", "margin"])
        for i, (z, m) in enumerate(zip(pts, margins)):
            r, th = grid.point_label(i)
            writer.writerow(
                [repr(r), repr(th), repr(float(z.real)), repr(float(z.imag)), repr(float(m))]
            )


def _cmd_check(args) -> int:
    grid = _build_grid(args)
    alpha = float(args.alpha)
    if args.klass == "tme":
        f = harness.load_tme(args.series)
        verdict = harness.classify_tme(f, alpha)
        _, exact_margin = tme.check_tme_exact(f, alpha)
        payload = {
            "class": "tme",
            "alpha": alpha,
            "status": verdict.status.value,
            "min_margin": verdict.min_margin,
            "exact_margin": exact_margin,
            "witness": None
            if verdict.witness is None
            else [verdict.witness.real, verdict.witness.imag],
            "samples_checked": verdict.samples_checked,
        }
        lf = f.to_laurent()
    else:
        lf = harness.load_series(args.series)
        if args.klass == "me":
            verdict = harness.classify_me(lf, alpha, grid)
        elif args.klass == "mf":
            verdict = check_mf(lf, alpha, grid)
        else:
            verdict = check_starlike(lf, alpha, grid)
        payload = {
            "class": args.klass,
            "alpha": alpha,
            "status": verdict.status.value,
            "min_margin": verdict.min_margin,
            "witness": None
            if verdict.witness is None
            else [verdict.witness.real, verdict.witness.imag],
            "samples_checked": verdict.samples_checked,
        }
    print(json.dumps(payload, indent=2, sort_keys=True))
    if args.csv:
        family = "me" if args.klass == "tme" else args.klass
        _dump_margin_csv(args.csv, grid, _margins_for(family, lf, alpha, grid))
    return 0 if verdict.is_member else 1


def _cmd_extremal(args) -> int:
    name = args.name
    alpha = float(args.alpha)
    n = int(args.n)
    degree = args.degree
    if name == "thm21":
        d = int(degree) if degree is not None else extremal.DEFAULT_EXTREMAL_DEGREE
        f = extremal.theorem21_extremal(alpha, d)
        tail = extremal.theorem21_tail_bound(alpha, d)
    elif name == "thm23":
        d = int(degree) if degree is not None else extremal.DEFAULT_EXTREMAL_DEGREE
        f = extremal.theorem23_extremal(alpha, n, d)
        tail = extremal.theorem23_tail_bound(alpha, n, d)
    elif name == "rem1":
        f = extremal.remark1_witness(n)
        tail = 0.0
    elif name == "expz":
        d = int(degree) if degree is not None else 30
        f = extremal.mf_not_me_witness(d)
        tail = 1.0 / math.factorial(d + 2)
    else:  # onemz2
        f = extremal.starlike_not_mf_witness()
        tail = 0.0
    payload = serialize_coeffs(f)
    payload["tail_bound"] = tail
    print(json.dumps(payload))
    return 0


def _cmd_suite(args) -> int:
    params = {}
    for key in ("alpha", "n", "delta", "eps", "seed", "count"):
        value = getattr(args, key)
        if value is not None:
            params[key] = value
    report = harness.run_suite(args.name, params)
    harness.save_report(report, args.out)
    if args.csv:
        with open(args.csv, "w", newline="", encoding="utf-8") as fh:
            writer = csv.writer(fh)
            writer.writerow(["check", "status", "margin"])
            for c in report.checks:
                writer.writerow([c.name, c.status.value, "" if c.margin is None else repr(c.margin)])
    n_checks = len(report.checks)
    verdict = "pass" if report.passed else "FAIL"
    print(f"suite {report.suite}: {verdict} ({n_checks} checks, {report.runtime_ms} ms) -> {args.out}")
    return 0 if report.passed else 1


def _cmd_decompose(args) -> int:
    f = harness.load_tme(args.series)
    alpha = float(args.alpha)
    member, margin = tme.check_tme_exact(f, alpha)
    if not member:
        print(f"error: not a member (weighted sum exceeds 1 by {-margin})", file=sys.stderr)
        return 1
    weights = tme.decompose(f, alpha)
    print(json.dumps({"alpha": alpha, "weights": list(weights)}, indent=2))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="merostar",
        description="Membership checks and verification suites for meromorphic "
        "function classes on the punctured unit disc.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_check = sub.add_parser("check", help="test a series file against one class")
    p_check.add_argument("--class", dest="klass", required=True, choices=["me", "mf", "starlike", "tme"])
    p_check.add_argument("--alpha", type=float, required=True)
    p_check.add_argument("--series", required=True)
    p_check.add_argument("--grid-rmax", dest="grid_rmax", type=float, default=None)
    p_check.add_argument("--grid-theta", dest="grid_theta", type=int, default=None)
    p_check.add_argument("--csv", default=None, help="write per-point margins to this CSV path")
    p_check.set_defaults(func=_cmd_check)

    p_ext = sub.add_parser("extremal", help="emit a catalog function as series JSON")
    p_ext.add_argument("--name", required=True, choices=["thm21", "thm23", "rem1", "expz", "onemz2"])
    p_ext.add_argument("--alpha", type=float, default=1.0)
    p_ext.add_argument("--n", type=int, default=1)
    p_ext.add_argument("--degree", type=int, default=None)
    p_ext.set_defaults(func=_cmd_extremal)

    p_suite = sub.add_parser("suite", help="run a verification suite, write a JSON report")
    p_suite.add_argument("--name", required=True, choices=list(harness.SUITE_IDS))
    p_suite.add_argument("--alpha", type=float, default=None)
    p_suite.add_argument("--n", type=int, default=None)
    p_suite.add_argument("--delta", type=float, default=None)
    p_suite.add_argument("--eps", type=float, default=None)
    p_suite.add_argument("--seed", type=int, default=None)
    p_suite.add_argument("--count", type=int, default=None)
    p_suite.add_argument("--out", required=True)
    p_suite.add_argument("--csv", default=None, help="also dump check margins to this CSV path")
    p_suite.set_defaults(func=_cmd_suite)

    p_dec = sub.add_parser("decompose", help="convex weights of a negative-coefficient member")
    p_dec.add_argument("--series", required=True)
    p_dec.add_argument("--alpha", type=float, required=True)
    p_dec.set_defaults(func=_cmd_decompose)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (OSError, json.JSONDecodeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
