"""Command-line front end: ``swapinfo {sweep, inspect, verify, com}``.

Exit codes: 0 success, 1 validation/parse/argument error, 2 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from . import experiments, verify
from .errors import BadSpec, SwapInfoError
from .povm import povm_from_file

EXIT_OK, EXIT_INVALID, EXIT_VERIFY = 0, 1, 2


def _load_q(path):
    try:
        q = np.array(json.loads(Path(path).read_text()), dtype=float)
    except (OSError, ValueError, TypeError) as exc:
        raise BadSpec(f"cannot read q matrix from {path}: {exc}") from exc
    if isinstance(q, np.ndarray) and q.shape != (4, 4):
        raise BadSpec(f"q matrix in {path} must be 4x4, got shape {q.shape}")
    return q


def cmd_sweep(args, out=sys.stdout) -> int:
    q = _load_q(args.q) if args.q else None
    rows = experiments.sweep(args.family, args.lambda_min, args.lambda_max, args.steps, q=q)
    text = experiments.sweep_csv(rows)
    if args.out:
        Path(args.out).write_text(text)
    else:
        out.write(text)
    return EXIT_OK


def _fmt(v):
    if isinstance(v, bool):
        return "yes" if v else "no"
    if isinstance(v, float):
        return f"{v:.10f}"
    return str(v)


def cmd_inspect(args, out=sys.stdout) -> int:
    report = experiments.inspect_povm(povm_from_file(args.povm))
    if args.format == "json":
        out.write(json.dumps(report, indent=1) + "\n")
        return EXIT_OK
    cols = ["outcome", "p", "I14", "I12", "I34", "slack12", "slack34",
            "element_separable", "rho14_separable", "rho12_separable", "rho34_separable"]
    out.write("\t".join(cols) + "\n")
    for o in report["outcomes"]:
        if o.get("zero_probability"):
            out.write(f"{o['outcome']}\t{_fmt(o['p'])}\t(zero probability)\n")
            continue
        out.write("\t".join(_fmt(o[c]) for c in cols) + "\n")
    avg = report["averaged"]
    out.write(
        f"averaged: I14={_fmt(avg['I14_bar'])} I12={_fmt(avg['I12_bar'])} I34={_fmt(avg['I34_bar'])} "
        f"slack12={_fmt(avg['slack12_bar'])} slack34={_fmt(avg['slack34_bar'])}\n"
    )
    out.write(f"conserved: {_fmt(avg['conserved_12'] and avg['conserved_34'])}\n")
    return EXIT_OK


def cmd_verify(args, out=sys.stdout) -> int:
    result = verify.run_verification(args.seed, args.trials)
    out.write(result.summary() + "\n")
    if result.passed:
        return EXIT_OK
    name, cx = result.failure
    Path(args.dump).write_text(cx.to_json(name) + "\n")
    out.write(f"counterexample written to {args.dump}\n")
    return EXIT_VERIFY


def cmd_com(args, out=sys.stdout) -> int:
    cmp = experiments.com_comparison(args.alpha_sq)
    if args.format == "json":
        out.write(json.dumps(cmp, indent=1) + "\n")
        return EXIT_OK
    out.write(f"alpha_sq = {cmp['alpha_sq']:.10g}, outcome probability = {cmp['probability']:.10g}\n")
    out.write("quantity\tsimulated\tclosed_form\tdifference\n")
    for key in ("I14", "I12"):
        out.write(f"{key}\t{cmp[key]:.12f}\t{cmp[key + '_closed']:.12f}\t{cmp[key + '_diff']:.3e}\n")
    out.write(f"I14 + I12 = {cmp['Itot12']:.12f} (slack {2 - cmp['Itot12']:.3e})\n")
    out.write(f"conserved: {_fmt(cmp['conserved'])}\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="swapinfo",
        description="Information-disturbance trade-off in generalized entanglement swapping.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sweep", help="sweep a measurement family over lambda, write CSV")
    p.add_argument("--family", choices=experiments.FAMILIES, required=True)
    p.add_argument("--lambda-min", type=float, default=0.0)
    p.add_argument("--lambda-max", type=float, default=1.0)
    p.add_argument("--steps", type=int, default=101)
    p.add_argument("--out", help="CSV output path (default: stdout)")
    p.add_argument("--q", help="JSON file with the 4x4 column-stochastic q matrix "
                               "(bell-diagonal-custom only)")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("inspect", help="report on a POVM stored as JSON")
    p.add_argument("--povm", required=True)
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.set_defaults(func=cmd_inspect)

    p = sub.add_parser("verify", help="run the randomized invariant suite")
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--dump", default="verify-counterexample.json",
                   help="where to write the first counterexample on failure")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("com", help="complete orthogonal measurement with Schmidt weight alpha^2")
    p.add_argument("--alpha-sq", type=float, required=True)
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.set_defaults(func=cmd_com)
    return parser


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    if getattr(args, "trials", 1) < 1:
        print("error: --trials must be >= 1", file=sys.stderr)
        return EXIT_INVALID
    try:
        return args.func(args, out=out)
    except SwapInfoError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except OSError as exc:
        print(f"error: IoError: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
