from __future__ import annotations

import argparse
import sys
from typing import List, Optional

from .commands import (
    CommandOutput,
    cmd_eval,
    cmd_optimal,
    cmd_pi,
    cmd_points,
    cmd_reproduce,
    cmd_sample,
    cmd_series,
)
from .config import DEFAULT_MAX_LEVELS, DEFAULT_TOL, MC_WORKERS, logger
from .errors import ArgumentError, SquigError
from .models import QuadratureConfig
from .pi import METHODS
from .ptrig import FUNCTIONS
from .storage import save_output


def _grid(text: str) -> List[float]:
    try:
        return [float(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"grid must be comma-separated numbers, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print the JSON output envelope")
    common.add_argument("--tol", type=float, default=DEFAULT_TOL, help="quadrature target relative error")
    common.add_argument("--max-levels", type=int, default=DEFAULT_MAX_LEVELS, help="quadrature refinement levels")
    common.add_argument("--out", metavar="FILE", help="also write the output to FILE")

    parser = argparse.ArgumentParser(
        prog="squigonometry",
        description="Generalized p-trigonometry: functions, series, pi_p, p-circle geometry.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", parents=[common], help="evaluate a p-trigonometric function")
    p_eval.add_argument("function", choices=sorted(FUNCTIONS))
    p_eval.add_argument("--p", type=float, required=True)
    arg = p_eval.add_mutually_exclusive_group(required=True)
    arg.add_argument("--t", type=float, help="argument of sin/cos/tan/sec/csc/cot")
    arg.add_argument("--x", type=float, help="argument of arcsin/arccos")

    p_series = sub.add_parser("series", parents=[common], help="exact Taylor coefficients")
    p_series.add_argument("kind", choices=["arcsin", "sin"])
    p_series.add_argument("--p", type=float, required=True)
    p_series.add_argument("--order", type=int, required=True)
    p_series.add_argument("--rigidity", action="store_true", help="append the rigidity report summary")

    p_pi = sub.add_parser("pi", parents=[common], help="compute pi_p")
    p_pi.add_argument("--p", type=float)
    p_pi.add_argument("--method", choices=list(METHODS), default="gamma")
    p_pi.add_argument("--n", type=int, help="Monte Carlo sample count")
    p_pi.add_argument("--seed", type=int, help="Monte Carlo seed (required for mc)")
    p_pi.add_argument("--terms", type=int, default=1000, help="series terms")
    p_pi.add_argument("--workers", type=int, default=MC_WORKERS, help="Monte Carlo worker threads")
    p_pi.add_argument("--grid", type=_grid, help="comma-separated ascending p values; emits CSV")

    p_opt = sub.add_parser("optimal", parents=[common], help="solve an optimal-p problem")
    p_opt.add_argument("objective", choices=["area", "perimeter", "curvature"])
    p_opt.add_argument("--solver-tol", type=float, default=1e-10)

    p_sample = sub.add_parser("sample", parents=[common], help="CSV sample points")
    p_sample.add_argument("--p", type=float, required=True)
    p_sample.add_argument("--count", type=int, default=100)
    p_sample.add_argument("--what", choices=["circle", "sin", "cos"], default="circle")

    p_points = sub.add_parser("points", parents=[common], help="classify rational points")
    p_points.add_argument("--p", type=float, required=True)
    p_points.add_argument("--samples", type=int, default=5)

    p_repro = sub.add_parser("reproduce", parents=[common], help="recompute the table of reference values")
    p_repro.add_argument("--seed", type=int, help="include Monte Carlo rows with this seed")
    p_repro.add_argument("--n", type=int, default=10_000_000)

    return parser


def dispatch(args: argparse.Namespace) -> CommandOutput:
    cfg = QuadratureConfig(args.tol, args.max_levels)
    if args.command == "eval":
        is_inverse = args.function.startswith("arc")
        value = args.x if is_inverse else args.t
        if value is None:
            raise ArgumentError(f"{args.function} takes {'--x' if is_inverse else '--t'}")
        return cmd_eval(args.function, args.p, value, cfg)
    if args.command == "series":
        return cmd_series(args.kind, args.p, args.order, args.rigidity)
    if args.command == "pi":
        return cmd_pi(args.p, args.method, cfg, n=args.n, seed=args.seed, terms=args.terms,
                      workers=args.workers, grid=args.grid)
    if args.command == "optimal":
        return cmd_optimal(args.objective, cfg, args.solver_tol)
    if args.command == "sample":
        return cmd_sample(args.p, args.count, args.what, cfg)
    if args.command == "points":
        return cmd_points(args.p, args.samples)
    return cmd_reproduce(cfg, seed=args.seed, n=args.n)


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        output = dispatch(args)
        text = output.render(args.json)
        print(text)
        if args.out:
            save_output(args.out, text)
    except SquigError as e:
        logger.error(f"❌ {args.command} failed: {e}")
        print(f"error: {e}", file=sys.stderr)
        return e.exit_code
    return 0
