"""Command-line front end: solve, converge, sweep-alpha, limiter-table."""

from __future__ import annotations

import argparse
import sys

from . import harness
from .harness import RunConfig
from .limiters import DEFAULT_EPSILON, DEFAULT_Q, LimiterKind
from .solver import SolverError


def _float_list(text: str):
    return [float(v) for v in text.split(",") if v.strip()]


def _int_list(text: str):
    return [int(v) for v in text.split(",") if v.strip()]


def _add_run_flags(p: argparse.ArgumentParser, default_cells: str) -> None:
    p.add_argument("--problem", choices=["sine", "square"], default="sine")
    p.add_argument("--limiter", choices=[k.value for k in LimiterKind], default="comb")
    p.add_argument("--q", type=float, default=DEFAULT_Q, help="parameter of the 'as' limiter")
    p.add_argument("--alpha", type=float, default=None,
                   help="curvature bound for 'comb' (default: the problem's analytic value)")
    p.add_argument("--epsilon", type=float, default=DEFAULT_EPSILON)
    p.add_argument("--norm", choices=["l2", "l1"], default="l2")
    p.add_argument("--nu", type=float, default=0.8, help="Courant number")
    p.add_argument("--t-end", type=float, default=20.0)
    p.add_argument("--cells", type=_int_list, default=_int_list(default_cells))
    p.add_argument("--out", default=None, help="output file (default: stdout)")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--workers", type=int, default=1, help="resolutions run in parallel")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="thirdlim", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    _add_run_flags(sub.add_parser("solve", help="single run, per-cell solution table"), "160")
    _add_run_flags(sub.add_parser("converge", help="L1 convergence study"), "40,80,160,320,640")
    sweep = sub.add_parser("sweep-alpha", help="convergence study per alpha (combined limiter)")
    _add_run_flags(sweep, "40,80,160,320,640")
    sweep.add_argument("--alphas", type=_float_list, required=True)

    table = sub.add_parser("limiter-table", help="tabulate the ratio-form limiters over theta")
    table.add_argument("--theta-min", type=float, default=-2.0)
    table.add_argument("--theta-max", type=float, default=4.0)
    table.add_argument("--steps", type=int, default=601)
    table.add_argument("--q", type=float, default=DEFAULT_Q)
    table.add_argument("--limiters", type=lambda s: s.split(","), default=list(harness.TABLE_COLUMNS))
    table.add_argument("--out", default=None)
    return parser


def _run_config(args) -> RunConfig:
    return RunConfig(
        problem=args.problem, limiter=args.limiter, q=args.q, alpha_override=args.alpha,
        epsilon=args.epsilon, norm=args.norm, nu=args.nu, t_end=args.t_end,
        cells=tuple(args.cells), output_path=args.out, format=args.format,
        workers=args.workers,
    )


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "limiter-table":
            text = harness.emit_limiter_table(
                args.limiters, (args.theta_min, args.theta_max, args.steps), args.q, args.out
            )
        else:
            cfg = _run_config(args)
            if args.command == "solve":
                if len(cfg.cells) != 1:
                    raise ValueError("solve takes exactly one cell count")
                result = harness.solve(cfg)
                text = harness.solution_text(result, cfg.format)
                if cfg.output_path:
                    harness._write_text(text, cfg.output_path)
                print(f"l1_error={result.l1_error!r}", file=sys.stderr)
            elif args.command == "converge":
                text = harness.reports_text([harness.run_convergence(cfg)], cfg.format)
            else:
                text = harness.reports_text(harness.run_alpha_sweep(cfg, args.alphas), cfg.format)
        if getattr(args, "out", None) is None:
            sys.stdout.write(text)
    except SolverError as err:
        print(f"thirdlim: solver failed: {err}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as err:
        print(f"thirdlim: {err}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
