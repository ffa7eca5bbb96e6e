"""Command-line front end: ``indel-bounds <subcommand> ...``.

Exit status: 0 on success, 1 when a requested check fails, 2 on usage or
parameter errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

import numpy as np

from . import asymptotics, bounds, checks, constant_weight, constructions, formats, oracle
from .config import default_limits
from .errors import ParameterError
from .levenshtein import (
    Word,
    fixed_radius_ball,
    insertion_ball_size,
    lcs,
    levenshtein_distance,
)

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, indent=2) + "\n")


def cmd_dist(args) -> int:
    x, y = Word.parse(args.x, args.q), Word.parse(args.y, args.q)
    _emit({"x": str(x), "y": str(y), "q": args.q, "lcs": lcs(x, y), "distance": levenshtein_distance(x, y)})
    return EXIT_OK


def cmd_ball(args) -> int:
    z = Word.parse(args.z, args.q)
    members = sorted(fixed_radius_ball(z, args.s, args.t, limits=args.limits), key=lambda w: (len(w), w.symbols))
    out = {"z": str(z), "q": args.q, "s": args.s, "t": args.t, "size": len(members)}
    if args.t == 0:
        # insertions only: disjoint lengths, each counted by the closed form
        out["closed_form_size"] = sum(insertion_ball_size(args.q, len(z), k) for k in range(args.s + 1))
    if args.enumerate:
        out["members"] = [str(w) for w in members]
    _emit(out)
    return EXIT_OK


def cmd_cw(args) -> int:
    if args.exact:
        answer = constant_weight.max_constant_weight_exact(args.n, args.d, args.w, limits=args.limits)
    else:
        answer = constant_weight.cw_upper_bound(args.n, args.d, args.w, limits=args.limits)
    _emit(formats.cw_answer_to_record(answer))
    return EXIT_OK


def cmd_bound(args) -> int:
    p = bounds.CodeParams(args.q, args.n, args.d)
    if args.all:
        best = bounds.best_bound(p, mode=args.mode or "upper", limits=args.limits)
        _emit({"best": best.bound.to_record(), "s": best.s, "t": best.t, "trivial": best.trivial})
        return EXIT_OK
    if args.s is None and args.t is None:
        results = [bounds.singleton_bound(p), bounds.sphere_packing_bound(p), bounds.trivial_bound(p)]
    else:
        lp = bounds.ListParams(args.s or 0, args.t or 0)
        results = [
            bounds.hy_list_bound(p, lp),
            bounds.main_johnson_list_bound(p, lp, args.mode or "exact", args.limits),
            bounds.yasunaga_elias_bound(p, lp.t) if lp.s == 0 else None,
            bounds.main_elias_bound(p, lp, args.mode or "exact", args.limits),
            bounds.shortened_sphere_packing(p, lp),
        ]
    _emit([b.to_record() for b in results if b is not None])
    return EXIT_OK


def cmd_construct(args) -> int:
    p = bounds.CodeParams(args.q, args.n, args.d)
    lp = bounds.ListParams(args.s, args.t)
    inst = constructions.build_tightness_instance(p, lp, args.limits)
    report = constructions.verify_tightness_instance(inst, args.limits)
    _emit({"instance": formats.instance_to_document(inst), "verification": formats.report_to_record(report)})
    return EXIT_OK if report.passed else EXIT_FAILED


def cmd_asympt(args) -> int:
    if args.steps < 1:
        raise ParameterError("--steps must be positive")
    deltas = np.linspace(args.delta_min, args.delta_max, args.steps)
    cfg = asymptotics.OptimizerConfig(grid=args.grid, arg_tol=args.tol)
    rows = asymptotics.rate_curve(args.q, deltas, cfg)
    sys.stdout.write(asymptotics.curve_to_csv(rows))
    return EXIT_OK


def cmd_oracle(args) -> int:
    p = bounds.CodeParams(args.q, args.n, args.d)
    result = oracle.max_indel_code_exact(p, limits=args.limits)
    record = result.to_record()
    if args.timing:
        record["elapsed"] = result.elapsed
    if args.s is not None or args.t is not None:
        s, t = args.s or 0, args.t or 0
        stats = oracle.shortening_experiment(result.witness, s, t, args.trials, args.seed)
        record["shortening"] = {
            "s": s,
            "t": t,
            "trials": stats.trials,
            "seed": stats.seed,
            "mean": stats.mean,
            "stderr": stats.stderr,
            "expected": f"{stats.expected.numerator}/{stats.expected.denominator}",
        }
    _emit(record)
    return EXIT_OK if result.exact else EXIT_FAILED


def cmd_verify(args) -> int:
    results = checks.run_verification(args.level)
    for r in results:
        sys.stdout.write(f"{'PASS' if r.passed else 'FAIL'} {r.name}: {r.detail}\n")
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="indel-bounds", description="Bounds, constructions and exact searches for insertion/deletion codes."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dist", help="LCS and insertion/deletion distance")
    p.add_argument("--x", required=True)
    p.add_argument("--y", required=True)
    p.add_argument("--q", type=int, required=True)
    p.set_defaults(func=cmd_dist)

    p = sub.add_parser("ball", help="size of B_L(z, s, t)")
    p.add_argument("--z", required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--s", type=int, default=0)
    p.add_argument("--t", type=int, default=0)
    p.add_argument("--enumerate", action="store_true", help="list the members")
    p.set_defaults(func=cmd_ball)

    p = sub.add_parser("cw", help="binary constant-weight code size A(n, d, w)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--w", type=int, required=True)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--exact", action="store_true", help="exact search with witness")
    g.add_argument("--upper", action="store_true", help="best upper bound (default)")
    p.set_defaults(func=cmd_cw)

    p = sub.add_parser("bound", help="finite-length bounds on A_q(n, d)")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--s", type=int)
    p.add_argument("--t", type=int)
    p.add_argument(
        "--mode", choices=bounds.MODES, help="constant-weight factor: exact (default), or upper with --all"
    )
    p.add_argument("--all", action="store_true", help="sweep (s, t) and report the best bound")
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("construct", help="build and verify a tight list instance")
    for flag in ("--q", "--n", "--d", "--s", "--t"):
        p.add_argument(flag, type=int, required=True)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("asympt", help="rate curves as CSV")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--delta-min", type=float, required=True)
    p.add_argument("--delta-max", type=float, required=True)
    p.add_argument("--steps", type=int, required=True)
    p.add_argument("--grid", type=int, default=200)
    p.add_argument("--tol", type=float, default=1e-9)
    p.set_defaults(func=cmd_asympt)

    p = sub.add_parser("oracle", help="exact A_q(n, d) by exhaustive search")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--s", type=int, help="run the shortening experiment with this s")
    p.add_argument("--t", type=int, help="run the shortening experiment with this t")
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--timing", action="store_true", help="include wall-clock time")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("verify", help="run the cross-check suites")
    p.add_argument("--level", choices=checks.LEVELS, default="quick")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.limits = default_limits()
        return args.func(args)
    except ParameterError as exc:
        sys.stderr.write(f"indel-bounds: error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
