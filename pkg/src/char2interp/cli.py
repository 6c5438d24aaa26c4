"""Command-line front end; JSON reports on stdout, grids on stderr.

Exit codes: 0 for regular/certified outcomes, 1 for dependent (or otherwise
non-certified) outcomes, 2 for usage and parse errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import enumeration
from .derive import KINDS, derive
from .diagram import parse_diagram, verify_division
from .errors import Char2Error
from .lattice import PointMultiset, parse_inline_points, parse_points
from .regularity import (
    KernelSolution,
    TripleWitness,
    m_independence,
    theorem_check,
)
from .scheme import Scheme, almost_regular_mc, parse_scheme_file

EXIT_OK = 0
EXIT_DEPENDENT = 1
EXIT_USAGE = 2


def _emit(report: dict) -> None:
    json.dump(report, sys.stdout, indent=2, sort_keys=True)
    sys.stdout.write("\n")


def _points_json(points) -> list[list[int]]:
    return [[int(i), int(j)] for (i, j) in points]


def _solution_json(sol: KernelSolution) -> dict:
    return {"type": "kernel-solution", "m": sol.m, "support": _points_json(sol.support.points())}


def _triple_json(w: TripleWitness) -> dict:
    return {
        "type": "triple",
        "t": w.t,
        "u": _points_json(sorted(w.u)),
        "v": _points_json(sorted(w.v)),
        "w": _points_json(sorted(w.w)),
    }


def _load_set(args) -> PointMultiset:
    if args.inline is not None:
        return parse_inline_points(args.inline)
    return parse_points(Path(args.set).read_text())


def _add_set_args(p: argparse.ArgumentParser) -> None:
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--set", metavar="FILE", help="point-set file, one 'i j' pair per line")
    group.add_argument("--inline", metavar="STR", help="inline points, e.g. '0,0;1,2;3,3'")


def cmd_indep(args) -> int:
    s = _load_set(args)
    res = m_independence(s, args.m)
    report = {
        "command": "indep",
        "verdict": "regular" if res.independent else "dependent",
        "parameters": {"m": args.m, "size": res.size},
        "rank": res.rank,
        "witness": None if res.witness is None else _solution_json(res.witness),
    }
    _emit(report)
    return EXIT_OK if res.independent else EXIT_DEPENDENT


def cmd_theorem(args) -> int:
    s = _load_set(args)
    verdict = theorem_check(s, args.t)
    witness = None
    if verdict.witness is not None:
        witness = _triple_json(verdict.witness)
    elif verdict.double_element is not None:
        witness = {"type": "double-element", "cell": list(verdict.double_element)}
    elif verdict.duplicate is not None:
        witness = {"type": "duplicate", "point": list(verdict.duplicate)}
    report = {
        "command": "theorem",
        "verdict": "regular" if verdict.regular else "dependent",
        "reason": verdict.reason,
        "parameters": {"t": args.t, "size": PointMultiset.of(s).size},
        "witness": witness if args.witness else None,
    }
    _emit(report)
    if args.verbose and witness is not None:
        print(f"witness: {witness}", file=sys.stderr)
    return EXIT_OK if verdict.regular else EXIT_DEPENDENT


def cmd_derive(args) -> int:
    s = _load_set(args)
    d = derive(s, args.t, args.kind)
    grid = d.grid_lines()
    report = {
        "command": "derive",
        "parameters": {"t": args.t, "kind": args.kind},
        "points": [[p[0], p[1], c] for p, c in sorted(d.counts.items())],
        "grid": grid,
    }
    _emit(report)
    if args.verbose:
        print("\n".join(grid), file=sys.stderr)
    return EXIT_OK


def cmd_scheme(args) -> int:
    scheme = parse_scheme_file(args.scheme)
    verdict = almost_regular_mc(scheme, args.trials, args.seed)
    report = {
        "command": "scheme",
        "verdict": {
            "certified": "certified",
            "observed-dependent": "observed-dependent",
            "not-square": "inconclusive",
        }[verdict.status],
        "parameters": {
            "trials": args.trials,
            "seed": args.seed,
            "rows": verdict.rows,
            "cols": verdict.cols,
            "mults": list(scheme.mults),
        },
        "seed": args.seed,
        "trials_used": verdict.trials_used,
        "degree_bound": verdict.degree_bound,
        "per_trial_failure_bound": verdict.per_trial_failure_bound,
        "overall_failure_bound": verdict.overall_failure_bound,
        "determinant": None if verdict.determinant is None else f"{verdict.determinant:#018x}",
        "max_rank": verdict.max_rank,
    }
    _emit(report)
    return EXIT_OK if verdict.status == "certified" else EXIT_DEPENDENT


def cmd_diagram(args) -> int:
    dg = parse_diagram(Path(args.file).read_text())
    mults = tuple(int(v) for v in args.mults.split(",") if v.strip())
    report_obj = verify_division(dg, mults)
    blocks = [
        {
            "knot": b.knot,
            "label": b.label,
            "size": b.size,
            "expected_size": b.expected_size,
            "independent": b.independent,
            "theorem_agrees": b.theorem_agrees,
        }
        for b in report_obj.blocks
    ]
    report = {
        "command": "diagram",
        "verdict": report_obj.verdict,
        "parameters": {"file": str(args.file), "mults": list(mults), "d": dg.d},
        "blocks": blocks,
    }
    ok = report_obj.all_nonsingular
    if args.full_check:
        scheme = Scheme.with_triangle_support(dg.d, mults)
        mc = almost_regular_mc(scheme, args.trials, args.seed)
        report["full_check"] = {
            "verdict": "certified" if mc.status == "certified" else mc.status,
            "trials_used": mc.trials_used,
            "seed": args.seed,
            "per_trial_failure_bound": mc.per_trial_failure_bound,
        }
        ok = ok and mc.status == "certified"
    _emit(report)
    if args.verbose:
        for b in report_obj.blocks:
            status = "ok" if b.passed else "FAIL"
            print(
                f"knot {b.knot} (label {b.label}): {b.size}/{b.expected_size} cells, "
                f"independent={b.independent} [{status}]",
                file=sys.stderr,
            )
    return EXIT_OK if ok else EXIT_DEPENDENT


def cmd_enumerate(args) -> int:
    if args.mode == "exhaustive":
        if args.t >= 2:
            print(
                f"error: exhaustive enumeration at t={args.t} is infeasible; use --mode sample",
                file=sys.stderr,
            )
            return EXIT_USAGE
        scan = enumeration.exhaustive_agreement(args.t)
    else:
        scan = enumeration.sampled_agreement(args.t, args.count, args.seed)
    report = {
        "command": "enumerate",
        "verdict": "agreement" if scan.all_agree else "disagreement",
        "parameters": {"t": args.t, "mode": args.mode, "count": scan.total, "seed": scan.seed},
        "total": scan.total,
        "agreements": scan.agreements,
        "disagreements": [_points_json(sorted(s)) for s in scan.disagreements[:16]],
    }
    _emit(report)
    return EXIT_OK if scan.all_agree else EXIT_DEPENDENT


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="char2interp",
        description="Decision procedures for monomial interpolation problems in characteristic 2.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("indep", help="m-independence of a point set")
    _add_set_args(p)
    p.add_argument("--m", type=int, required=True, help="knot multiplicity (>= 1)")
    p.set_defaults(func=cmd_indep)

    p = sub.add_parser("theorem", help="recursive criterion at level t+1, with witnesses")
    _add_set_args(p)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--witness", action="store_true", help="include the witness in the report")
    p.set_defaults(func=cmd_theorem)

    p = sub.add_parser("derive", help="derived set of a subset of B_{t+1}")
    _add_set_args(p)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--kind", choices=KINDS, required=True)
    p.set_defaults(func=cmd_derive)

    p = sub.add_parser("scheme", help="Monte Carlo almost-regularity certificate")
    p.add_argument("--scheme", metavar="FILE", required=True)
    p.add_argument("--trials", type=int, default=8)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_scheme)

    p = sub.add_parser("diagram", help="verify a division diagram block by block")
    p.add_argument("--file", metavar="FILE", required=True)
    p.add_argument("--mults", metavar="LIST", required=True, help="comma-separated multiplicities")
    p.add_argument("--full-check", action="store_true", help="also certify the induced scheme")
    p.add_argument("--trials", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_diagram)

    p = sub.add_parser("enumerate", help="criterion vs. rank oracle over subsets of B_{t+1}")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--mode", choices=("exhaustive", "sample"), default="exhaustive")
    p.add_argument("--count", type=int, default=10000)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_enumerate)

    for sp in sub.choices.values():
        sp.add_argument("--verbose", action="store_true", help="human-readable detail on stderr")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except (Char2Error, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
