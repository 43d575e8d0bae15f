"""Command-line interface.

Exit codes: 0 success, 1 internal failure, 2 invalid input file (or bad
usage), 3 argument outside its admissible range.
"""

from __future__ import annotations

import argparse
import csv
import io
import sys
from typing import Callable, List, Optional, Sequence

import numpy as np

from . import lhv, oracle, paradox, pauli
from .errors import DomainError, ParseError, ValidationError
from .io import dumps, fmt, read_state_file, state_to_json

EXIT_OK, EXIT_INTERNAL, EXIT_INPUT, EXIT_DOMAIN = 0, 1, 2, 3


def _csv(header: Sequence[str], rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([fmt(v) if isinstance(v, (float, np.floating)) else v for v in row])
    return buf.getvalue()


def cmd_report(args) -> str:
    rho = read_state_file(args.statefile)
    return dumps(paradox.paradox_report(rho).to_dict()) + "\n"


def cmd_decompose(args) -> str:
    coeffs = pauli.decompose(read_state_file(args.statefile))
    return _csv(("r", "s", "t", "p"), ((r, s, t, p) for (r, s, t), p in coeffs.items()))


def cmd_make_optimal(args) -> str:
    return state_to_json(paradox.optimal_state(args.f1))


def cmd_frontier(args) -> str:
    if args.points < 2:
        raise DomainError(f"--points must be >= 2, got {args.points}")
    grid = np.linspace(args.start, args.stop, args.points)
    rows = []
    for f1 in grid:
        pt = paradox.frontier_point(float(f1))
        rows.append((pt.f1, pt.violation, pt.entropy, pt.purity_floor))
    return _csv(("f1", "violation", "linear_entropy", "purity_floor"), rows)


def cmd_lhv(args) -> str:
    return dumps(lhv.enumerate_all().to_dict()) + "\n"


def cmd_scan(args) -> str:
    config = oracle.SampleConfig(args.n, args.seed, args.mode, args.weight)
    return dumps(oracle.purity_bound_scan(config).to_dict()) + "\n"


def _optimizer_params(args) -> dict:
    return dict(
        restarts=args.restarts,
        max_iterations=args.max_iterations,
        penalty_weight=args.penalty,
        seed=args.seed,
    )


def cmd_optimize(args) -> str:
    res = oracle.minimize_purity_at_f1(args.f1, warm_start=args.warm_start, **_optimizer_params(args))
    return dumps(res.to_dict()) + "\n"


def _parse_grid(text: str) -> List[float]:
    try:
        return [float(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise DomainError(f"--grid must be a comma-separated list of numbers, got {text!r}") from None


def cmd_frontier_verify(args) -> str:
    grid = _parse_grid(args.grid)
    rows = []
    for f1, cmp in zip(grid, oracle.frontier_scan(grid, **_optimizer_params(args))):
        if cmp.error is not None:
            print(f"error: {cmp.error}", file=sys.stderr)
            rows.append((float(f1), "", "", "", "false"))
            continue
        r = cmp.result
        rows.append((r.target_f1, r.analytic_floor, r.achieved_purity, r.gap, str(r.converged).lower()))
    return _csv(("f1", "analytic_floor", "achieved_purity", "gap", "converged"), rows)


def _add_optimizer_args(p):
    p.add_argument("--restarts", type=int, default=8, help="random restarts (default 8)")
    p.add_argument("--max-iterations", type=int, default=2000, help="iteration cap per restart")
    p.add_argument("--penalty", type=float, default=1e2, help="quadratic penalty weight")
    p.add_argument("--seed", type=int, default=0, help="base seed for random starts")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ghzparadox",
        description="Three-qubit GHZ paradox for mixed states: reports, optimal states and numerical checks.",
    )
    sub = parser.add_subparsers(dest="command", metavar="command", required=True)

    def add(name: str, func: Callable, help: str):
        p = sub.add_parser(name, help=help, description=help)
        p.set_defaults(func=func)
        p.add_argument("--out", metavar="PATH", help="write output here instead of stdout")
        return p

    p = add("report", cmd_report, "evaluate the GHZ logical inequality for a state file (JSON)")
    p.add_argument("statefile")
    p = add("decompose", cmd_decompose, "Pauli coefficients p_rst of a state file (CSV)")
    p.add_argument("statefile")
    p = add("make-optimal", cmd_make_optimal, "write the optimal noisy GHZ state for a given f1 (JSON state file)")
    p.add_argument("--f1", type=float, required=True)
    p = add("frontier", cmd_frontier, "analytic entropy/violation frontier (CSV)")
    p.add_argument("--points", type=int, default=101)
    p.add_argument("--start", type=float, default=0.0)
    p.add_argument("--stop", type=float, default=0.5)
    add("lhv", cmd_lhv, "enumerate deterministic local hidden variable models (JSON)")
    p = add("scan", cmd_scan, "random-state check of the purity floor (JSON)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--mode", choices=oracle.MODES, required=True)
    p.add_argument("--weight", type=float, default=0.0, help="perturbation weight (frontier-perturbation mode)")
    p = add("optimize", cmd_optimize, "minimize purity at fixed f1 (JSON)")
    p.add_argument("--f1", type=float, required=True)
    p.add_argument("--warm-start", action="store_true", help="start from the analytic optimum")
    _add_optimizer_args(p)
    p = add("frontier-verify", cmd_frontier_verify, "compare optimizer against the analytic frontier (CSV)")
    p.add_argument("--grid", required=True, help="comma-separated f1 values in [0.25, 0.5]")
    _add_optimizer_args(p)
    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        text = args.func(args)
        if args.out:
            with open(args.out, "w") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
    except ParseError as exc:
        print(f"error: invalid input file: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ValidationError as exc:
        print(f"error: invalid input file: failed {exc.check} check: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except Exception as exc:  # noqa: BLE001
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    return EXIT_OK


def main() -> None:
    sys.exit(run())
