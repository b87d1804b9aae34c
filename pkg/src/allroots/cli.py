"""Command-line client for the solver service operations.

Subcommands: solve | check | expand | order.  Problems are JSON files (see
schemas.ProblemFile); results go to stdout, diagnostics to stderr.

Exit codes: 0 success, 2 invalid input, 3 solver did not converge,
4 conditions unsatisfied / no feasible constants, 5 insufficient data.
"""

from __future__ import annotations

import argparse
import json
import sys

from pydantic import ValidationError

from .precision import PrecisionContext, format_scalar, parse_scalar
from .problems import ProblemError
from .schemas import (
    CheckRequest,
    ExpandRequest,
    OrderRequest,
    ProblemFile,
    ResultFile,
    SolveRequest,
)
from .service import run_check, run_expand, run_order, run_solve
from .solver import CONVERGED

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_NOT_CONVERGED = 3
EXIT_UNSATISFIED = 4
EXIT_INSUFFICIENT = 5


def _fail(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return EXIT_INPUT


def _load_problem(path: str):
    try:
        with open(path, "r", encoding="utf-8") as handle:
            payload = json.load(handle)
    except OSError as err:
        return None, _fail(f"cannot read {path}: {err}")
    except json.JSONDecodeError as err:
        return None, _fail(f"{path} is not valid JSON: {err}")
    try:
        return ProblemFile.model_validate(payload), None
    except ValidationError as err:
        lines = [
            f"{'.'.join(str(part) for part in item['loc']) or '<root>'}: {item['msg']}"
            for item in err.errors()
        ]
        return None, _fail(f"invalid problem file {path}:\n  " + "\n  ".join(lines))


def _render_table(result: ResultFile, problem: ProblemFile, digits: int) -> str:
    ctx = PrecisionContext(problem.precision_digits)
    cells = []
    for row in result.table:
        if row.k == 0:
            values = [format_scalar(parse_scalar(v, ctx), digits, ctx) for v in row.values]
        else:
            values = list(row.values)
        cells.append([str(row.k)] + values)
    m = len(result.table[0].values)
    header = ["k"] + [f"x_{i + 1}[k]" for i in range(m)]
    widths = [
        max(len(header[col]), max(len(line[col]) for line in cells))
        for col in range(m + 1)
    ]
    lines = ["  ".join(header[col].ljust(widths[col]) for col in range(m + 1)).rstrip()]
    for line in cells:
        lines.append("  ".join(line[col].ljust(widths[col]) for col in range(m + 1)).rstrip())
    return "\n".join(lines)


def _cmd_solve(args) -> int:
    problem, failure = _load_problem(args.input)
    if problem is None:
        return failure
    updates = {}
    if args.tolerance is not None:
        updates["tolerance"] = args.tolerance
    if args.max_iter is not None:
        updates["max_iterations"] = args.max_iter
    if updates:
        problem = problem.model_copy(update=updates)
    try:
        result = run_solve(SolveRequest(problem=problem, digits=args.digits))
    except ProblemError as err:
        return _fail(str(err))

    if args.json:
        print(result.model_dump_json(indent=2))
    else:
        print(_render_table(result, problem, args.digits))
    if result.status == CONVERGED:
        return EXIT_OK
    print(f"solver stopped with status: {result.status}", file=sys.stderr)
    return EXIT_NOT_CONVERGED


def _cmd_check(args) -> int:
    problem, failure = _load_problem(args.input)
    if problem is None:
        return failure
    request = CheckRequest(
        problem=problem,
        theorem=args.theorem,
        c=args.c,
        q=args.q,
        xi=args.xi,
        search=args.search,
    )
    try:
        response = run_check(request)
    except ProblemError as err:
        return _fail(str(err))

    if response.report is not None:
        report = response.report
        print(f"theorem {report.theorem}"
              + (f"  (d = {report.d})" if report.d is not None else ""))
        for name, value in report.derived_constants.items():
            print(f"  {name} = {value}")
        for index, row in enumerate(report.rows, start=1):
            verdict = "pass" if row.passed else "FAIL"
            print(f"  [{index:2d}] {verdict}  {row.label}:  {row.lhs} < {row.rhs}")
        for note in report.notes:
            print(f"  note: {note}")
        print(f"  initial ball radius c*q = {report.initial_ball_radius}")
        print(f"satisfied: {'yes' if report.satisfied else 'no'}")
    if response.search_performed:
        if response.found is None:
            print("search: no feasible constants found")
        else:
            found = response.found
            text = f"search: c = {found.c}, q = {found.q}"
            if found.xi is not None:
                text += f", xi = {found.xi}"
            print(text)
    return EXIT_OK if response.satisfied else EXIT_UNSATISFIED


def _cmd_expand(args) -> int:
    problem, failure = _load_problem(args.input)
    if problem is None:
        return failure
    try:
        response = run_expand(ExpandRequest(problem=problem))
    except ProblemError as err:
        return _fail(str(err))
    if isinstance(response.coefficients, list):
        print(" ".join(response.coefficients))
    else:
        print(f"a0 {response.coefficients.a0}")
        print("a " + " ".join(response.coefficients.a))
        print("b " + " ".join(response.coefficients.b))
    return EXIT_OK


def _cmd_order(args) -> int:
    problem, failure = _load_problem(args.input)
    if problem is None:
        return failure
    try:
        response = run_order(OrderRequest(problem=problem))
    except ProblemError as err:
        return _fail(str(err))
    if response.order_estimate is None:
        print(f"error: {response.detail}", file=sys.stderr)
        return EXIT_INSUFFICIENT
    print(response.order_estimate)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="allroots",
        description="Simultaneously refine all roots of algebraic, trigonometric "
        "and exponential polynomials with known multiplicities.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    solve = sub.add_parser("solve", help="run the simultaneous iteration")
    solve.add_argument("input", help="problem file (JSON)")
    solve.add_argument("--digits", type=int, default=18,
                       help="fractional digits in printed values (default 18)")
    mode = solve.add_mutually_exclusive_group()
    mode.add_argument("--json", action="store_true", help="emit the result as JSON")
    mode.add_argument("--table", action="store_true",
                      help="emit the iterate table (default)")
    solve.add_argument("--tolerance", help="override the file's tolerance")
    solve.add_argument("--max-iter", type=int, help="override the file's max_iterations")
    solve.set_defaults(func=_cmd_solve)

    check = sub.add_parser("check", help="evaluate certified-convergence conditions")
    check.add_argument("input", help="problem file (JSON, factored representation)")
    check.add_argument("--theorem", choices=["1", "2", "3", "auto"], default="auto")
    check.add_argument("--c", help="candidate constant c (decimal string)")
    check.add_argument("--q", help="candidate constant q (decimal string)")
    check.add_argument("--xi", help="candidate constant xi (trigonometric only)")
    check.add_argument("--search", action="store_true",
                       help="grid-search feasible constants")
    check.set_defaults(func=_cmd_check)

    expand = sub.add_parser("expand", help="expand a factored spec to coefficients")
    expand.add_argument("input", help="problem file (JSON, factored representation)")
    expand.set_defaults(func=_cmd_expand)

    order = sub.add_parser("order", help="estimate the empirical convergence order")
    order.add_argument("input", help="problem file (JSON, factored representation)")
    order.set_defaults(func=_cmd_order)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
