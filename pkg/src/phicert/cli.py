"""Command-line front end.

Exit codes: for ``analyze``, 0 solvable, 1 insoluble, 2 unknown.  Budget
errors exit 3 and usage errors exit 4 for every subcommand.
"""

from __future__ import annotations

import argparse
import sys
import time

from .criteria import DEFAULT_MODULUS_CAP, analyze
from .oracle import DEFAULT_BUDGET, OracleBudget, OracleBudgetExceeded, count_solutions, iter_solutions
from .phidiv import all_phi_divisors
from .reduction import Equation, Mode, reduce_rhs
from .report import Report, parse_int, verdict_report
from .worked_examples import load_cases, run_cases

EXIT_SOLVABLE, EXIT_INSOLUBLE, EXIT_UNKNOWN = 0, 1, 2
EXIT_BUDGET, EXIT_USAGE = 3, 4
LIST_LIMIT = 1000

_EXIT_FOR = {"solvable": EXIT_SOLVABLE, "insoluble": EXIT_INSOLUBLE, "unknown": EXIT_UNKNOWN}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _int_expr(text):
    try:
        return parse_int(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _add_engine_flags(p):
    p.add_argument("--oracle-budget", type=_int_expr, default=DEFAULT_BUDGET.node_limit,
                   metavar="NODES", help="DFS node limit for the exact counter")
    p.add_argument("--json", action="store_true", help="line-delimited JSON on stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="phicert", description="Certified (in)solvability of sum x_i^n = b*c^n.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("analyze", help="decide solvability and print a certificate")
    p.add_argument("--n", type=_int_expr, required=True)
    p.add_argument("--m", type=_int_expr, required=True)
    p.add_argument("--b", type=_int_expr)
    p.add_argument("--c", type=_int_expr)
    p.add_argument("--rhs", type=_int_expr, help="raw right-hand side (instead of --b/--c)")
    p.add_argument("--natural", action="store_true", help="count positive solutions only")
    p.add_argument("--modulus-cap", type=_int_expr, default=DEFAULT_MODULUS_CAP)
    p.add_argument("--no-oracle", action="store_true", help="never fall back to exact counting")
    _add_engine_flags(p)

    p = sub.add_parser("count", help="exact number of ordered solutions")
    p.add_argument("--n", type=_int_expr, required=True)
    p.add_argument("--m", type=_int_expr, required=True)
    p.add_argument("--rhs", type=_int_expr, required=True)
    p.add_argument("--natural", action="store_true")
    p.add_argument("--list", action="store_true", help=f"also list solutions (count <= {LIST_LIMIT})")
    p.add_argument("--method", choices=("auto", "dfs", "table"), default="auto")
    _add_engine_flags(p)

    p = sub.add_parser("reduce", help="strip eligible p^n factors from a right-hand side")
    p.add_argument("--n", type=_int_expr, required=True)
    p.add_argument("--m", type=_int_expr, required=True)
    p.add_argument("--rhs", type=_int_expr, required=True)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("phidiv", help="list the phi-divisors of an exponent")
    p.add_argument("--n", type=_int_expr, required=True)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("verify-paper", help="replay the worked-example table")
    p.add_argument("--filter", metavar="TAG", help="only cases with this tag or id (e.g. thm9)")
    p.add_argument("--expectations", metavar="PATH", help="alternative case file")
    p.add_argument("--json", action="store_true")
    return parser


def _check_nm(args):
    if args.n < 2:
        raise UsageError(f"--n must be >= 2, got {args.n}")
    if args.m < 2:
        raise UsageError(f"--m must be >= 2, got {args.m}")


def _budget(args) -> OracleBudget:
    return OracleBudget(node_limit=args.oracle_budget, table_cap=DEFAULT_BUDGET.table_cap)


def _emit(report: Report, args, lines):
    if args.json:
        print(report.to_json())
    else:
        for line in lines:
            print(line)


def cmd_analyze(args) -> int:
    _check_nm(args)
    if args.rhs is not None:
        if args.b is not None or args.c is not None:
            raise UsageError("give either --rhs or --b/--c, not both")
        b, c = args.rhs, 1
    elif args.b is not None:
        b, c = args.b, 1 if args.c is None else args.c
    else:
        raise UsageError("one of --rhs or --b is required")
    if b < 0 or c < 1:
        raise UsageError("need b >= 0 and c >= 1")
    mode = Mode.NATURAL if args.natural else Mode.NONNEGATIVE
    eq = Equation(args.n, args.m, b, c, mode)
    t0 = time.perf_counter()
    verdict = analyze(eq, budget=_budget(args), modulus_cap=args.modulus_cap,
                      use_oracle=not args.no_oracle)
    inputs = eq.to_dict()
    if args.rhs is not None:
        inputs["rhs"] = args.rhs
    report = verdict_report("analyze", inputs, verdict, time.perf_counter() - t0)

    lines = [f"equation:    {eq}"]
    rt = verdict.rhs_trace
    if not (verdict.trace.is_identity and rt.is_identity):
        lines.append(f"reduction:   {eq.rhs} -> {rt.reduced}")
    lines.append(f"verdict:     {verdict.status.value.upper()}")
    if verdict.certificate is not None:
        lines.append(f"certificate: {verdict.certificate.describe()}")
    if verdict.count is not None:
        lines.append(f"count:       {verdict.count}")
    _emit(report, args, lines)
    return _EXIT_FOR[verdict.status.value]


def cmd_count(args) -> int:
    if args.n < 1 or args.m < 1 or args.rhs < 0:
        raise UsageError("need n >= 1, m >= 1 and rhs >= 0")
    mode = Mode.NATURAL if args.natural else Mode.NONNEGATIVE
    t0 = time.perf_counter()
    res = count_solutions(args.n, args.m, args.rhs, mode, method=args.method, budget=_budget(args))
    result = {"method": res.method}
    lines = [f"{res.count}"]
    if args.list:
        if res.count <= LIST_LIMIT:
            sols = [list(s) for s in iter_solutions(args.n, args.m, args.rhs, mode)]
            result["solutions"] = sols
            lines += [" ".join(map(str, s)) for s in sols]
        else:
            print(f"count {res.count} exceeds listing limit {LIST_LIMIT}", file=sys.stderr)
    report = Report("count", {"n": args.n, "m": args.m, "rhs": args.rhs, "mode": mode.value},
                    count=res.count, result=result, timing=time.perf_counter() - t0)
    _emit(report, args, lines)
    return 0


def cmd_reduce(args) -> int:
    _check_nm(args)
    if args.rhs < 1:
        raise UsageError("--rhs must be positive")
    reduced, trace = reduce_rhs(args.n, args.m, args.rhs)
    report = Report("reduce", {"n": args.n, "m": args.m, "rhs": args.rhs},
                    trace={"rhs": trace.to_dict()}, result={"reduced": reduced})
    lines = [f"{args.rhs} -> {reduced}"]
    for d, s in trace.steps:
        lines.append(f"  strip {d.p}^{args.n} x{s}  (phi-divisor {d.p}, degree {d.degree}, "
                     f"m <= {d.max_terms})")
    _emit(report, args, lines)
    return 0


def cmd_phidiv(args) -> int:
    if args.n < 1:
        raise UsageError("--n must be positive")
    divs = all_phi_divisors(args.n)
    report = Report("phidiv", {"n": args.n},
                    result={"divisors": [[d.p, d.degree] for d in divs]})
    lines = [f"{d.p} degree {d.degree} (p^k = {d.prime_power}, phi = {d.phi})" for d in divs]
    _emit(report, args, lines)
    return 0


def cmd_verify_examples(args) -> int:
    try:
        cases = load_cases(args.expectations)
    except (OSError, ValueError, KeyError, TypeError) as exc:
        print(f"cannot load expectations: {exc}", file=sys.stderr)
        return 1
    results = run_cases(cases, args.filter)
    failed = 0
    for r in results:
        failed += not r.passed
        if args.json:
            rep = Report("verify-paper", {"id": r.case.id},
                         verdict="pass" if r.passed else "fail",
                         result={"observed": r.observed, "expected": r.case.expect,
                                 "error": r.error})
            print(rep.to_json())
        else:
            status = "PASS" if r.passed else "FAIL"
            extra = "" if r.passed else f"  expected {r.case.expect}, got {r.observed or r.error}"
            print(f"{status}  {r.case.id}{extra}")
    if not args.json:
        print(f"{len(results) - failed}/{len(results)} passed")
    return 0 if results and not failed else 1


COMMANDS = {
    "analyze": cmd_analyze,
    "count": cmd_count,
    "reduce": cmd_reduce,
    "phidiv": cmd_phidiv,
    "verify-paper": cmd_verify_examples,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"phicert {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OracleBudgetExceeded as exc:
        print(f"phicert {args.command}: budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
