import argparse
import sys
from typing import Any, Dict, List, Union

from SturmLiouville.Bochner.Interval import Interval
from SturmLiouville.Callbacks.ListCallback import ListCallback
from SturmLiouville.Callbacks.TensorboardCallback import TensorboardCallback
from SturmLiouville.Cli.Commands import EXIT_ERROR, OperatorSpec, cmd_classify, cmd_gram, cmd_highorder, \
    cmd_polys, cmd_selftest, cmd_weight
from SturmLiouville.Cli.Expression import parse_rational
from SturmLiouville.Cli.Report import SCHEMA_VERSION, dumps
from SturmLiouville.Cli.SelfTest import SelfTest
from SturmLiouville.Errors import ExpressionSyntaxError, SturmLiouvilleError
from SturmLiouville.Families import FAMILIES


def _add_operator_flags(parser: argparse.ArgumentParser):
    parser.add_argument("--a", type=str, default=None, help="leading coefficient, e.g. '1-x^2'")
    parser.add_argument("--b", type=str, default=None, help="first-order coefficient, e.g. '-2*x'")
    parser.add_argument("--c", type=str, default=None, help="constant coefficient, e.g. '0'")
    parser.add_argument("--family", type=str, default=None, choices=list(FAMILIES))
    parser.add_argument("--alpha", type=str, default=None, help="jacobi family parameter")
    parser.add_argument("--beta", type=str, default=None, help="jacobi family parameter")
    parser.add_argument("--c-param", type=str, default=None, help="confluent family parameter")
    parser.add_argument("--kind", type=int, default=None, help="chebyshev family kind, 1 or 2")


def _add_output_flags(parser: argparse.ArgumentParser):
    parser.add_argument("--json", action="store_true", help="print the JSON report")
    parser.add_argument("--output", type=str, default=None, help="also write the JSON report to this file")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="slab", description="Exact Sturm-Liouville weights, eigenpolynomials and "
                                                              "orthogonality checks.")
    commands = parser.add_subparsers(dest="command", required=True)

    classify = commands.add_parser("classify", help="case, mode, interval and weight of a y'' + b y' + c y")
    _add_operator_flags(classify)
    _add_output_flags(classify)

    weight = commands.add_parser("weight", help="weight of the operator with leading coefficients a and b")
    _add_operator_flags(weight)
    weight.add_argument("--order", type=int, default=2, choices=[1, 2, 3, 4])
    _add_output_flags(weight)

    polys = commands.add_parser("polys", help="monic eigenpolynomials up to degree n-max")
    _add_operator_flags(polys)
    polys.add_argument("--n-max", type=int, default=5)
    polys.add_argument("--plot-csv", type=str, default=None, help="write sampled values to this CSV file")
    _add_output_flags(polys)

    gram = commands.add_parser("gram", help="exact Gram matrix of the eigenpolynomials")
    _add_operator_flags(gram)
    gram.add_argument("--n-max", type=int, default=5)
    gram.add_argument("--numeric", action="store_true", help="add the quadrature mirror")
    gram.add_argument("--tol", type=float, default=1e-10)
    gram.add_argument("--logdir", type=str, default=None)
    _add_output_flags(gram)

    highorder = commands.add_parser("highorder", help="order 3 and 4 determining equations with p = 1")
    for k in range(4, -1, -1):
        highorder.add_argument(f"--a{k}", type=str, default=None)
    highorder.add_argument("--interval", type=str, nargs=2, default=["-1", "1"], metavar=("LO", "HI"))
    highorder.add_argument("--degree-bound", type=int, default=8)
    highorder.add_argument("--example-4th", action="store_true")
    _add_output_flags(highorder)

    selftest = commands.add_parser("selftest", help="run the acceptance suite")
    selftest.add_argument("--n-max", type=int, default=10)
    selftest.add_argument("--numeric-n-max", type=int, default=6)
    selftest.add_argument("--grid-size", type=int, default=10)
    selftest.add_argument("--seed", type=int, default=0)
    selftest.add_argument("--n-random", type=int, default=200)
    selftest.add_argument("--tol", type=float, default=1e-10)
    selftest.add_argument("--inject-fault", action="store_true", help="corrupt eigenvalues to test the suite")
    selftest.add_argument("--logdir", type=str, default=None)
    selftest.add_argument("--no-progress", action="store_true")
    _add_output_flags(selftest)
    return parser


def _spec(args: argparse.Namespace) -> OperatorSpec:
    fields = ("a", "b", "c", "a4", "a3", "a2", "a1", "a0", "family", "alpha", "beta", "c_param", "kind")
    return OperatorSpec(**{name: getattr(args, name, None) for name in fields})


def dispatch(args: argparse.Namespace):
    if args.command == "classify":
        return cmd_classify(_spec(args))
    elif args.command == "weight":
        return cmd_weight(_spec(args), args.order)
    elif args.command == "polys":
        return cmd_polys(_spec(args), args.n_max, args.plot_csv)
    elif args.command == "gram":
        callback = ListCallback([TensorboardCallback(args.logdir, prefix="gram") if args.logdir else None])
        return cmd_gram(_spec(args), args.n_max, args.numeric, args.tol, callback)
    elif args.command == "highorder":
        interval = Interval.closed(parse_rational(args.interval[0]), parse_rational(args.interval[1]))
        return cmd_highorder(_spec(args), interval, args.degree_bound, args.example_4th)
    elif args.command == "selftest":
        self_test = SelfTest(n_max=args.n_max, numeric_n_max=args.numeric_n_max, grid_size=args.grid_size,
                             seed=args.seed, n_random=args.n_random, tol=args.tol, inject_fault=args.inject_fault)
        callback = ListCallback([TensorboardCallback(args.logdir) if args.logdir else None])
        return cmd_selftest(self_test, callback, progress_bar=not args.no_progress)
    else:
        raise ValueError(f"Unknown command: '{args.command}'. Should be one of 'classify', 'weight', 'polys', "
                         f"'gram', 'highorder', 'selftest'")


def render_text(report: Dict[str, Any]) -> str:
    """ A short human-readable summary of a report."""
    lines: List[str] = []
    rec = report.get("classification")
    if rec is not None:
        interval = rec["interval"]["display"] if rec["interval"] is not None else "-"
        lines.append(f"{rec['case']} / {rec['mode']} on {interval}")
        if rec["weight"] is not None:
            lines.append(f"weight: {rec['weight']['display']}")
        lines.append(f"eigenvalues: lambda_n = {rec['eigenvalues']['expanded']['text']}")
        lines.append(rec["reason"])
    if "weight" in report and isinstance(report["weight"], dict):
        lines.append(f"weight: {report['weight']['display']}")
        for point in report["finiteness"]:
            lines.append(f"  at {point['root']}: left {point['left']}, right {point['right']}")
        lines.append(f"  decay: {report['decay']}")
    for pair in report.get("eigenpolynomials", []):
        lines.append(f"P_{pair['n']} = {pair['polynomial']['text']}    lambda = {pair['eigenvalue']}")
    if "gram" in report:
        lines.append(f"gram diagonal: {', '.join(report['gram']['diagonal'])}  "
                     f"(diagonal: {report['gram']['isDiagonal']})")
    if "numeric" in report:
        lines.append(f"numeric max deviation: {report['numeric']['maxDeviation']:.3e}  "
                     f"(passed: {report['numeric']['passed']})")
    for name, value in report.get("derived", {}).items():
        lines.append(f"{name}: {value['text'] if isinstance(value, dict) else value}")
    for residual in report.get("residuals", []):
        lines.append(f"{residual['equation']} = {residual['residual']}")
    if "boundary" in report:
        lines.append(f"boundary difference vanishes: {report['boundary']['vanishes']}  "
                     f"witness: {report['boundary']['witness']}")
    for entry in report.get("eigenvalues", []):
        lines.append(f"lambda_{entry['n']} = {entry['eigenvalue']}")
    if "discrepancy" in report:
        lines.append(f"printed formula differs at n = {[d['n'] for d in report['discrepancy']['differences']]}")
    if "selftest" in report:
        for criterion in report["selftest"]["criteria"]:
            lines.append(f"{'PASS' if criterion['passed'] else 'FAIL'}  {criterion['name']}: {criterion['details']}")
    return "\n".join(lines)


def _error_report(error: Exception) -> Dict[str, Any]:
    details = {"type": type(error).__name__, "message": str(error)}
    if isinstance(error, ExpressionSyntaxError):
        details["position"] = error.position
    return {"schemaVersion": SCHEMA_VERSION, "error": details}


def main(argv: Union[List[str], None] = None) -> int:
    """ Entry point of `slab`. Returns the exit code: 0 admissible or passed, 2 structurally inadmissible,
    1 error or failed check."""
    args = build_parser().parse_args(argv)
    try:
        report, code = dispatch(args)
    except (SturmLiouvilleError, ValueError, TypeError, AssertionError) as error:
        if args.json:
            print(dumps(_error_report(error)))
        print(f"error: {error}", file=sys.stderr)
        return EXIT_ERROR

    text = dumps(report)
    if args.output is not None:
        with open(args.output, "w") as f:
            f.write(text + "\n")
    print(text if args.json else render_text(report))
    return code


if __name__ == "__main__":
    sys.exit(main())
