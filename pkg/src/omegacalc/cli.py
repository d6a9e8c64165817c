"""Command-line interface.

Exit codes:
  0  success
  1  input error (unparseable flags or expression, unsupported shape)
  2  cross-check found methods disagreeing
  3  domain error (k too large without --pad, repeated letters, poles, ...)
"""

from __future__ import annotations

import argparse
import json
import sys

from .exprparse import ParseError, StructureError, parse_expression, parse_letter
from .omega import (
    ConstantLetterError,
    KTooLargeError,
    MethodDisagreement,
    OmegaProblem,
    OmegaResult,
    cross_check,
    omega_closed_form,
    omega_lagrange,
    omega_series_oracle,
    padded_names,
    zero_pad,
)
from .symfun import (
    Alphabet,
    LengthMismatchError,
    NotSymmetricError,
    RepeatedGeneratorsError,
    ValidityBoundError,
)

EXIT_OK = 0
EXIT_INPUT_ERROR = 1
EXIT_DISAGREEMENT = 2
EXIT_DOMAIN_ERROR = 3

_JSON_KWARGS = dict(indent=2, separators=(",", ": "), sort_keys=False)


class _UsageError(Exception):
    pass


class _ArgumentParser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad usage, which collides with the
    # disagreement exit code; raise instead and let main() map it to 1.
    def error(self, message):
        raise _UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(
        prog="omegacalc",
        description="Evaluate the operator that keeps the nonnegative powers of an "
                    "elimination variable in lambda^k / (prod (1-x*lambda) * prod (1-y/lambda)) "
                    "and then sets it to 1.",
    )
    problem = parser.add_argument_group("problem (give --expr, or --k with --x/--y)")
    problem.add_argument("--expr", metavar="STR",
                         help="problem text, e.g. \"omega(lambda/((1-x1*lambda)*(1-y/lambda)))\"")
    problem.add_argument("--k", type=int, metavar="INT",
                         help="exponent of the elimination variable in the numerator (>= 0)")
    problem.add_argument("--x", metavar="LIST",
                         help="comma-separated x letters, each a monomial (e.g. \"x1,x2\" or \"q^2*t\")")
    problem.add_argument("--y", metavar="LIST", default=None,
                         help="comma-separated y letters (default: none)")
    parser.add_argument("--method", choices=["schur", "lagrange", "series", "all"],
                        default="schur", help="evaluation strategy (default: schur)")
    parser.add_argument("--truncate", type=int, default=8, metavar="D",
                        help="total-degree bound for the series method and --check (default: 8)")
    parser.add_argument("--check", action="store_true",
                        help="run all methods, compare them exactly, and print a report")
    parser.add_argument("--format", choices=["text", "json"], default="text",
                        help="output format (default: text)")
    parser.add_argument("--lambda", dest="lambda_name", default=None, metavar="NAME",
                        help="name of the elimination variable in --expr (default: lambda)")
    parser.add_argument("--pad", type=int, default=0, metavar="R",
                        help="append R fresh zero letters to x (lifts the k < n restriction); "
                             "they are substituted away in the output")
    parser.add_argument("--report-dir", metavar="DIR", default=None,
                        help="with --check: also write check_report.csv, check_metrics.csv "
                             "and check_report.png into DIR")
    parser.add_argument("--corrupt", action="store_true",
                        help="fault injection: add 1 to the closed-form numerator before "
                             "comparing (negative control for --check)")
    return parser


def _parse_letter_list(text: str, flag: str) -> list:
    letters = []
    for piece in text.split(","):
        piece = piece.strip()
        if not piece:
            continue
        try:
            letters.append(parse_letter(piece))
        except ParseError as exc:
            raise _UsageError(f"bad letter in {flag}: {exc}") from None
    return letters


def _problem_from_args(args) -> OmegaProblem:
    by_flags = args.k is not None or args.x is not None or args.y is not None
    if args.expr and by_flags:
        raise _UsageError("give either --expr or --k/--x/--y, not both")
    if args.expr:
        return parse_expression(args.expr, args.lambda_name).problem()
    if not by_flags:
        raise _UsageError("no problem given; use --expr or --k with --x")
    if args.k is None:
        raise _UsageError("--k is required when --expr is not used")
    if args.x is None:
        raise _UsageError("--x is required when --expr is not used")
    x = _parse_letter_list(args.x, "--x")
    y = _parse_letter_list(args.y, "--y") if args.y else []
    if not x:
        raise _UsageError("--x needs at least one letter")
    try:
        return OmegaProblem(args.k, Alphabet(x), Alphabet(y))
    except (TypeError, ValueError) as exc:
        raise _UsageError(str(exc)) from None


def _evaluate(method: str, original: OmegaProblem, working: OmegaProblem,
              names_to_zero: list[str], truncate: int) -> OmegaResult:
    if method == "series":
        # The series expansion never needs padding; use the problem as given.
        return omega_series_oracle(original, truncate)
    result = omega_closed_form(working) if method == "schur" else omega_lagrange(working)
    if names_to_zero:
        zeroed = result.value.substitute({name: 0 for name in names_to_zero})
        result = OmegaResult(zeroed, result.method, result.truncation)
    return result


def _print_results(results: list[OmegaResult], fmt: str, single: bool) -> None:
    if fmt == "json":
        payload = results[0].to_json_obj() if single else {"results": [r.to_json_obj() for r in results]}
        print(json.dumps(payload, **_JSON_KWARGS))
        return
    if single:
        print(results[0].to_text())
        return
    for r in results:
        label = r.method if r.truncation is None else f"{r.method} (degree <= {r.truncation})"
        print(f"{label}: {r.to_text()}")


def _run_check(args, problem: OmegaProblem) -> int:
    try:
        report = cross_check(problem, args.truncate, corrupt_numerator=args.corrupt)
        code = EXIT_OK
    except MethodDisagreement as exc:
        report = exc.report
        code = EXIT_DISAGREEMENT
    if args.format == "json":
        print(json.dumps(report.to_json_obj(), **_JSON_KWARGS))
    else:
        print(report.to_text())
    if args.report_dir:
        from .report import write_check_outputs

        paths = write_check_outputs(report, args.report_dir)
        for path in paths:
            print(f"wrote {path}", file=sys.stderr)
    return code


def _run(args) -> int:
    if args.truncate < 0:
        raise _UsageError("--truncate must be >= 0")
    if args.pad < 0:
        raise _UsageError("--pad must be >= 0")
    original = _problem_from_args(args)
    working = zero_pad(original, args.pad) if args.pad else original
    names_to_zero = padded_names(original, working)
    try:
        if args.check:
            return _run_check(args, working)
        methods = ["schur", "lagrange", "series"] if args.method == "all" else [args.method]
        results = [_evaluate(m, original, working, names_to_zero, args.truncate)
                   for m in methods]
    except KTooLargeError as exc:
        need = working.k - len(working.x) + 1
        print(f"error: {exc}", file=sys.stderr)
        print(f"hint: rerun with --pad {need} (or more)", file=sys.stderr)
        return EXIT_DOMAIN_ERROR
    _print_results(results, args.format, single=args.method != "all")
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return _run(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        parser.print_usage(sys.stderr)
        return EXIT_INPUT_ERROR
    except (ParseError, StructureError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except (RepeatedGeneratorsError, ConstantLetterError, ValidityBoundError,
            NotSymmetricError, LengthMismatchError, KTooLargeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN_ERROR
    except ZeroDivisionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN_ERROR
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    raise SystemExit(main())
