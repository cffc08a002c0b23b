"""Command-line interface for hahnlab"""

import argparse
import logging
import sys
from dataclasses import dataclass
from typing import Any, Callable, Dict, List, Optional, Sequence

from ..cmaps import c_kernel, classify_constants
from ..coeffs.operators import LinearDiffOperator, solve_linear
from ..config import HahnLabConfig, load_config
from ..defaults import DEFAULT_EXAMPLE_BOUND
from ..dhensel.diffpoly import DifferentialPolynomial, monomial_degree
from ..dhensel.lifting import dhensel_lift_traced
from ..dhensel.roots import hensel_nth_root, purity_witness
from ..exceptions import (
    CertifiedFailure,
    ConfigurationError,
    DomainMismatchError,
    HahnLabError,
    LiftIterationLimitError,
    LinearSurjectivityFailure,
    NeedsPrecisionError,
    ParseError,
    UnsupportedSpecError,
)
from ..extensions.suite import run_example_suite
from ..hahn.derivation import (
    DaggerSolved,
    DaggerUnsat,
    dagger_series,
    derive_series,
    is_constant,
    residue,
    solve_dagger,
)
from ..hahn.series import FieldSpec, HahnSeries
from ..models import LiftReport, LiftStepRecord
from ..parsing.evaluator import as_coefficient, evaluate_text, parse_coefficient, parse_polynomial, parse_series
from ..parsing.literals import parse_subgroup
from ..parsing.parser import parse_expression, print_tree
from ..serialization import canonical_json

logger = logging.getLogger(__name__)

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"

EXIT_OK = 0
EXIT_CERTIFIED_FAILURE = 1
EXIT_UNKNOWN = 2
EXIT_INPUT_ERROR = 3
EXIT_UNSUPPORTED = 4


@dataclass
class CommandResult:
    """Output of one command: the json payload, its text rendering and the exit code"""

    payload: Dict[str, Any]
    text: str
    exit_code: int = EXIT_OK


Handler = Callable[[FieldSpec, HahnLabConfig, argparse.Namespace], CommandResult]


def exit_code_for(error: BaseException) -> int:
    if isinstance(error, CertifiedFailure):
        return EXIT_CERTIFIED_FAILURE
    if isinstance(error, (NeedsPrecisionError, LiftIterationLimitError)):
        return EXIT_UNKNOWN
    if isinstance(error, UnsupportedSpecError):
        return EXIT_UNSUPPORTED
    return EXIT_INPUT_ERROR


def error_payload(error: BaseException) -> Dict[str, Any]:
    payload: Dict[str, Any] = {"error": type(error).__name__, "message": str(error)}
    if isinstance(error, ParseError):
        payload.update(line=error.line, column=error.column, expected=sorted(error.expected))
    if isinstance(error, LinearSurjectivityFailure):
        payload.update(
            gamma=None if error.gamma is None else str(error.gamma),
            operator=str(error.operator),
            rhs=str(error.rhs),
        )
    return payload


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------


def _value(key: str, value: object) -> CommandResult:
    return CommandResult({key: str(value)}, str(value))


def cmd_parse(spec: FieldSpec, config: HahnLabConfig, args: argparse.Namespace) -> CommandResult:
    parsed = parse_expression(args.expression)
    tree = print_tree(parsed.tree)
    return CommandResult({"kind": parsed.kind, "tree": tree}, tree)


def _kind(value: object) -> str:
    if isinstance(value, DifferentialPolynomial):
        return "differential-polynomial"
    if isinstance(value, HahnSeries):
        return "series"
    return "coefficient"


def cmd_eval(spec: FieldSpec, config: HahnLabConfig, args: argparse.Namespace) -> CommandResult:
    value = evaluate_text(args.expression, spec)
    return CommandResult({"kind": _kind(value), "value": str(value)}, str(value))


def cmd_derive(spec: FieldSpec, config: HahnLabConfig, args: argparse.Namespace) -> CommandResult:
    return _value("value", derive_series(parse_series(args.series, spec)))


def cmd_dagger(spec: FieldSpec, config: HahnLabConfig, args: argparse.Namespace) -> CommandResult:
    return _value("value", dagger_series(parse_series(args.series, spec)))


def cmd_valuation(spec: FieldSpec, config: HahnLabConfig, args: argparse.Namespace) -> CommandResult:
    return _value("valuation", parse_series(args.series, spec).valuation())


def cmd_residue(spec: FieldSpec, config: HahnLabConfig, args: argparse.Namespace) -> CommandResult:
    return _value("residue", residue(parse_series(args.series, spec)))


def cmd_constant(spec: FieldSpec, config: HahnLabConfig, args: argparse.Namespace) -> CommandResult:
    verdict = is_constant(parse_series(args.series, spec))
    payload = {
        "constant": verdict.constant,
        "up_to": None if verdict.up_to is None else str(verdict.up_to),
        "offending": None if verdict.offending is None else str(verdict.offending),
    }
    return CommandResult(payload, verdict.describe())


def _linear_operator(P: DifferentialPolynomial, spec: FieldSpec) -> LinearDiffOperator:
    """Σ aᵢ Y^(i) with aᵢ ∈ k, read as the operator Σ aᵢ ∂^i."""
    coeffs = [spec.field.zero()] * (P.order + 1)
    for monomial, a in P.terms:
        if monomial_degree(monomial) != 1:
            raise DomainMismatchError(f"{P} is not a homogeneous linear expression in Y, Y', ...")
        coeffs[len(monomial) - 1] = as_coefficient(a, spec)
    return LinearDiffOperator(spec.field, tuple(coeffs))


def cmd_solve_linear(spec: FieldSpec, config: HahnLabConfig, args: argparse.Namespace) -> CommandResult:
    operator = _linear_operator(parse_polynomial(args.operator, spec), spec)
    rhs = parse_coefficient(args.rhs, spec.field)
    solution = solve_linear(operator, rhs)
    payload = {
        "operator": str(operator),
        "rhs": str(rhs),
        "solvable": solution.solvable,
        "particular": None if solution.particular is None else str(solution.particular),
        "kernel": [str(v) for v in solution.kernel],
    }
    if solution.solvable:
        text = f"y = {solution.particular}"
        if solution.kernel:
            text += " + span(" + ", ".join(str(v) for v in solution.kernel) + ")"
        return CommandResult(payload, text)
    return CommandResult(payload, f"no solution in {spec.field} of ({operator})(y) = {rhs}", EXIT_CERTIFIED_FAILURE)


def cmd_solve_dagger(spec: FieldSpec, config: HahnLabConfig, args: argparse.Namespace) -> CommandResult:
    u = parse_coefficient(args.u, spec.field)
    bound = args.search_bound if args.search_bound is not None else config.search_bound
    outcome = solve_dagger(spec, u, bound)
    payload = outcome.to_dict()
    if isinstance(outcome, DaggerSolved):
        return CommandResult(payload, str(outcome.solution))
    if isinstance(outcome, DaggerUnsat):
        return CommandResult(payload, f"unsat: {outcome.reason}", EXIT_CERTIFIED_FAILURE)
    return CommandResult(payload, f"unknown: nothing found within {outcome.searched} steps", EXIT_UNKNOWN)


def cmd_lift(spec: FieldSpec, config: HahnLabConfig, args: argparse.Namespace) -> CommandResult:
    P = parse_polynomial(args.polynomial, spec)
    cap = args.max_iterations if args.max_iterations is not None else config.max_lift_iterations
    result = dhensel_lift_traced(P, args.bound, cap)
    report = LiftReport(
        solution=str(result.solution),
        residual=str(result.residual),
        bound=str(spec.exponent(args.bound)),
        steps=[
            LiftStepRecord(
                gamma=None if step.gamma is None else str(step.gamma),
                operator=str(step.operator),
                rhs=str(step.rhs),
                correction=str(step.correction),
                residual_valuation=step.residual_valuation,
            )
            for step in result.steps
        ],
    )
    return CommandResult(report.model_dump(mode="json"), report.solution)


def cmd_nth_root(spec: FieldSpec, config: HahnLabConfig, args: argparse.Namespace) -> CommandResult:
    return _value("root", hensel_nth_root(parse_series(args.series, spec), args.n, args.bound))


def cmd_purity_witness(spec: FieldSpec, config: HahnLabConfig, args: argparse.Namespace) -> CommandResult:
    a = parse_series(args.a, spec)
    b = parse_series(args.b, spec)
    return _value("w", purity_witness(a, b, args.n, args.bound))


def _within(spec: FieldSpec, args: argparse.Namespace):
    return parse_subgroup(args.within, spec.group) if args.within else None


def cmd_kernel(spec: FieldSpec, config: HahnLabConfig, args: argparse.Namespace) -> CommandResult:
    kernel = c_kernel(spec.cmap, _within(spec, args))
    return CommandResult({"kernel": [str(g) for g in kernel.basis]}, str(kernel))


def cmd_classify(spec: FieldSpec, config: HahnLabConfig, args: argparse.Namespace) -> CommandResult:
    result = classify_constants(spec, _within(spec, args))
    text = f"{result.verdict.value}: Δ_C = {result.delta_c}, ker(c) = {result.kernel}"
    return CommandResult(result.to_dict(), text)


def cmd_purity(spec: FieldSpec, config: HahnLabConfig, args: argparse.Namespace) -> CommandResult:
    subgroup = parse_subgroup(args.subgroup, spec.group)
    verdict = subgroup.is_pure()
    payload: Dict[str, Any] = {"subgroup": str(subgroup), "pure": verdict.pure, "witness": None}
    if verdict.witness is None:
        return CommandResult(payload, f"{subgroup} is pure in {spec.group}")
    gamma, n = verdict.witness
    payload["witness"] = {"gamma": str(gamma), "n": str(n)}
    return CommandResult(payload, f"{subgroup} is not pure in {spec.group}: {n}*{gamma} lies in it, {gamma} does not")


def cmd_examples(spec: FieldSpec, config: HahnLabConfig, args: argparse.Namespace) -> CommandResult:
    seed = args.seed if args.seed is not None else config.example_seed
    try:
        reports = run_example_suite(args.only, args.bound, seed)
    except ValueError as e:
        raise ConfigurationError(str(e))
    failed = [r.id for r in reports if not r.passed]
    payload = {
        "examples": [r.model_dump(mode="json") for r in reports],
        "passed": len(reports) - len(failed),
        "failed": failed,
    }
    lines = [f"{r.id} {r.status.value}  {r.anchor}" for r in reports]
    return CommandResult(payload, "\n".join(lines), EXIT_UNKNOWN if failed else EXIT_OK)


COMMANDS: Dict[str, Handler] = {
    "parse": cmd_parse,
    "eval": cmd_eval,
    "derive": cmd_derive,
    "dagger": cmd_dagger,
    "valuation": cmd_valuation,
    "residue": cmd_residue,
    "constant?": cmd_constant,
    "solve-linear": cmd_solve_linear,
    "solve-dagger": cmd_solve_dagger,
    "lift": cmd_lift,
    "nth-root": cmd_nth_root,
    "purity-witness": cmd_purity_witness,
    "kernel": cmd_kernel,
    "classify": cmd_classify,
    "purity": cmd_purity,
    "examples": cmd_examples,
}


def dispatch(command: str, config: HahnLabConfig, args: argparse.Namespace) -> CommandResult:
    """Run one command; library errors become an error payload with the mapped exit code"""
    handler = COMMANDS[command]
    try:
        return handler(config.field_spec, config, args)
    except HahnLabError as e:
        code = exit_code_for(e)
        logger.debug("%s failed with %s (exit %d)", command, type(e).__name__, code)
        return CommandResult(error_payload(e), f"{type(e).__name__}: {e}", code)


# ---------------------------------------------------------------------------
# Argument parsing
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hahnlab",
        description="Exact computations in Hahn series fields with a twisted derivation",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  # Logarithmic derivative of t when c(1) = 1
  hahnlab --field Qx --group Z --cmap "1 -> 1" dagger "t"

  # a† = 1 has no solution when c(1) = x (exit code 1)
  hahnlab --field Qx --group Z --cmap "1 -> x" solve-dagger "1"

  # Lift a zero of a quasi-linear differential polynomial
  hahnlab --field Qx --group Z --cmap "1 -> 0" lift --bound 10 "Y' + Y - 1 - t"

  # Run the example catalog
  hahnlab --format json examples run

Expressions starting with '-' must follow '--', e.g. hahnlab eval -- "-t".

Exit codes: 0 success, 1 certified unsolvable, 2 unknown or precision exhausted,
3 parse or configuration error, 4 unsupported field spec.
        """,
    )
    parser.add_argument("--field", help="Coefficient field: Q or Qx (env HAHNLAB_FIELD)")
    parser.add_argument("--group", help="Value group: Z, Q, Z/d or Z^nlex (env HAHNLAB_GROUP)")
    parser.add_argument("--cmap", help="c-map literal, e.g. '1 -> x' (env HAHNLAB_CMAP)")
    parser.add_argument("--truncation", help="Default truncation bound (env HAHNLAB_TRUNCATION)")
    parser.add_argument("--format", choices=["text", "json"], help="Output format (env HAHNLAB_FORMAT)")
    parser.add_argument("--config", help="YAML session file")
    parser.add_argument("--log-level", help="Log level for stderr diagnostics (env HAHNLAB_LOG_LEVEL)")

    subparsers = parser.add_subparsers(dest="command", help="Command to execute")

    sub = subparsers.add_parser("parse", help="Parse an expression and print it fully parenthesized")
    sub.add_argument("expression")

    sub = subparsers.add_parser("eval", help="Evaluate a coefficient, series or differential polynomial")
    sub.add_argument("expression")

    for name, help_text in (
        ("derive", "Apply the twisted derivation"),
        ("dagger", "Logarithmic derivative f'/f"),
        ("valuation", "Valuation of a series"),
        ("residue", "Residue of a series in the valuation ring"),
        ("constant?", "Decide whether a series is a constant"),
    ):
        sub = subparsers.add_parser(name, help=help_text)
        sub.add_argument("series")

    sub = subparsers.add_parser("solve-linear", help="Solve L(y) = b in k for L given as a linear form in Y")
    sub.add_argument("operator", help="e.g. \"Y' + x*Y\"")
    sub.add_argument("rhs")

    sub = subparsers.add_parser("solve-dagger", help="Solve a† = u for u in k")
    sub.add_argument("u")
    sub.add_argument("--search-bound", type=int, help="Search bound when no certificate applies")

    sub = subparsers.add_parser("lift", help="Lift a zero of a quasi-linear differential polynomial")
    sub.add_argument("polynomial")
    sub.add_argument("--bound", required=True, help="Required valuation of P(y)")
    sub.add_argument("--max-iterations", type=int, help="Override the iteration cap")

    sub = subparsers.add_parser("nth-root", help="nth root of a series with a residue root")
    sub.add_argument("series")
    sub.add_argument("--n", type=int, required=True)
    sub.add_argument("--bound", required=True)

    sub = subparsers.add_parser("purity-witness", help="Constant nth root a·y of a constant b")
    sub.add_argument("a")
    sub.add_argument("b")
    sub.add_argument("--n", type=int, required=True)
    sub.add_argument("--bound", required=True)

    for name, help_text in (("kernel", "Kernel of the c-map"), ("classify", "Classify the constants")):
        sub = subparsers.add_parser(name, help=help_text)
        sub.add_argument("--within", help="Finitely generated subgroup to work on, e.g. '<1/2>'")

    sub = subparsers.add_parser("purity", help="Decide purity of a subgroup of the value group")
    sub.add_argument("subgroup", help="Generators, e.g. '<1>' or '(1,0), (0,2)'")

    examples = subparsers.add_parser("examples", help="Example catalog")
    actions = examples.add_subparsers(dest="action")
    run_parser = actions.add_parser("run", help="Run the example catalog")
    run_parser.add_argument("--only", nargs="+", help="Example identifiers, e.g. E1 E4")
    run_parser.add_argument("--bound", type=int, default=DEFAULT_EXAMPLE_BOUND)
    run_parser.add_argument("--seed", type=int, help="Seed for sampled examples (env HAHNLAB_EXAMPLE_SEED)")
    return parser


def _emit(result: CommandResult, output_format: str) -> None:
    if output_format == "json":
        print(canonical_json(result.payload))
    elif result.exit_code in (EXIT_OK, EXIT_CERTIFIED_FAILURE):
        print(result.text)
    else:
        print(result.text, file=sys.stderr)


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Parse arguments, run one command and print its output; returns the exit code"""
    parser = build_parser()
    args = parser.parse_args(argv)
    if not args.command or (args.command == "examples" and not args.action):
        parser.print_help()
        return EXIT_INPUT_ERROR

    overrides: Dict[str, Any] = {
        "coeff_field": args.field,
        "value_group": args.group,
        "cmap": args.cmap,
        "truncation": args.truncation,
        "output_format": args.format,
        "log_level": args.log_level,
    }
    try:
        config = load_config(args.config, **overrides)
    except ConfigurationError as e:
        _emit(CommandResult(error_payload(e), f"{type(e).__name__}: {e}", EXIT_INPUT_ERROR), args.format or "text")
        return EXIT_INPUT_ERROR

    logging.basicConfig(level=getattr(logging, config.log_level), format=LOG_FORMAT, stream=sys.stderr)
    logger.debug("Running %s with field %s", args.command, config.field_spec.field)
    result = dispatch(args.command, config, args)
    _emit(result, config.output_format)
    return result.exit_code


def main(argv: Optional[List[str]] = None) -> None:
    """CLI entry point"""
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
