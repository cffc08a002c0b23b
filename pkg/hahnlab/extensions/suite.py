"""Regression catalog of worked examples.

Each example returns an ``ExampleReport``; exceptions inside an example are
turned into failing reports rather than propagated.
"""

import logging
import random
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence

from ..cmaps import AdditiveMap, ConstantsVerdict, classify_constants
from ..coeffs.field import CoeffField
from ..coeffs.rational_function import ONE, ZERO, RationalFunction
from ..defaults import DEFAULT_EXAMPLE_BOUND, DEFAULT_EXAMPLE_SEED, GROUP_VALUATION_SAMPLES
from ..dhensel.lifting import solve_one_unit_dagger
from ..dhensel.roots import purity_witness
from ..exceptions import HahnLabError, NoRootInResidueError
from ..groups.value_group import ValueGroup
from ..hahn.derivation import DaggerSolved, DaggerUnsat, cross_section, dagger_series, solve_dagger
from ..hahn.series import FieldSpec
from ..models import ExampleReport, ExampleStatus
from .scan import ext_constant_scan

logger = logging.getLogger(__name__)

X = RationalFunction.x()


def _spec(field: str, group: ValueGroup, images: Sequence[object], truncation: object = None) -> FieldSpec:
    k = CoeffField.parse(field)
    cmap = AdditiveMap(group, k, tuple(RationalFunction.coerce(v) for v in images))  # type: ignore[arg-type]
    return FieldSpec.build(k, group, cmap, truncation)  # type: ignore[arg-type]


def _report(example_id: str, anchor: str, ok: bool, seed: int, **fields: object) -> ExampleReport:
    return ExampleReport(
        id=example_id,
        anchor=anchor,
        status=ExampleStatus.PASS if ok else ExampleStatus.FAIL,
        seed=seed,
        **fields,  # type: ignore[arg-type]
    )


# ---------------------------------------------------------------------------
# Examples
# ---------------------------------------------------------------------------


def example_separation_positive(bound: int, seed: int) -> ExampleReport:
    spec = _spec("Qx", ValueGroup.integers(), [ONE])
    outcome = solve_dagger(spec, ONE)
    ok = isinstance(outcome, DaggerSolved) and outcome.solution == spec.t(1)
    witness = str(outcome.solution) if isinstance(outcome, DaggerSolved) else None
    return _report(
        "E1", "c(1) = 1: the monomial t solves a† = 1", ok, seed, witness=witness, details=outcome.to_dict()
    )


def example_separation_negative(bound: int, seed: int) -> ExampleReport:
    spec = _spec("Qx", ValueGroup.integers(), [X])
    outcome = solve_dagger(spec, ONE)
    ok = isinstance(outcome, DaggerUnsat)
    return _report(
        "E2",
        "c(1) = x: a† = 1 has no solution although k and Γ are unchanged",
        ok,
        seed,
        certificate=outcome.to_dict(),
    )


def _classification_catalog() -> List[Dict[str, object]]:
    z, z2, half, q = ValueGroup.integers(), ValueGroup.lex(2), ValueGroup.fractional(2), ValueGroup.rationals()
    return [
        {"name": "Qx, Z, c = 0", "spec": _spec("Qx", z, [ZERO]), "expected": ConstantsVerdict.MANY},
        {"name": "Qx, Z, c(1) = 1", "spec": _spec("Qx", z, [ONE]), "expected": ConstantsVerdict.FEW},
        {"name": "Qx, Z, c(1) = 1/x", "spec": _spec("Qx", z, [1 / X]), "expected": ConstantsVerdict.MANY},
        {"name": "Q, Z, c = 0", "spec": _spec("Q", z, [ZERO]), "expected": ConstantsVerdict.MANY},
        {
            "name": "Q, Z^2lex, c(e1) = 1, c(e2) = 2",
            "spec": _spec("Q", z2, [ONE, 2], (1, 0)),
            "expected": ConstantsVerdict.INTERMEDIATE,
        },
        {
            "name": "Qx, Z^2lex, c(e1) = 1/x, c(e2) = x",
            "spec": _spec("Qx", z2, [1 / X, X], (1, 0)),
            "expected": ConstantsVerdict.INTERMEDIATE,
        },
        {
            "name": "Qx, Z/2, c(1/2) = 1/(2x)",
            "spec": _spec("Qx", half, [1 / (2 * X)]),
            "expected": ConstantsVerdict.INTERMEDIATE,
        },
        {"name": "Qx, Q on <1>, c(1) = -2/x", "spec": _spec("Qx", q, [-2 / X]), "expected": ConstantsVerdict.MANY},
    ]


def example_constants_catalog(bound: int, seed: int) -> ExampleReport:
    rows = []
    ok = True
    for entry in _classification_catalog():
        result = classify_constants(entry["spec"])
        matches = result.verdict == entry["expected"]
        ok = ok and matches
        rows.append({"instance": entry["name"], "matches": matches, **result.to_dict()})
    return _report(
        "E3",
        "ker(c) lies in the valuations of constants, with equality iff c(Γ) meets k† only in 0;"
        " few constants iff c is injective and misses k†",
        ok,
        seed,
        details={"catalog": rows},
    )


def example_nonpurity(bound: int, seed: int) -> ExampleReport:
    report = ext_constant_scan(bound)
    ok = (
        report.no_half_integer_constants
        and len(report.integer_constants) == 2 * bound + 1
        and not report.pure
        and report.purity_witness == {"gamma": "1/2", "n": "2"}
        and not report.w_is_constant
    )
    return _report(
        "E4",
        "constants of K(√(st)) have valuations in Z only, which is not pure in (1/2)Z",
        ok,
        seed,
        witness="(1/2, 2)",
        certificate={"certificates": [c.model_dump() for c in report.certificates]},
        details={
            "constant_valuations": report.constant_valuations,
            "bound": bound,
            "scope": "purity of v(C_F^x) only; the Q(x) tower is not d-henselian",
        },
    )


def example_purity_witnesses(bound: int, seed: int) -> ExampleReport:
    trivial = _spec("Q", ValueGroup.integers(), [ZERO])
    rational = _spec("Qx", ValueGroup.integers(), [ZERO])
    cases = []
    first = purity_witness(trivial.t(1), trivial.monomial(4, 2), 2, bound)
    cases.append({"a": "t", "b": "4*t^2", "n": 2, "w": str(first), "ok": first == trivial.monomial(2, 1)})
    second = purity_witness(rational.monomial(X, 1), rational.t(2), 2, bound)
    cases.append({"a": "x*t", "b": "t^2", "n": 2, "w": str(second), "ok": second == rational.t(1)})
    try:
        purity_witness(rational.t(1), rational.monomial(X, 2), 2, bound)
        cases.append({"a": "t", "b": "x*t^2", "n": 2, "ok": False})
    except NoRootInResidueError as e:
        cases.append({"a": "t", "b": "x*t^2", "n": 2, "error": str(e), "ok": True})
    ok = all(case["ok"] for case in cases)
    return _report(
        "E5",
        "a constant b with v(b) = n·v(a) and an nth root of its residue has a constant nth root a·y",
        ok,
        seed,
        witness=str(second),
        details={"cases": cases},
    )


def example_group_valuation(bound: int, seed: int) -> ExampleReport:
    rng = random.Random(seed)
    spec = _spec("Qx", ValueGroup.fractional(2), [X])
    samples = []
    ok = True
    for _ in range(GROUP_VALUATION_SAMPLES):
        gamma = spec.exponent(Fraction(rng.randint(-4 * bound, 4 * bound), 2))
        a = cross_section(spec, gamma)
        dagger = dagger_series(a)
        holds = a.order() == gamma and dagger == spec.constant(spec.c(gamma))
        ok = ok and holds
        samples.append({"gamma": str(gamma), "dagger": str(dagger), "holds": holds})
    return _report(
        "E6",
        "every γ is the valuation of some a with a† in k (namely t^γ, with a† = c(γ))",
        ok,
        seed,
        details={"samples": samples},
    )


def example_one_unit_dagger(bound: int, seed: int) -> ExampleReport:
    spec = _spec("Qx", ValueGroup.integers(), [ONE], bound + 2)
    t = spec.t(1)
    eps = t * (spec.one() + t).inverse()
    delta = solve_one_unit_dagger(eps, bound)
    ok = delta == t
    return _report(
        "E7",
        "small elements are logarithmic derivatives of 1-units: t/(1+t) = (1+t)†",
        ok,
        seed,
        witness=str(delta),
        details={"eps": str(eps)},
    )


EXAMPLES: Dict[str, Callable[[int, int], ExampleReport]] = {
    "E1": example_separation_positive,
    "E2": example_separation_negative,
    "E3": example_constants_catalog,
    "E4": example_nonpurity,
    "E5": example_purity_witnesses,
    "E6": example_group_valuation,
    "E7": example_one_unit_dagger,
}

ANCHORS: Dict[str, str] = {
    "E1": "a† = 1 solvable for c(1) = 1",
    "E2": "a† = 1 unsolvable for c(1) = x",
    "E3": "constants classification catalog",
    "E4": "non-purity of constant valuations in a quadratic extension",
    "E5": "constant nth roots",
    "E6": "valuations of elements with dagger in k",
    "E7": "one-unit daggers",
}


def run_example_suite(
    only: Optional[Sequence[str]] = None,
    bound: int = DEFAULT_EXAMPLE_BOUND,
    seed: int = DEFAULT_EXAMPLE_SEED,
) -> List[ExampleReport]:
    """Run the catalog (or the ``only`` subset) and return reports ordered by identifier."""
    requested = list(only or EXAMPLES)
    unknown = [name for name in requested if name not in EXAMPLES]
    if unknown:
        raise ValueError(f"unknown example(s): {', '.join(unknown)}")
    selected = sorted(set(requested), key=lambda name: int(name[1:]))
    reports = []
    for name in selected:
        logger.info("Running example %s", name)
        try:
            report = EXAMPLES[name](bound, seed)
        except HahnLabError as e:
            logger.warning("Example %s raised %s: %s", name, type(e).__name__, e)
            report = ExampleReport(
                id=name,
                anchor=ANCHORS[name],
                status=ExampleStatus.FAIL,
                seed=seed,
                details={"error": type(e).__name__, "message": str(e)},
            )
        reports.append(report)
    return reports
