"""Shared hypothesis strategies and field-spec builders for the hahnlab tests."""

from fractions import Fraction
from typing import Sequence

from hypothesis import strategies as st

from hahnlab.cmaps import AdditiveMap
from hahnlab.coeffs.field import CoeffField
from hahnlab.coeffs.rational_function import RationalFunction
from hahnlab.groups.value_group import ValueGroup
from hahnlab.hahn.series import FieldSpec, HahnSeries

X = RationalFunction.x()
QX = CoeffField.rational_functions()
Q = CoeffField.rationals()


# ---------------------------------------------------------------------------
# Field specs
# ---------------------------------------------------------------------------


def make_spec(field: str, group: ValueGroup, images: Sequence[object], truncation: object = None) -> FieldSpec:
    k = CoeffField.parse(field)
    cmap = AdditiveMap(group, k, tuple(images))  # type: ignore[arg-type]
    return FieldSpec.build(k, group, cmap, truncation)


def z_spec(c1: object = 0, field: str = "Qx", truncation: object = None) -> FieldSpec:
    """Γ = ℤ with c(1) = c1."""
    return make_spec(field, ValueGroup.integers(), [c1], truncation)


# c ∈ {0, 1, x, 1/x} over Γ = ℤ, k = ℚ(x)
CATALOG_IMAGES = [RationalFunction.constant(0), RationalFunction.constant(1), X, 1 / X]


# ---------------------------------------------------------------------------
# Strategies
# ---------------------------------------------------------------------------

small_fractions = st.fractions(min_value=-5, max_value=5, max_denominator=4)
small_ints = st.integers(min_value=-6, max_value=6)


@st.composite
def polynomials(draw, max_degree: int = 2) -> RationalFunction:
    coeffs = draw(st.lists(small_fractions, min_size=1, max_size=max_degree + 1))
    return RationalFunction.from_coeffs(coeffs)


@st.composite
def rational_functions(draw, nonzero: bool = False) -> RationalFunction:
    num = draw(polynomials())
    den = draw(polynomials(max_degree=1).filter(lambda p: not p.is_zero))
    value = num / den
    if nonzero and value.is_zero:
        value = RationalFunction.constant(1)
    return value


@st.composite
def coefficients(draw, field: CoeffField, nonzero: bool = False) -> RationalFunction:
    if field.trivial_derivation:
        q = draw(small_fractions)
        if nonzero and q == 0:
            q = Fraction(1)
        return RationalFunction.constant(q)
    return draw(rational_functions(nonzero=nonzero))


@st.composite
def series(draw, spec: FieldSpec, max_terms: int = 3, min_exponent: int = -2, max_exponent: int = 5) -> HahnSeries:
    """Exact series over a rank-one field spec with exponents in its step lattice."""
    step = spec.group.step
    size = draw(st.integers(min_value=0, max_value=max_terms))
    terms = []
    for _ in range(size):
        n = draw(st.integers(min_value=min_exponent, max_value=max_exponent))
        terms.append((spec.exponent(n * step), draw(coefficients(spec.field, nonzero=True))))
    return HahnSeries(spec, terms)


def exponents(spec: FieldSpec, low: int = -8, high: int = 8):
    step = spec.group.step
    return st.integers(min_value=low, max_value=high).map(lambda n: spec.exponent(n * step))


catalog_specs = st.sampled_from([z_spec(c) for c in CATALOG_IMAGES])
