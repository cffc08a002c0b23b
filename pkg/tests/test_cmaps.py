"""Tests for additive maps c: Γ → k, their kernels and the constants they allow."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hahnlab.cmaps import (
    AdditiveMap,
    ConstantsVerdict,
    c_eval,
    c_kernel,
    classify_constants,
    dagger_subgroup,
    image_meets_dagger,
)
from hahnlab.coeffs import RationalFunction, log_derivative_membership
from hahnlab.exceptions import DomainMismatchError
from hahnlab.groups import FgSubgroup, ValueGroup

from ._hahnlab_strategies import QX, Q, X, make_spec, small_fractions

Z = ValueGroup.integers()
Z2 = ValueGroup.lex(2)
HALF = ValueGroup.fractional(2)
ONE = RationalFunction.constant(1)
ZERO = RationalFunction.constant(0)


@st.composite
def residue_images(draw) -> RationalFunction:
    """p + a/x + b/(x+1) with small rational p, a, b."""
    p, a, b = draw(small_fractions), draw(small_fractions), draw(small_fractions)
    return RationalFunction.constant(p) + a / X + b / (X + 1)


# ---------------------------------------------------------------------------
# Evaluation
# ---------------------------------------------------------------------------


class TestEvaluation:
    """c is determined by the images of the canonical generators."""

    def test_integers(self):
        c = AdditiveMap(Z, QX, (X,))
        assert c_eval(c, Z.element(3)) == 3 * X
        assert c(Z.zero()) == 0

    def test_lex(self):
        c = AdditiveMap(Z2, QX, (ONE, 1 / X))
        assert c_eval(c, Z2.element((2, -1))) == 2 - 1 / X

    def test_fractional_group_uses_the_step(self):
        c = AdditiveMap(HALF, QX, (X,))
        assert c(HALF.element(Fraction(3, 2))) == 3 * X
        assert c(HALF.element(1)) == 2 * X

    def test_wrong_number_of_images(self):
        with pytest.raises(DomainMismatchError):
            AdditiveMap(Z2, QX, (ONE,))

    def test_foreign_element(self):
        with pytest.raises(DomainMismatchError):
            c_eval(AdditiveMap(Z, QX, (X,)), HALF.element(1))

    def test_q_field_rejects_functions(self):
        with pytest.raises(DomainMismatchError):
            AdditiveMap(Z, Q, (X,))

    def test_printing(self):
        assert str(AdditiveMap.zero(Z2, QX)) == "0"
        assert str(AdditiveMap(Z, QX, (X,))) == "1 -> x"
        assert str(AdditiveMap(Z2, QX, (ONE, 1 / X))) == "e1 -> 1, e2 -> 1/x"

    @settings(max_examples=200, deadline=None)
    @given(
        first=residue_images(),
        second=residue_images(),
        a=st.tuples(st.integers(-5, 5), st.integers(-5, 5)),
        b=st.tuples(st.integers(-5, 5), st.integers(-5, 5)),
    )
    def test_additive(self, first, second, a, b):
        c = AdditiveMap(Z2, QX, (first, second))
        gamma, delta = Z2.element(a), Z2.element(b)
        assert c(gamma + delta) == c(gamma) + c(delta)


# ---------------------------------------------------------------------------
# Kernels and Δ_C
# ---------------------------------------------------------------------------


class TestKernel:
    """ker(c) as a finitely generated subgroup."""

    def test_integer_relation(self):
        c = AdditiveMap(Z2, Q, (ONE, RationalFunction.constant(2)))
        kernel = c_kernel(c)
        assert kernel == FgSubgroup(Z2, [Z2.element((-2, 1))])
        assert c(kernel.basis[0]) == 0

    def test_injective(self):
        assert c_kernel(AdditiveMap(Z, QX, (X,))).is_trivial

    def test_zero_map(self):
        assert c_kernel(AdditiveMap.zero(Z2, QX)) == FgSubgroup.whole(Z2)

    def test_within_subgroup(self):
        c = AdditiveMap(Z2, QX, (X, ZERO))
        within = FgSubgroup(Z2, [Z2.element((1, 1)), Z2.element((0, 2))])
        assert c_kernel(c, within) == FgSubgroup(Z2, [Z2.element((0, 2))])

    def test_within_other_group(self):
        with pytest.raises(DomainMismatchError):
            c_kernel(AdditiveMap(Z, QX, (X,)), FgSubgroup.whole(Z2))


class TestDaggerSubgroup:
    """Δ_C = {γ : −c(γ) ∈ k†}."""

    def test_residue_denominator(self):
        c = AdditiveMap(Z, QX, (1 / (2 * X),))
        assert dagger_subgroup(c) == FgSubgroup(Z, [Z.element(2)])

    def test_polynomial_part_blocks_everything(self):
        assert dagger_subgroup(AdditiveMap(Z, QX, (ONE,))).is_trivial

    def test_lex_mixture(self):
        c = AdditiveMap(Z2, QX, (1 / X, X))
        assert dagger_subgroup(c) == FgSubgroup(Z2, [Z2.element((1, 0))])

    def test_lex_congruence(self):
        # residue (n₁ + n₂)/2 at x
        c = AdditiveMap(Z2, QX, (1 / (2 * X), 1 / (2 * X)))
        delta = dagger_subgroup(c)
        assert Z2.element((1, 1)) in delta
        assert Z2.element((1, -1)) in delta
        assert Z2.element((2, 0)) in delta
        assert Z2.element((1, 0)) not in delta
        assert Z2.element((0, 3)) not in delta

    def test_lex_independent_residues(self):
        c = AdditiveMap(Z2, QX, (1 / (2 * X), 1 / (3 * X)))
        assert dagger_subgroup(c) == FgSubgroup(Z2, [Z2.element((2, 0)), Z2.element((0, 3))])

    def test_over_q_is_the_kernel(self):
        c = AdditiveMap(Z2, Q, (ONE, RationalFunction.constant(2)))
        assert dagger_subgroup(c) == c_kernel(c)

    @settings(max_examples=40, deadline=None)
    @given(first=residue_images(), second=residue_images())
    def test_agrees_with_membership(self, first, second):
        c = AdditiveMap(Z2, QX, (first, second))
        delta = dagger_subgroup(c)
        assert c_kernel(c).is_subgroup_of(delta)
        for n1 in range(-3, 4):
            for n2 in range(-3, 4):
                gamma = Z2.element((n1, n2))
                assert (gamma in delta) == log_derivative_membership(QX, -c(gamma)).member


class TestImageMeetsDagger:
    """Whether some nonzero c(γ) is a logarithmic derivative."""

    def test_one_over_x(self):
        verdict = image_meets_dagger(AdditiveMap(Z, QX, (1 / X,)))
        assert verdict
        gamma, f = verdict.witness
        assert gamma == Z.element(1)
        assert f == X

    @pytest.mark.parametrize("image", [ONE, ZERO, X])
    def test_misses(self, image):
        assert not image_meets_dagger(AdditiveMap(Z, QX, (image,)))

    def test_trivial_derivation(self):
        assert not image_meets_dagger(AdditiveMap(Z, Q, (ONE,)))


# ---------------------------------------------------------------------------
# Classification
# ---------------------------------------------------------------------------

CATALOG = [
    ("Qx", Z, [ZERO], None, ConstantsVerdict.MANY),
    ("Qx", Z, [ONE], None, ConstantsVerdict.FEW),
    ("Qx", Z, [X], None, ConstantsVerdict.FEW),
    ("Qx", Z, [1 / X], None, ConstantsVerdict.MANY),
    ("Qx", Z, [1 / (2 * X)], None, ConstantsVerdict.INTERMEDIATE),
    ("Q", Z, [ZERO], None, ConstantsVerdict.MANY),
    ("Q", Z, [ONE], None, ConstantsVerdict.FEW),
    ("Q", Z2, [ONE, RationalFunction.constant(2)], (1, 0), ConstantsVerdict.INTERMEDIATE),
    ("Qx", Z2, [1 / X, X], (1, 0), ConstantsVerdict.INTERMEDIATE),
    ("Qx", Z2, [ONE, -ONE], (1, 0), ConstantsVerdict.INTERMEDIATE),
    ("Qx", HALF, [1 / X], None, ConstantsVerdict.MANY),
]


class TestClassification:
    """Few, many or intermediate constants."""

    @pytest.mark.parametrize("field,group,images,truncation,expected", CATALOG)
    def test_catalog(self, field, group, images, truncation, expected):
        spec = make_spec(field, group, images, truncation)
        result = classify_constants(spec)
        assert result.verdict == expected
        assert result.kernel.is_subgroup_of(result.delta_c)
        assert (not result.image_meets_dagger) == (result.kernel == result.delta_c)
        assert (result.injective and not result.image_meets_dagger) == (expected == ConstantsVerdict.FEW)

    def test_constant_monomial_witness(self):
        result = classify_constants(make_spec("Qx", Z, [1 / X]))
        assert result.delta_c == FgSubgroup.whole(Z)
        assert result.constant_monomials == ((Z.element(1), 1 / X),)
        assert result.meet_witness == (Z.element(1), X)

    def test_to_dict(self):
        payload = classify_constants(make_spec("Qx", Z, [1 / (2 * X)])).to_dict()
        assert payload["verdict"] == "Intermediate"
        assert payload["delta_c"] == ["2"]
        assert payload["kernel"] == []
        assert payload["injective"] is True
        assert payload["image_meets_dagger"] is True
        assert payload["constant_monomials"] == [{"exponent": "2", "coefficient": "1/x"}]

    def test_bare_map(self):
        assert classify_constants(AdditiveMap(Z, QX, (ONE,))).verdict == ConstantsVerdict.FEW

    def test_within_rationals(self):
        group = ValueGroup.rationals()
        c = AdditiveMap(group, QX, (1 / (3 * X),))
        within = FgSubgroup(group, [group.element(Fraction(1, 2))])
        result = classify_constants(c, within)
        assert result.delta_c == FgSubgroup(group, [group.element(3)])
        assert result.verdict == ConstantsVerdict.INTERMEDIATE
