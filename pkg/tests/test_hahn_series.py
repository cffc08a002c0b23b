"""Tests for truncated Hahn series arithmetic, valuation and printing."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hahnlab.exceptions import (
    DivisionByZeroError,
    DomainMismatchError,
    NeedsPrecisionError,
    PrecisionExhaustedError,
    UnsupportedValueGroupError,
)
from hahnlab.groups import ValueGroup
from hahnlab.hahn import AboveTruncation, FieldSpec, PlusInfinity

from ._hahnlab_strategies import QX, X, catalog_specs, make_spec, series, small_fractions, z_spec

SPEC = z_spec(0)
T = SPEC.t(1)


class TestFieldSpec:
    """Consistency checks on (k, Γ, c, truncation)."""

    def test_defaults(self):
        spec = FieldSpec.build(QX, ValueGroup.integers())
        assert spec.cmap.is_zero
        assert spec.truncation == ValueGroup.integers().element(8)

    def test_truncation_must_be_positive(self):
        with pytest.raises(DomainMismatchError):
            z_spec(0, truncation=0)

    def test_cmap_group_must_match(self):
        spec = z_spec(0)
        with pytest.raises(DomainMismatchError):
            FieldSpec(spec.field, ValueGroup.fractional(2), spec.cmap, ValueGroup.fractional(2).element(1))


class TestArithmetic:
    """Exact and truncated ring operations."""

    def test_geometric_series(self):
        spec = z_spec(0, truncation=4)
        one, t = spec.one(), spec.t(1)
        assert str((one - t).inverse()) == "1 + t + t^2 + t^3 + O(t^4)"

    def test_quotient_uses_default_precision(self):
        assert str(T / (SPEC.one() + T)) == "t - t^2 + t^3 - t^4 + t^5 - t^6 + t^7 - t^8 + O(t^9)"

    def test_explicit_precision(self):
        f = SPEC.one() + T
        inverse = f.inverse(SPEC.exponent(3))
        assert str(inverse) == "1 - t + t^2 + O(t^3)"

    @pytest.mark.parametrize("truncation", [1, 4, 9])
    def test_inverse_of_a_polynomial_divisor(self, truncation):
        spec = z_spec(0, truncation=truncation)
        f = spec.series([(0, 1), (1, -1), (2, X)])
        one = spec.one().truncate(spec.exponent(truncation))
        assert f * f.inverse() == one
        assert f.inverse().truncation == spec.exponent(truncation)

    def test_inverse_of_a_truncated_divisor(self):
        f = SPEC.series([(0, 1), (1, -1)], truncation=4)
        assert str(f.inverse()) == "1 + t + t^2 + t^3 + O(t^4)"
        assert f * f.inverse() == SPEC.series([(0, 1)], truncation=4)

    def test_half_exponents(self):
        spec = make_spec("Qx", ValueGroup.fractional(2), [0])
        root = spec.t(Fraction(1, 2))
        assert root * root == spec.t(1)

    def test_monomial_inverse_is_exact(self):
        f = SPEC.monomial(X, -1)
        assert f.inverse() == SPEC.monomial(1 / X, 1)
        assert f * SPEC.monomial(1 / X, 1) == 1

    def test_truncation_propagates_through_products(self):
        f = SPEC.series([(0, 1)], truncation=3)
        g = SPEC.series([(1, 1)], truncation=2)
        assert str(f * g) == "t + O(t^2)"

    def test_truncation_propagates_through_sums(self):
        f = SPEC.series([(0, 1)], truncation=3)
        assert str(f + T**5) == "1 + O(t^3)"

    def test_power(self):
        assert (SPEC.one() + T) ** 2 == SPEC.series([(0, 1), (1, 2), (2, 1)])
        assert T**-2 == SPEC.t(-2)

    def test_inverse_of_unknown_zero(self):
        with pytest.raises(NeedsPrecisionError):
            SPEC.series([], truncation=3).inverse()

    def test_inverse_of_zero(self):
        with pytest.raises(DivisionByZeroError):
            SPEC.zero().inverse()

    def test_non_archimedean_expansion_is_refused(self):
        spec = make_spec("Q", ValueGroup.lex(2), [0, 0], (1, 0))
        f = spec.one() + spec.t((0, 1))
        with pytest.raises(UnsupportedValueGroupError):
            f.inverse()

    def test_specs_do_not_mix(self):
        with pytest.raises(DomainMismatchError):
            T + z_spec(1).t(1)

    @settings(max_examples=60, deadline=None)
    @given(data=st.data())
    def test_ring_laws(self, data):
        spec = data.draw(catalog_specs)
        f, g, h = (data.draw(series(spec)) for _ in range(3))
        assert f * (g + h) == f * g + f * h
        assert (f + g) - g == f
        assert f * g == g * f

    @settings(max_examples=40, deadline=None)
    @given(data=st.data())
    def test_inverse(self, data):
        spec = data.draw(catalog_specs)
        f = data.draw(series(spec))
        if f.is_zero:
            return
        assert (f * f.inverse()).agrees_with(spec.one())


class TestValuation:
    """v(f) as an exponent or a marker."""

    def test_least_exponent(self):
        assert SPEC.series([(2, 3), (5, 1)]).valuation() == SPEC.exponent(2)

    def test_zero(self):
        assert SPEC.zero().valuation() == PlusInfinity()
        assert str(PlusInfinity()) == "+inf"

    def test_above_truncation(self):
        marker = SPEC.series([], truncation=7).valuation()
        assert marker == AboveTruncation(SPEC.exponent(7))
        assert str(marker) == ">= 7"
        with pytest.raises(NeedsPrecisionError):
            SPEC.series([], truncation=7).order()

    def test_coefficient_above_truncation(self):
        f = SPEC.series([(0, 1)], truncation=2)
        assert f.coefficient(1) == 0
        with pytest.raises(PrecisionExhaustedError):
            f.coefficient(2)

    @settings(max_examples=100, deadline=None)
    @given(
        coeffs=st.lists(small_fractions, min_size=1, max_size=5).filter(any),
        step=st.integers(min_value=-3, max_value=3).filter(bool),
    )
    def test_polynomial_in_a_monomial(self, coeffs, step):
        """v(Σ qᵢ t^{iγ}) is the least iγ with qᵢ ≠ 0."""
        f = SPEC.series([(i * step, q) for i, q in enumerate(coeffs)])
        assert f.valuation() == SPEC.exponent(min(i * step for i, q in enumerate(coeffs) if q))


class TestPrinting:
    """Canonical text form."""

    def test_signs_and_coefficients(self):
        f = SPEC.series([(-1, Fraction(1, 2)), (2, -1)])
        assert str(f) == "1/2*t^(-1) - t^2"
        assert str(SPEC.monomial(-1 / X, 1)) == "-1/x*t"
        assert str(SPEC.constant(-1)) == "-1"

    def test_parenthesized_coefficients(self):
        assert str(SPEC.monomial(X + 1, 1)) == "(x + 1)*t"
        assert str(SPEC.constant(X + 1)) == "x + 1"
        assert str(SPEC.constant(X + 1) + T) == "(x + 1) + t"

    def test_zero_and_truncation(self):
        assert str(SPEC.zero()) == "0"
        assert str(SPEC.series([], truncation=3)) == "O(t^3)"

    def test_exponent_literals(self):
        half = make_spec("Qx", ValueGroup.fractional(2), [0])
        assert str(half.t(Fraction(1, 2))) == "t^(1/2)"
        lex = make_spec("Qx", ValueGroup.lex(2), [0, 0], (1, 0))
        assert str(lex.t((1, 0))) == "t^(1,0)"
