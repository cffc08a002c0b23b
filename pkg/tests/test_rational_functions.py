"""Tests for exact rational functions and the coefficient fields Q and Q(x)."""

from fractions import Fraction

import pytest
from hypothesis import given, settings

from hahnlab.coeffs import CoeffField, RationalFunction, dagger_coeff, derive_coeff, nth_root_coeff
from hahnlab.exceptions import DivisionByZeroError, DomainMismatchError, ParseError

from ._hahnlab_strategies import QX, Q, X, rational_functions


class TestCanonicalForm:
    """Normalization and printing."""

    def test_common_factor_cancels(self):
        f = (X**2 - 1) / (X - 1)
        assert f == X + 1
        assert f.is_polynomial

    def test_monic_denominator(self):
        f = RationalFunction.constant(1) / (2 * X)
        assert str(f) == "1/2/x"
        assert f == Fraction(1, 2) / X

    def test_printing(self):
        assert str(X**2 + 1) == "x^2 + 1"
        assert str((X + 1) / X) == "(x + 1)/x"
        assert str(-X + 1) == "-x + 1"
        assert str(RationalFunction.constant(Fraction(-3, 4))) == "-3/4"
        assert str(RationalFunction.constant(0)) == "0"

    def test_zero_denominator(self):
        with pytest.raises(DivisionByZeroError):
            X / 0
        with pytest.raises(DivisionByZeroError):
            RationalFunction.constant(0).inverse()

    def test_constant_value(self):
        assert RationalFunction.constant(Fraction(2, 3)).constant_value() == Fraction(2, 3)
        with pytest.raises(DomainMismatchError):
            X.constant_value()

    def test_polynomial_part(self):
        quotient, proper = ((X**2 + 1) / X).polynomial_part()
        assert RationalFunction.from_polynomial(quotient) == X
        assert proper == 1 / X

    @settings(max_examples=200, deadline=None)
    @given(f=rational_functions(), g=rational_functions(nonzero=True))
    def test_field_laws(self, f, g):
        assert (f / g) * g == f
        assert f - f == 0
        assert (f + g) - g == f
        assert hash(f * g) == hash(g * f)


class TestCoefficientFields:
    """Q with the trivial derivation and Q(x) with d/dx."""

    def test_parse(self):
        assert CoeffField.parse("Q") == Q
        assert CoeffField.parse("Qx") == QX
        assert CoeffField.parse("Q(x)") == QX
        with pytest.raises(ParseError):
            CoeffField.parse("R")

    def test_q_rejects_x(self):
        with pytest.raises(DomainMismatchError):
            Q.element(X)

    def test_derivation(self):
        assert derive_coeff(QX, X**3) == 3 * X**2
        assert derive_coeff(Q, RationalFunction.constant(5)) == 0
        assert derive_coeff(QX, 1 / X) == -1 / X**2

    def test_dagger(self):
        assert dagger_coeff(QX, X**2) == 2 / X
        with pytest.raises(DivisionByZeroError):
            dagger_coeff(QX, RationalFunction.constant(0))

    @settings(max_examples=200, deadline=None)
    @given(f=rational_functions(), g=rational_functions())
    def test_leibniz(self, f, g):
        assert derive_coeff(QX, f * g) == derive_coeff(QX, f) * g + f * derive_coeff(QX, g)


class TestNthRoots:
    """Exact roots in Q and Q(x)."""

    def test_rational_roots(self):
        assert nth_root_coeff(RationalFunction.constant(Fraction(4, 9)), 2) == Fraction(2, 3)
        assert nth_root_coeff(RationalFunction.constant(-8), 3) == -2
        assert nth_root_coeff(RationalFunction.constant(2), 2) is None
        assert nth_root_coeff(RationalFunction.constant(-4), 2) is None

    def test_function_roots(self):
        assert nth_root_coeff(4 * (X + 1) ** 2 / X**4, 2) == 2 * (X + 1) / X**2
        assert nth_root_coeff(X, 2) is None

    def test_bad_index(self):
        with pytest.raises(DomainMismatchError):
            nth_root_coeff(X, 0)

    @settings(max_examples=100, deadline=None)
    @given(f=rational_functions(nonzero=True))
    def test_square_has_root(self, f):
        root = nth_root_coeff(f * f, 2)
        assert root is not None
        assert root * root == f * f
