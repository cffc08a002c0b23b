"""Tests for expression parsing, evaluation and the session literals."""

from fractions import Fraction

import pytest

from hahnlab.coeffs import RationalFunction
from hahnlab.exceptions import DomainMismatchError, ParseError
from hahnlab.groups import ValueGroup
from hahnlab.groups.subgroup import FgSubgroup
from hahnlab.parsing import (
    evaluate_text,
    parse_cmap,
    parse_coefficient,
    parse_expression,
    parse_fraction,
    parse_polynomial,
    parse_series,
    parse_subgroup,
    split_top_level,
    tokenize,
)

from ._hahnlab_strategies import QX, Q, X, make_spec, z_spec

SPEC = z_spec(0)


# ---------------------------------------------------------------------------
# Syntax
# ---------------------------------------------------------------------------


class TestParseExpression:
    """Trees, kinds and the parenthesized printer."""

    @pytest.mark.parametrize(
        "text,tree",
        [
            ("x + 1/x", "(x + (1 / x))"),
            ("-t^2", "(-t^2)"),
            ("2^3", "(2)^3"),
            ("Y''", "Y''"),
            ("O(t^3)", "O(t^3)"),
            ("O(t)", "O(t^1)"),
            ("t^(1/2)", "t^(1/2)"),
            ("t^(-1)", "t^(-1)"),
            ("t^(1,-2)", "t^(1,-2)"),
            ("1 - t - t", "((1 - t) - t)"),
        ],
    )
    def test_printing(self, text, tree):
        assert str(parse_expression(text)) == tree

    def test_printed_tree_reparses(self):
        parsed = parse_expression("(1 + x)*Y' - t^(1/2)*Y^2 + O(t^4)")
        assert parse_expression(str(parsed)).tree == parsed.tree

    @pytest.mark.parametrize(
        "text,kind",
        [("x + 1", "coefficient"), ("t", "series"), ("O(t)", "series"), ("Y' + t", "differential-polynomial")],
    )
    def test_kind(self, text, kind):
        assert parse_expression(text).kind == kind

    def test_token_columns(self):
        tokens = tokenize("t +\n  x")
        assert [(tok.text, tok.line, tok.column) for tok in tokens] == [
            ("t", 1, 1),
            ("+", 1, 3),
            ("x", 2, 3),
            ("", 2, 4),
        ]


class TestParseErrors:
    """Positions and expected-token sets."""

    def test_dangling_caret(self):
        with pytest.raises(ParseError) as exc_info:
            parse_expression("t^")
        error = exc_info.value
        assert (error.line, error.column) == (1, 3)
        assert error.expected == frozenset({"integer", "("})
        assert "end of input" in error.message

    def test_unexpected_character(self):
        with pytest.raises(ParseError) as exc_info:
            parse_expression("t $")
        assert exc_info.value.column == 3

    def test_trailing_input(self):
        with pytest.raises(ParseError) as exc_info:
            parse_expression("t t")
        assert exc_info.value.column == 3
        assert "trailing" in exc_info.value.message

    def test_missing_parenthesis(self):
        with pytest.raises(ParseError) as exc_info:
            parse_expression("(t")
        assert exc_info.value.expected == frozenset({")"})

    def test_zero_denominator(self):
        with pytest.raises(ParseError) as exc_info:
            parse_expression("t^(1/0)")
        assert exc_info.value.column == 6

    def test_message_carries_position(self):
        with pytest.raises(ParseError, match=r"^1:3: "):
            parse_expression("t^")


# ---------------------------------------------------------------------------
# Evaluation
# ---------------------------------------------------------------------------


class TestEvaluate:
    """Promotion along k → K → K{Y}."""

    def test_coefficient(self):
        assert parse_coefficient("x + 1/x", QX) == X + 1 / X
        assert evaluate_text("1/2", SPEC) == RationalFunction.constant(Fraction(1, 2))

    def test_series(self):
        assert str(parse_series("x*t + O(t^3)", SPEC)) == "x*t + O(t^3)"
        assert parse_series("1", SPEC) == SPEC.one()
        assert parse_series("t^(-1) + 2", SPEC) == SPEC.t(-1) + 2

    def test_half_integer_series(self):
        spec = make_spec("Qx", ValueGroup.fractional(2), [0])
        f = parse_series("x*t^(1/2) + t^3 + O(t^5)", spec)
        assert len(f.terms) == 2
        assert f.truncation == spec.exponent(5)
        P = parse_polynomial("(1+t)*Y' + x*Y - t", spec)
        assert P.order == 1

    def test_quotient_uses_default_truncation(self):
        spec = z_spec(0, truncation=4)
        assert str(parse_series("1/(1 - t)", spec)) == "1 + t + t^2 + t^3 + O(t^4)"

    def test_differential_polynomial(self):
        assert str(parse_polynomial("Y' + x*Y", SPEC)) == "Y' + x*Y"
        assert str(parse_polynomial("Y^2 - Y'", SPEC)) == "Y^2 - Y'"

    def test_exponent_outside_the_group(self):
        with pytest.raises(DomainMismatchError):
            parse_series("t^(1/2)", SPEC)

    def test_fractional_power_of_a_non_t_base(self):
        with pytest.raises(DomainMismatchError):
            parse_series("(1 + t)^(1/2)", SPEC)

    def test_t_in_a_coefficient(self):
        with pytest.raises(DomainMismatchError):
            parse_coefficient("t", QX)

    def test_x_over_the_rationals(self):
        with pytest.raises(DomainMismatchError):
            parse_coefficient("x", Q)

    def test_division_by_a_polynomial(self):
        with pytest.raises(DomainMismatchError):
            parse_polynomial("Y / Y", SPEC)

    def test_series_expected(self):
        with pytest.raises(DomainMismatchError):
            parse_series("Y", SPEC)

    @pytest.mark.parametrize("text,value", [("3", 3), ("-1/2", Fraction(-1, 2)), ("(2/3)", Fraction(2, 3))])
    def test_fraction(self, text, value):
        assert parse_fraction(text) == value


# ---------------------------------------------------------------------------
# Session literals
# ---------------------------------------------------------------------------


class TestParseCmap:
    """c-map literals against a group and a field."""

    def test_rank_one(self):
        c = parse_cmap("1 -> x", ValueGroup.integers(), QX)
        assert c.images == (X,)
        assert str(c) == "1 -> x"

    def test_prefix_and_zero(self):
        assert parse_cmap("c: 0", ValueGroup.integers(), QX).is_zero
        assert parse_cmap("c: 1 -> 1/x", ValueGroup.integers(), QX).images == (1 / X,)

    def test_lex(self):
        c = parse_cmap("e1 -> 1, e2 -> 1/x", ValueGroup.lex(2), QX)
        assert c.images == (RationalFunction.constant(1), 1 / X)

    def test_missing_basis_key_is_zero(self):
        c = parse_cmap("e2 -> x", ValueGroup.lex(2), QX)
        assert c.images == (RationalFunction.constant(0), X)

    def test_rescaled_to_the_generator(self):
        half = ValueGroup.fractional(2)
        assert parse_cmap("1/2 -> 1", half, QX).images == (RationalFunction.constant(1),)
        assert parse_cmap("1 -> 1", half, QX).images == (RationalFunction.constant(Fraction(1, 2)),)

    def test_bad_basis_key(self):
        with pytest.raises(ParseError) as exc_info:
            parse_cmap("e3 -> 1", ValueGroup.lex(2), QX)
        assert exc_info.value.expected == frozenset({"e1", "e2"})

    def test_duplicate_key_column(self):
        with pytest.raises(ParseError) as exc_info:
            parse_cmap("e1 -> 1, e1 -> 2", ValueGroup.lex(2), QX)
        assert exc_info.value.column == 10

    def test_image_error_column(self):
        with pytest.raises(ParseError) as exc_info:
            parse_cmap("1 -> x^", ValueGroup.integers(), QX)
        assert exc_info.value.column == 8

    def test_rank_one_takes_one_entry(self):
        with pytest.raises(ParseError):
            parse_cmap("1 -> x, 2 -> 1", ValueGroup.integers(), QX)

    def test_image_of_zero(self):
        with pytest.raises(ParseError):
            parse_cmap("0 -> 1", ValueGroup.integers(), QX)

    def test_missing_arrow(self):
        with pytest.raises(ParseError) as exc_info:
            parse_cmap("x", ValueGroup.integers(), QX)
        assert exc_info.value.expected == frozenset({"->"})


class TestParseSubgroup:
    """Generator lists."""

    def test_rank_one(self):
        group = ValueGroup.rationals()
        subgroup = parse_subgroup("<1/2, 3>", group)
        assert subgroup == FgSubgroup(group, [group.element(Fraction(1, 2))])

    def test_lex(self):
        group = ValueGroup.lex(2)
        subgroup = parse_subgroup("(1,0), (0,2)", group)
        assert subgroup.contains(group.element((3, 4)))
        assert not subgroup.contains(group.element((0, 1)))

    def test_trivial(self):
        assert parse_subgroup("<>", ValueGroup.integers()).is_trivial
        assert parse_subgroup("0", ValueGroup.integers()).is_trivial

    def test_empty_generator(self):
        with pytest.raises(ParseError):
            parse_subgroup("<1, >", ValueGroup.integers())

    def test_split_respects_parentheses(self):
        assert split_top_level("(1,0), (0,2)") == [("(1,0)", 1), (" (0,2)", 7)]

    def test_unbalanced(self):
        with pytest.raises(ParseError):
            split_top_level("(1,0")
