"""Expression and session-literal parsing for the command line."""

from .evaluator import (
    as_coefficient,
    as_polynomial,
    as_series,
    evaluate,
    evaluate_text,
    parse_coefficient,
    parse_fraction,
    parse_polynomial,
    parse_series,
)
from .literals import parse_cmap, parse_subgroup, split_top_level
from .parser import ParsedExpression, parse_expression, print_tree, tokenize

__all__ = [
    "ParsedExpression",
    "as_coefficient",
    "as_polynomial",
    "as_series",
    "evaluate",
    "evaluate_text",
    "parse_cmap",
    "parse_coefficient",
    "parse_expression",
    "parse_fraction",
    "parse_polynomial",
    "parse_series",
    "parse_subgroup",
    "print_tree",
    "split_top_level",
    "tokenize",
]
