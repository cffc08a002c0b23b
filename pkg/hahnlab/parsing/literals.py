"""Session literals: c-maps and finitely generated subgroups.

``c: 1 -> x`` (rank one), ``c: e1 -> 1, e2 -> 1/x`` (ℤⁿ), ``c: 0`` (zero map);
subgroups are written ``<1/2, 3>`` or just ``1/2, 3``. Error columns refer to
the full literal.
"""

import re
from typing import Dict, List, Tuple

from ..cmaps import AdditiveMap
from ..coeffs.field import CoeffField
from ..coeffs.rational_function import ZERO, RationalFunction
from ..exceptions import ParseError
from ..groups.subgroup import FgSubgroup
from ..groups.value_group import GroupKind, ValueGroup
from .evaluator import parse_coefficient

_PREFIX = re.compile(r"^\s*c\s*:")
_BASIS_KEY = re.compile(r"^e(?P<index>\d+)$")


def split_top_level(text: str, offset: int = 0) -> List[Tuple[str, int]]:
    """Split on commas outside parentheses; each piece comes with its 1-based column."""
    pieces: List[Tuple[str, int]] = []
    depth, start = 0, 0
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ParseError("unbalanced ')'", 1, offset + i + 1, frozenset({"(", "expression"}))
        elif ch == "," and depth == 0:
            pieces.append((text[start:i], offset + start + 1))
            start = i + 1
    if depth:
        raise ParseError("missing ')'", 1, offset + len(text) + 1, frozenset({")"}))
    pieces.append((text[start:], offset + start + 1))
    return pieces


def _strip(piece: str, column: int) -> Tuple[str, int]:
    stripped = piece.lstrip()
    return stripped.rstrip(), column + len(piece) - len(stripped)


def _coefficient(text: str, column: int, field: CoeffField) -> RationalFunction:
    try:
        return parse_coefficient(text, field)
    except ParseError as e:
        raise ParseError(e.message, 1, column + e.column - 1, e.expected) from e


def parse_cmap(text: str, group: ValueGroup, field: CoeffField) -> AdditiveMap:
    """Parse a c-map literal against a value group and coefficient field."""
    body, offset = text, 0
    prefix = _PREFIX.match(text)
    if prefix:
        body, offset = text[prefix.end() :], prefix.end()
    if body.strip() == "0":
        return AdditiveMap.zero(group, field)

    entries: Dict[int, RationalFunction] = {}
    for piece, column in split_top_level(body, offset):
        entry, column = _strip(piece, column)
        if "->" not in entry:
            raise ParseError(f"expected 'key -> value', got {entry!r}", 1, column, frozenset({"->"}))
        raw_key, raw_value = entry.split("->", 1)
        key = raw_key.strip()
        value, value_column = _strip(raw_value, column + len(raw_key) + 2)
        if not value:
            raise ParseError("missing image after '->'", 1, value_column, frozenset({"expression"}))
        image = _coefficient(value, value_column, field)
        if group.kind == GroupKind.LEX:
            match = _BASIS_KEY.match(key)
            if not match or not 1 <= int(match.group("index")) <= group.rank:
                raise ParseError(
                    f"expected a basis key e1..e{group.rank}, got {key!r}",
                    1,
                    column,
                    frozenset(f"e{i + 1}" for i in range(group.rank)),
                )
            slot = int(match.group("index")) - 1
        else:
            gamma = group.parse_element(key, column)
            if not gamma:
                raise ParseError("the image of 0 is fixed", 1, column, frozenset({"nonzero group element"}))
            if entries:
                raise ParseError(f"{group} takes a single 'γ -> value' entry", 1, column)
            image = image * RationalFunction.constant(group.step / gamma.fraction)
            slot = 0
        if slot in entries:
            raise ParseError(f"duplicate key {key!r}", 1, column)
        entries[slot] = image

    images = tuple(entries.get(i, ZERO) for i in range(group.rank))
    return AdditiveMap(group, field, images)


def parse_subgroup(text: str, group: ValueGroup) -> FgSubgroup:
    """Parse ``<γ1, ..., γm>`` into the subgroup those elements generate."""
    body, offset = text.strip(), len(text) - len(text.lstrip())
    if body.startswith("<") and body.endswith(">"):
        body, offset = body[1:-1], offset + 1
    if body.strip() in ("", "0", "{0}"):
        return FgSubgroup.trivial(group)
    generators = []
    for piece, column in split_top_level(body, offset):
        literal, column = _strip(piece, column)
        if not literal:
            raise ParseError("empty generator", 1, column, frozenset({"group element"}))
        generators.append(group.parse_element(literal, column))
    return FgSubgroup(group, generators)
