"""Recursive-descent parser for series and differential-polynomial expressions.

Grammar (integers only; rationals are written as quotients)::

    expr     := term (('+' | '-') term)*
    term     := unary (('*' | '/') unary)*
    unary    := '-' unary | power
    power    := atom ['^' exponent]
    exponent := INT | '(' ['-'] INT ['/' INT] ')' | '(' ['-'] INT (',' ['-'] INT)+ ')'
    atom     := INT | 'x' | 't' | 'Y' "'"* | 'O' '(' 't' ['^' exponent] ')' | '(' expr ')'

``print_tree`` writes a fully parenthesized form that reparses to an equal tree.
"""

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple, Union

from ..exceptions import ParseError

Exponent = Union[Fraction, Tuple[int, ...]]

# ---------------------------------------------------------------------------
# Syntax tree
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Num:
    value: int


@dataclass(frozen=True)
class Var:
    """``x``, ``t`` or ``Y`` with ``order`` primes."""

    name: str
    order: int = 0


@dataclass(frozen=True)
class Pow:
    base: "Node"
    exponent: Exponent


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Neg:
    operand: "Node"


@dataclass(frozen=True)
class BigO:
    exponent: Exponent


Node = Union[Num, Var, Pow, BinOp, Neg, BigO]


@dataclass(frozen=True)
class ParsedExpression:
    tree: Node
    source: str

    @property
    def kind(self) -> str:
        """``differential-polynomial``, ``series`` or ``coefficient``."""
        names = _names(self.tree)
        if "Y" in names:
            return "differential-polynomial"
        if "t" in names or "O" in names:
            return "series"
        return "coefficient"

    def __str__(self) -> str:
        return print_tree(self.tree)


def _names(node: Node) -> set:
    if isinstance(node, Var):
        return {node.name}
    if isinstance(node, BigO):
        return {"O"}
    if isinstance(node, Pow):
        return _names(node.base)
    if isinstance(node, Neg):
        return _names(node.operand)
    if isinstance(node, BinOp):
        return _names(node.left) | _names(node.right)
    return set()


# ---------------------------------------------------------------------------
# Tokenizer
# ---------------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[xtYO])|(?P<punct>[-+*/^(),']))")


@dataclass(frozen=True)
class Token:
    kind: str  # "int", "name", "punct" or "eof"
    text: str
    line: int
    column: int


def tokenize(text: str) -> List[Token]:
    tokens: List[Token] = []
    pos = 0
    line, line_start = 1, 0
    while True:
        while pos < len(text) and text[pos].isspace():
            if text[pos] == "\n":
                line, line_start = line + 1, pos + 1
            pos += 1
        if pos >= len(text):
            tokens.append(Token("eof", "", line, pos - line_start + 1))
            return tokens
        match = _TOKEN.match(text, pos)
        if not match or match.end() == pos:
            raise ParseError(
                f"unexpected character {text[pos]!r}",
                line,
                pos - line_start + 1,
                frozenset({"integer", "x", "t", "Y", "O(", "(", "+", "-", "*", "/", "^"}),
            )
        kind = match.lastgroup or "punct"
        start = match.start(kind)
        tokens.append(Token(kind, match.group(kind), line, start - line_start + 1))
        pos = match.end()


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------


class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.index = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.index]

    def _advance(self) -> Token:
        token = self.current
        if token.kind != "eof":
            self.index += 1
        return token

    def _error(self, message: str, expected: frozenset) -> ParseError:
        token = self.current
        found = "end of input" if token.kind == "eof" else repr(token.text)
        return ParseError(f"{message}, found {found}", token.line, token.column, expected)

    def _expect(self, text: str) -> Token:
        if self.current.text != text or self.current.kind == "eof":
            raise self._error(f"expected {text!r}", frozenset({text}))
        return self._advance()

    def _accept(self, text: str) -> bool:
        if self.current.kind == "punct" and self.current.text == text:
            self._advance()
            return True
        return False

    def parse(self) -> Node:
        node = self.expression()
        if self.current.kind != "eof":
            raise self._error("unexpected trailing input", frozenset({"+", "-", "*", "/", "end of input"}))
        return node

    def expression(self) -> Node:
        node = self.term()
        while self.current.kind == "punct" and self.current.text in "+-":
            op = self._advance().text
            node = BinOp(op, node, self.term())
        return node

    def term(self) -> Node:
        node = self.unary()
        while self.current.kind == "punct" and self.current.text in "*/":
            op = self._advance().text
            node = BinOp(op, node, self.unary())
        return node

    def unary(self) -> Node:
        if self._accept("-"):
            return Neg(self.unary())
        return self.power()

    def power(self) -> Node:
        base = self.atom()
        if self._accept("^"):
            return Pow(base, self.exponent())
        return base

    def _signed_int(self) -> int:
        sign = -1 if self._accept("-") else 1
        if self.current.kind != "int":
            raise self._error("expected an integer", frozenset({"integer", "-"}))
        return sign * int(self._advance().text)

    def exponent(self) -> Exponent:
        if self.current.kind == "int":
            return Fraction(int(self._advance().text))
        if not self._accept("("):
            raise self._error("expected an exponent", frozenset({"integer", "("}))
        first = self._signed_int()
        if self._accept("/"):
            if self.current.kind != "int":
                raise self._error("expected a denominator", frozenset({"integer"}))
            token = self._advance()
            if int(token.text) == 0:
                raise ParseError("zero denominator in exponent", token.line, token.column)
            value: Exponent = Fraction(first, int(token.text))
        elif self.current.text == ",":
            coords = [first]
            while self._accept(","):
                coords.append(self._signed_int())
            value = tuple(coords)
        else:
            value = Fraction(first)
        self._expect(")")
        return value

    def atom(self) -> Node:
        token = self.current
        if token.kind == "int":
            self._advance()
            return Num(int(token.text))
        if token.kind == "name":
            self._advance()
            if token.text == "O":
                return self._big_o()
            if token.text == "Y":
                order = 0
                while self._accept("'"):
                    order += 1
                return Var("Y", order)
            return Var(token.text)
        if self._accept("("):
            node = self.expression()
            self._expect(")")
            return node
        raise self._error("expected a term", frozenset({"integer", "x", "t", "Y", "O(", "(", "-"}))

    def _big_o(self) -> Node:
        self._expect("(")
        if self.current.text != "t":
            raise self._error("expected t inside O(...)", frozenset({"t"}))
        self._advance()
        exponent: Exponent = Fraction(1)
        if self._accept("^"):
            exponent = self.exponent()
        self._expect(")")
        return BigO(exponent)


def parse_expression(text: str) -> ParsedExpression:
    return ParsedExpression(_Parser(text).parse(), text)


# ---------------------------------------------------------------------------
# Printing
# ---------------------------------------------------------------------------


def format_exponent(exponent: Exponent) -> str:
    if isinstance(exponent, tuple):
        return "(" + ",".join(str(v) for v in exponent) + ")"
    if exponent.denominator == 1 and exponent >= 0:
        return str(exponent.numerator)
    return f"({exponent})"


def print_tree(node: Node) -> str:
    if isinstance(node, Num):
        return str(node.value)
    if isinstance(node, Var):
        return node.name + "'" * node.order
    if isinstance(node, BigO):
        return f"O(t^{format_exponent(node.exponent)})"
    if isinstance(node, Neg):
        return f"(-{print_tree(node.operand)})"
    if isinstance(node, Pow):
        base = print_tree(node.base)
        if isinstance(node.base, Num) or isinstance(node.base, Pow):
            base = f"({base})"
        return f"{base}^{format_exponent(node.exponent)}"
    return f"({print_tree(node.left)} {node.op} {print_tree(node.right)})"


def integer_exponent(exponent: Exponent) -> Optional[int]:
    """The exponent as an int, or None when it is a fraction or a tuple."""
    if isinstance(exponent, tuple) or exponent.denominator != 1:
        return None
    return int(exponent)
