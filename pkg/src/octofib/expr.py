"""Octonion expressions for the ``eval`` command.

Grammar::

    expr     := term (('+' | '-') term)*
    term     := factor ('*' factor)*
    factor   := rational | basis | '(' expr ')' | '-' factor
    rational := integer ['/' positive-integer]
    basis    := 'e' digit1-7

``*`` groups LEFT TO RIGHT: ``e1*e2*e4`` is ``(e1*e2)*e4``. Octonion
multiplication is not associative, so this matters; parenthesize explicitly
when a different grouping is meant.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from octofib.octonion import AlgebraParams, Octonion, mul
from octofib.rationals import format_rational


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Basis:
    index: int


@dataclass(frozen=True)
class Neg:
    operand: "Node"


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Node"
    right: "Node"


Node = Union[Num, Basis, Neg, BinOp]

_TOKEN_RE = re.compile(r"\s*(?:(\d+)|(e[1-7])(?![0-9A-Za-z_])|([-+*/()]))")


def tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            bad = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[bad]!r}", bad)
        start = m.start(m.lastindex)
        if m.group(1) is not None:
            tokens.append(("int", m.group(1), start))
        elif m.group(2) is not None:
            tokens.append(("basis", m.group(2), start))
        else:
            tokens.append((m.group(3), m.group(3), start))
        pos = m.end()
    tokens.append(("eof", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.i = 0

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.i]

    def take(self, kind: str) -> tuple[str, str, int]:
        tok = self.peek()
        if tok[0] != kind:
            what = "end of input" if tok[0] == "eof" else repr(tok[1])
            raise ParseError(f"expected {kind!r}, found {what}", tok[2])
        self.i += 1
        return tok

    def expr(self) -> Node:
        node = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.take(self.peek()[0])[0]
            node = BinOp(op, node, self.term())
        return node

    def term(self) -> Node:
        node = self.factor()
        while self.peek()[0] == "*":
            self.take("*")
            node = BinOp("*", node, self.factor())
        return node

    def factor(self) -> Node:
        kind, text, pos = self.peek()
        if kind == "int":
            self.i += 1
            num = int(text)
            if self.peek()[0] == "/":
                self.take("/")
                _, den_text, den_pos = self.take("int")
                if int(den_text) == 0:
                    raise ParseError("zero denominator", den_pos)
                return Num(Fraction(num, int(den_text)))
            return Num(Fraction(num))
        if kind == "basis":
            self.i += 1
            return Basis(int(text[1]))
        if kind == "(":
            self.take("(")
            node = self.expr()
            self.take(")")
            return node
        if kind == "-":
            self.take("-")
            return Neg(self.factor())
        what = "end of input" if kind == "eof" else repr(text)
        raise ParseError(f"unexpected {what}", pos)


def parse(text: str) -> Node:
    p = _Parser(text)
    node = p.expr()
    if p.peek()[0] != "eof":
        raise ParseError(f"unexpected {p.peek()[1]!r}", p.peek()[2])
    return node


def to_source(node: Node) -> str:
    """Fully parenthesized source; ``parse(to_source(t)) == t``."""
    if isinstance(node, Num):
        return format_rational(node.value)
    if isinstance(node, Basis):
        return f"e{node.index}"
    if isinstance(node, Neg):
        return f"(-{to_source(node.operand)})"
    return f"({to_source(node.left)} {node.op} {to_source(node.right)})"


def evaluate(node: Node, algebra: AlgebraParams) -> Octonion:
    if isinstance(node, Num):
        return Octonion.scalar(node.value, algebra)
    if isinstance(node, Basis):
        return Octonion.unit(node.index, algebra)
    if isinstance(node, Neg):
        return -evaluate(node.operand, algebra)
    left, right = evaluate(node.left, algebra), evaluate(node.right, algebra)
    if node.op == "+":
        return left + right
    if node.op == "-":
        return left - right
    return mul(left, right)
