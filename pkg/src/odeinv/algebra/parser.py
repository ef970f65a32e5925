"""Recursive-descent parser for rational expressions in x and y.

Grammar (``*`` is mandatory between factors)::

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := ('-' | '+') unary | power
    power  := atom ('^' exponent)?          no chaining: x^2^3 is rejected
    atom   := INT | 'x' | 'y' | '(' expr ')'
    exponent := ['-'] INT | '(' expr ')'    must denote an integer

Negative exponents are accepted only on parenthesized bases.
"""
from __future__ import annotations

import re
from fractions import Fraction

from .ratfunc import PoleError, RatFunc

_TOKEN = re.compile(r"\s*(?:(\d+)|([xy])|(\S))")


class ParseError(ValueError):
    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} at position {pos}")
        self.pos = pos


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:  # only trailing whitespace left
            break
        start = m.start(m.lastindex)
        if m.group(1):
            tokens.append(("int", m.group(1), start))
        elif m.group(2):
            tokens.append(("var", m.group(2), start))
        else:
            ch = m.group(3)
            if ch not in "+-*/^()":
                raise ParseError(f"unexpected character {ch!r}", start)
            tokens.append(("op", ch, start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, value: str):
        kind, val, pos = self.take()
        if val != value or kind != "op":
            raise ParseError(f"expected {value!r}, found {val or 'end of input'!r}", pos)

    def parse(self) -> RatFunc:
        value = self.expr()
        kind, val, pos = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected token {val!r}", pos)
        return value

    def expr(self) -> RatFunc:
        value = self.term()
        while self.peek()[1] in ("+", "-") and self.peek()[0] == "op":
            op = self.take()[1]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self) -> RatFunc:
        value = self.unary()
        while self.peek()[1] in ("*", "/") and self.peek()[0] == "op":
            _, op, pos = self.take()
            rhs = self.unary()
            if op == "*":
                value = value * rhs
            else:
                if rhs.is_zero():
                    raise ParseError("division by the zero function", pos)
                value = value / rhs
        return value

    def unary(self) -> RatFunc:
        kind, val, _ = self.peek()
        if kind == "op" and val in ("-", "+"):
            self.take()
            operand = self.unary()
            return -operand if val == "-" else operand
        return self.power()

    def power(self) -> RatFunc:
        parenthesized = self.peek()[1] == "(" and self.peek()[0] == "op"
        base = self.atom()
        kind, val, pos = self.peek()
        if not (kind == "op" and val == "^"):
            return base
        self.take()
        n, epos = self.exponent()
        if n < 0:
            if not parenthesized:
                raise ParseError("negative exponent requires a parenthesized base", epos)
            if base.is_zero():
                raise ParseError("division by the zero function", epos)
        return base ** n

    def exponent(self) -> tuple[int, int]:
        kind, val, pos = self.peek()
        if kind == "op" and val == "(":
            value = self.atom()
            if not value.is_constant() or value.constant_value().denominator != 1:
                raise ParseError("non-integer exponent", pos)
            return int(value.constant_value()), pos
        sign = 1
        if kind == "op" and val == "-":
            self.take()
            sign = -1
            kind, val, pos = self.peek()
        if kind != "int":
            raise ParseError("non-integer exponent", pos)
        self.take()
        return sign * int(val), pos

    def atom(self) -> RatFunc:
        kind, val, pos = self.take()
        if kind == "int":
            return RatFunc.const(Fraction(int(val)))
        if kind == "var":
            return RatFunc.var(val)
        if kind == "op" and val == "(":
            value = self.expr()
            self.expect(")")
            return value
        raise ParseError(f"unexpected {val or 'end of input'!r}", pos)


def parse_expr(text: str) -> RatFunc:
    """Parse ``text`` into its canonical :class:`RatFunc`."""
    try:
        return _Parser(text).parse()
    except PoleError as exc:  # raised by x/(x-x)-style constructs inside powers
        raise ParseError(str(exc), 0) from exc
