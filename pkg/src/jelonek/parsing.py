"""Recursive-descent parser for polynomial expressions.

Grammar (whitespace-insensitive):

    expr   := term (('+' | '-') term)*
    term   := unary ('*' unary)*
    unary  := '-' unary | power
    power  := atom ('^' INT)?
    atom   := NUMBER | VAR | '(' expr ')'
    NUMBER := INT ('/' INT)?

Multiplication is always explicit and exponents are nonnegative integer
literals.  Errors carry the offending position.
"""

from __future__ import annotations

from fractions import Fraction

from .poly import DEFAULT_VARS, SparsePoly


class ParseError(ValueError):
    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


class _Parser:
    def __init__(self, text: str, allowed: tuple[str, ...], variables: tuple[str, ...]):
        self.text = text
        self.allowed = allowed
        self.vars = variables
        self.i = 0

    def skip_ws(self):
        while self.i < len(self.text) and self.text[self.i].isspace():
            self.i += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.i] if self.i < len(self.text) else ""

    def expect(self, ch: str):
        if self.peek() != ch:
            raise ParseError(f"expected {ch!r}", self.i)
        self.i += 1

    def parse(self) -> SparsePoly:
        p = self.expr()
        self.skip_ws()
        if self.i != len(self.text):
            raise ParseError(f"unexpected {self.text[self.i]!r}", self.i)
        return p

    def expr(self) -> SparsePoly:
        p = self.term()
        while True:
            c = self.peek()
            if c == "+":
                self.i += 1
                p = p + self.term()
            elif c == "-":
                self.i += 1
                p = p - self.term()
            else:
                return p

    def term(self) -> SparsePoly:
        p = self.unary()
        while self.peek() == "*":
            self.i += 1
            p = p * self.unary()
        return p

    def unary(self) -> SparsePoly:
        if self.peek() == "-":
            self.i += 1
            return -self.unary()
        return self.power()

    def power(self) -> SparsePoly:
        base = self.atom()
        if self.peek() == "^":
            self.i += 1
            self.skip_ws()
            start = self.i
            if self.peek() == "-":
                raise ParseError("negative exponent", self.i)
            if self.peek() == "(":
                raise ParseError("exponent must be an integer literal", self.i)
            k = self.integer()
            if k < 0:
                raise ParseError("negative exponent", start)
            return base ** k
        return base

    def integer(self) -> int:
        self.skip_ws()
        start = self.i
        while self.i < len(self.text) and self.text[self.i].isdigit():
            self.i += 1
        if self.i == start:
            raise ParseError("expected integer", start)
        return int(self.text[start:self.i])

    def atom(self) -> SparsePoly:
        c = self.peek()
        if c == "(":
            self.i += 1
            p = self.expr()
            self.expect(")")
            return p
        if c.isdigit():
            n = self.integer()
            if self.peek() == "/":
                self.i += 1
                start = self.i
                d = self.integer()
                if d == 0:
                    raise ParseError("zero denominator", start)
                return SparsePoly.constant(Fraction(n, d), self.vars)
            return SparsePoly.constant(n, self.vars)
        if c.isalpha():
            start = self.i
            while self.i < len(self.text) and (self.text[self.i].isalnum() or self.text[self.i] == "_"):
                self.i += 1
            name = self.text[start:self.i]
            if name not in self.allowed:
                raise ParseError(f"unknown variable {name!r}", start)
            return SparsePoly.variable(name, self.vars)
        raise ParseError("expected number, variable or '('", self.i)


def parse_polynomial(text: str, allowed: tuple[str, ...] = ("x1", "x2"), variables: tuple[str, ...] = DEFAULT_VARS) -> SparsePoly:
    """Parse an expression into a SparsePoly over the default universe.

    ``allowed`` restricts which variable names may appear; anything else is
    rejected with a position-tagged :class:`ParseError`.
    """
    return _Parser(text, tuple(allowed), tuple(variables)).parse()
