"""Scalar-literal grammar shared by every file format.

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := ('+' | '-') unary | power
    power  := atom ('^' integer)?
    atom   := integer | 'z' | variable | '(' expr ')'

`z` denotes the primitive root of unity of the declared conductor.  A rational
`p/q` is just an integer divided by an integer.
"""

from __future__ import annotations

import re
from fractions import Fraction

from ..errors import ParseError
from .field import CycNumber, euler_phi
from .poly import MultiPoly

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(.))")


def _tokenize(text: str, line: int, col0: int):
    tokens = []
    pos = 0
    text = text.replace("−", "-")
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            break
        start = m.start(m.lastindex)
        if m.group(1) is not None:
            tokens.append(("int", int(m.group(1)), start))
        elif m.group(2) is not None:
            tokens.append(("name", m.group(2), start))
        else:
            ch = m.group(3)
            if ch not in "+-*/^()":
                raise ParseError(f"unexpected character {ch!r}", line, col0 + start)
            tokens.append(("op", ch, start))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, conductor: int, variables, line: int, col0: int):
        self.tokens = _tokenize(text, line, col0)
        self.i = 0
        self.conductor = conductor
        self.variables = tuple(variables)
        self.line = line
        self.col0 = col0

    def error(self, message: str):
        pos = self.tokens[self.i][2]
        raise ParseError(message, self.line, self.col0 + pos)

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def const(self, c) -> MultiPoly:
        return MultiPoly.constant(self.variables, c)

    def parse(self) -> MultiPoly:
        if self.peek()[0] == "end":
            self.error("empty expression")
        value = self.expr()
        if self.peek()[0] != "end":
            self.error(f"unexpected token {self.peek()[1]!r}")
        return value

    def expr(self) -> MultiPoly:
        value = self.term()
        while self.peek()[0] == "op" and self.peek()[1] in "+-":
            op = self.take()[1]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self) -> MultiPoly:
        value = self.unary()
        while self.peek()[0] == "op" and self.peek()[1] in "*/":
            at = self.i
            op = self.take()[1]
            rhs = self.unary()
            if op == "*":
                value = value * rhs
            else:
                c = rhs.coefficient((0,) * len(self.variables))
                if rhs.degree() > 0 or not c:
                    self.i = at
                    self.error("division by zero" if rhs.is_zero() else "division by a non-constant")
                value = value * self.const(c.inv())
        return value

    def unary(self) -> MultiPoly:
        tok = self.peek()
        if tok[0] == "op" and tok[1] in "+-":
            self.take()
            inner = self.unary()
            return -inner if tok[1] == "-" else inner
        return self.power()

    def power(self) -> MultiPoly:
        base = self.atom()
        if self.peek()[0] == "op" and self.peek()[1] == "^":
            self.take()
            tok = self.take()
            if tok[0] != "int":
                self.i -= 1
                self.error("exponent must be a non-negative integer")
            base = base ** tok[1]
        return base

    def atom(self) -> MultiPoly:
        tok = self.take()
        kind, value, _ = tok
        if kind == "int":
            return self.const(CycNumber.rational(value, self.conductor))
        if kind == "name":
            if value == "z":
                return self.const(CycNumber.zeta(self.conductor))
            if value in self.variables:
                return MultiPoly.var(self.variables, value)
            self.i -= 1
            self.error(f"unknown symbol {value!r}")
        if kind == "op" and value == "(":
            inner = self.expr()
            if self.peek()[0] != "op" or self.peek()[1] != ")":
                self.error("expected ')'")
            self.take()
            return inner
        self.i -= 1
        self.error("expected a number, 'z' or '('")


def parse_scalar(text: str, conductor: int = 1, line: int = 1, col: int = 1) -> CycNumber:
    poly = _Parser(text, conductor, (), line, col).parse()
    return poly.coefficient(()).coerce(conductor)


def parse_polynomial(text: str, variables, conductor: int = 1, line: int = 1, col: int = 1) -> MultiPoly:
    if "z" in variables:
        raise ValueError("'z' is reserved for the root of unity")
    return _Parser(text, conductor, variables, line, col).parse()


def _frac(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def render(a: CycNumber, conductor: int | None = None, symbol: str = "z") -> str:
    """Render in the literal grammar, highest power of z first."""
    n = conductor or a.conductor
    a = a.coerce(n)
    parts = []
    for k in range(euler_phi(n) - 1, -1, -1):
        c = a.coeffs[k]
        if not c:
            continue
        mono = "" if k == 0 else (symbol if k == 1 else f"{symbol}^{k}")
        mag = abs(c)
        if not mono:
            body = _frac(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{_frac(mag)}*{mono}"
        parts.append(("-" if c < 0 else "+", body))
    if not parts:
        return "0"
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out
