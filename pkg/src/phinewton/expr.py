"""Parser and renderer for integer polynomial expressions in x.

Grammar (whitespace-insensitive, integers unbounded):

    expr   := '-'? term (('+' | '-') term)*
    term   := factor ('*'? factor)*
    factor := base ('^' uint)?
    base   := uint | 'x' | '(' expr ')'

The '*' between adjacent factors is optional, so inputs like
"24x(x^2+x+1)^3" parse as written.  A single leading '-' is accepted so
rendered polynomials always round-trip; doubled operators are rejected.
"""

from __future__ import annotations

from .polyring import IntPoly


class ParseError(ValueError):
    """Syntax error with the 0-based offset of the offending character."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class _Parser:
    def __init__(self, src: str):
        self.src = src
        self.pos = 0

    def _skip_ws(self):
        while self.pos < len(self.src) and self.src[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self._skip_ws()
        return self.src[self.pos] if self.pos < len(self.src) else ""

    def take(self) -> str:
        ch = self.peek()
        self.pos += 1
        return ch

    def expect(self, ch: str):
        got = self.peek()
        if got != ch:
            raise ParseError(f"expected '{ch}'", self.pos)
        self.pos += 1

    def parse_uint(self) -> int:
        self._skip_ws()
        start = self.pos
        while self.pos < len(self.src) and self.src[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise ParseError("expected an integer", start)
        if self.pos < len(self.src) and self.src[self.pos] == ".":
            raise ParseError("non-integer coefficient", self.pos)
        return int(self.src[start : self.pos])

    def parse_expr(self) -> IntPoly:
        negate = False
        if self.peek() == "-":
            self.take()
            negate = True
        result = self.parse_term()
        if negate:
            result = -result
        while True:
            op = self.peek()
            if op == "+":
                self.take()
                result = result + self.parse_term()
            elif op == "-":
                self.take()
                result = result - self.parse_term()
            else:
                return result

    def parse_term(self) -> IntPoly:
        result = self.parse_factor()
        while True:
            ch = self.peek()
            if ch == "*":
                self.take()
                result = result * self.parse_factor()
            elif ch.isdigit() or ch == "x" or ch == "(":
                result = result * self.parse_factor()
            else:
                return result

    def parse_factor(self) -> IntPoly:
        base = self.parse_base()
        if self.peek() == "^":
            self.take()
            return base ** self.parse_uint()
        return base

    def parse_base(self) -> IntPoly:
        ch = self.peek()
        if ch.isdigit():
            return IntPoly.constant(self.parse_uint())
        if ch == "x":
            self.take()
            return IntPoly.x()
        if ch == "(":
            self.take()
            inner = self.parse_expr()
            self.expect(")")
            return inner
        if ch.isalpha():
            raise ParseError(f"unknown variable '{ch}'", self.pos)
        if ch == ".":
            raise ParseError("non-integer coefficient", self.pos)
        if ch == "":
            raise ParseError("unexpected end of input", self.pos)
        raise ParseError(f"unexpected character '{ch}'", self.pos)


def parse_poly(src: str) -> IntPoly:
    """Parse an expression into an IntPoly with exact integer coefficients."""
    parser = _Parser(src)
    result = parser.parse_expr()
    if parser.peek() != "":
        raise ParseError(f"unexpected character '{parser.peek()}'", parser.pos)
    return result


def render_poly(poly: IntPoly) -> str:
    """Canonical expression: descending powers, re-parseable by parse_poly."""
    if poly.is_zero:
        return "0"
    pieces = []
    for i in range(poly.degree, -1, -1):
        c = poly.coeffs[i]
        if c == 0:
            continue
        mag = abs(c)
        if i == 0:
            body = str(mag)
        else:
            xpow = "x" if i == 1 else f"x^{i}"
            body = xpow if mag == 1 else f"{mag}{xpow}"
        if not pieces:
            pieces.append(body if c > 0 else f"-{body}")
        else:
            pieces.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(pieces)
