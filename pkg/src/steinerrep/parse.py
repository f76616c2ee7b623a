"""Text grammar for polynomials.

    expr   := [+|-] term ((+|-) term)*
    term   := factor (* factor)*
    factor := atom [^ integer]
    atom   := integer | integer/integer | identifier | ( expr )

Juxtaposition is rejected: ``2x`` and ``2 x`` are syntax errors, the product
must be written ``2*x``.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .field import FieldError
from .poly import PolyRing, Polynomial

_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+(?:\s*/\s*\d+)?)|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*^()]))"
)


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class _Parser:
    def __init__(self, ring: PolyRing, text: str):
        self.ring = ring
        self.text = text
        self.tokens = self._tokenize(text)
        self.i = 0

    @staticmethod
    def _tokenize(text):
        tokens = []
        pos = 0
        n = len(text)
        while pos < n:
            if text[pos].isspace():
                pos += 1
                continue
            m = _TOKEN.match(text, pos)
            if not m or m.end() == pos:
                raise ParseError(f"unexpected character {text[pos]!r}", pos)
            kind = m.lastgroup
            start = m.start(kind)
            tokens.append((kind, m.group(kind), start))
            pos = m.end()
        tokens.append(("end", "", n))
        return tokens

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, value):
        kind, text, pos = self.take()
        if text != value:
            raise ParseError(f"expected {value!r}, found {text or 'end of input'!r}", pos)

    def parse(self) -> Polynomial:
        if self.peek()[0] == "end":
            raise ParseError("empty expression", 0)
        result = self.expr()
        kind, text, pos = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected {text!r}", pos)
        return result

    def expr(self) -> Polynomial:
        sign = 1
        if self.peek()[1] in "+-" and self.peek()[0] == "op":
            sign = -1 if self.take()[1] == "-" else 1
        result = self.term()
        if sign < 0:
            result = -result
        while self.peek()[0] == "op" and self.peek()[1] in "+-":
            op = self.take()[1]
            rhs = self.term()
            result = result + rhs if op == "+" else result - rhs
        return result

    def term(self) -> Polynomial:
        result = self.factor()
        while self.peek()[1] == "*" and self.peek()[0] == "op":
            self.take()
            result = result * self.factor()
        kind, text, pos = self.peek()
        if kind in ("num", "ident") or text == "(":
            raise ParseError("missing '*' between factors", pos)
        return result

    def factor(self) -> Polynomial:
        base = self.atom()
        if self.peek()[1] == "^" and self.peek()[0] == "op":
            self.take()
            kind, text, pos = self.take()
            if kind != "num" or "/" in text:
                raise ParseError("exponent must be a non-negative integer", pos)
            base = base ** int(text)
            if self.peek()[1] == "^":
                raise ParseError("chained exponents are ambiguous; use parentheses", self.peek()[2])
        return base

    def atom(self) -> Polynomial:
        kind, text, pos = self.take()
        if kind == "num":
            if "/" in text:
                num, den = (int(s) for s in text.split("/"))
                if den == 0:
                    raise ParseError("zero denominator", pos)
                value = Fraction(num, den)
            else:
                value = int(text)
            try:
                return self.ring.constant(value)
            except FieldError as exc:
                raise ParseError(str(exc), pos) from None
        if kind == "ident":
            if text not in self.ring.var_names:
                raise ParseError(f"unknown variable {text!r}", pos)
            return self.ring.gen(text)
        if text == "(":
            inner = self.expr()
            self.expect(")")
            return inner
        raise ParseError(f"unexpected {text or 'end of input'!r}", pos)


def parse_poly(ring: PolyRing, text: str) -> Polynomial:
    """Parse ``text`` into a canonical polynomial of ``ring``."""
    return _Parser(ring, text).parse()
