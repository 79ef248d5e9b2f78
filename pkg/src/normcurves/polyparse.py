"""Parser and canonical printer for univariate polynomials.

Grammar (whitespace between tokens is ignored)::

    poly  := sign? term (("+" | "-") sign? term)*
    term  := coeff ("*"? power)? | power
    power := VAR ("^" INT)?
    coeff := INT ("/" INT)?

The printer emits descending powers, ``*`` between coefficient and variable,
and ``p/q`` coefficients, so ``parse_poly(format_poly(p)) == p``.
"""
from __future__ import annotations

from fractions import Fraction

from .errors import PolySyntaxError
from .exactmath import UPoly, format_rational


class _Parser:
    def __init__(self, src: str, var: str):
        self.src = src
        self.var = var
        self.pos = 0

    def offset(self) -> int:
        return len(self.src[:self.pos].encode("utf-8"))

    def fail(self, what: str, expected):
        raise PolySyntaxError(what, self.offset(), expected)

    def skip(self):
        while self.pos < len(self.src) and self.src[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.src[self.pos] if self.pos < len(self.src) else ""

    def integer(self) -> int:
        self.skip()
        start = self.pos
        while self.pos < len(self.src) and self.src[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.fail("expected an integer", {"INT"})
        return int(self.src[start:self.pos])

    def power(self) -> int:
        self.pos += len(self.var)
        if self.peek() == "^":
            self.pos += 1
            return self.integer()
        return 1

    def at_var(self) -> bool:
        self.skip()
        return self.src.startswith(self.var, self.pos)

    def term(self):
        ch = self.peek()
        if ch.isdigit():
            c = Fraction(self.integer())
            if self.peek() == "/":
                self.pos += 1
                d = self.integer()
                if d == 0:
                    self.pos -= 1
                    self.fail("zero denominator", {"INT"})
                c /= d
            if self.peek() == "*":
                self.pos += 1
                if not self.at_var():
                    self.fail("expected the variable", {self.var})
                return c, self.power()
            if self.at_var():
                return c, self.power()
            return c, 0
        if self.at_var():
            return Fraction(1), self.power()
        self.fail("unexpected input" if ch else "unexpected end of input", {"INT", self.var})

    def signed_term(self):
        sign = 1
        while self.peek() in ("+", "-") and self.peek():
            if self.src[self.pos] == "-":
                sign = -sign
            self.pos += 1
        c, k = self.term()
        return sign * c, k

    def parse(self) -> UPoly:
        coeffs = {}
        if not self.peek():
            self.fail("empty polynomial", {"INT", self.var, "+", "-"})
        c, k = self.signed_term()
        coeffs[k] = coeffs.get(k, 0) + c
        while True:
            ch = self.peek()
            if not ch:
                break
            if ch not in "+-":
                self.fail("unexpected input", {"+", "-", "end of input"})
            c, k = self.signed_term()
            coeffs[k] = coeffs.get(k, 0) + c
        n = max(coeffs) + 1
        return UPoly([coeffs.get(i, 0) for i in range(n)], self.var)


def parse_poly(src: str, var: str = "t") -> UPoly:
    return _Parser(src, var).parse()


def format_poly(p: UPoly) -> str:
    if p.is_zero():
        return "0"
    parts = []
    for i in range(p.degree, -1, -1):
        c = p.coeffs[i]
        if not c:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if i == 0:
            body = format_rational(mag)
        else:
            mono = p.var if i == 1 else f"{p.var}^{i}"
            body = mono if mag == 1 else f"{format_rational(mag)}*{mono}"
        parts.append((sign, body))
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out
