"""Parser for integrality queries such as ``(1 - 12x + 12x^2 + 8x^3)^(-1/6)``.

Grammar::

    expr     := group ("^" "(" rational ")")? | poly
    group    := "(" poly ")"
    poly     := term (("+" | "-") term)*
    term     := integer ("*"? xpow)? | xpow
    xpow     := "x" ("^" integer)?
    rational := "-"? integer ("/" integer)?

A leading sign on the first term is also accepted.  Whitespace is ignored.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .series import TruncatedSeries


class ParseError(ValueError):
    def __init__(self, message: str, column: int):
        super().__init__(f"column {column}: {message}")
        self.message = message
        self.column = column


class SemanticError(ValueError):
    """Well-formed input that does not describe a valid query."""


CRITERIA = ("theorem_main", "dd", "dd_extended", "oracle", "all")


@dataclass(frozen=True)
class Query:
    base_polynomial: tuple[tuple[int, int], ...]
    exponent: Fraction = Fraction(1)
    order: int = 50
    criterion: str = "theorem_main"
    output_format: str = "text"

    def __post_init__(self):
        if self.order < 1:
            raise SemanticError("order must be >= 1")
        if self.criterion not in CRITERIA:
            raise SemanticError(f"unknown criterion {self.criterion!r}")
        if self.output_format not in ("text", "json"):
            raise SemanticError(f"unknown output format {self.output_format!r}")
        if dict(self.base_polynomial).get(0, 0) != 1:
            raise SemanticError("constant term of the base polynomial must be 1")

    @property
    def polynomial(self) -> TruncatedSeries:
        deg = max(d for d, _ in self.base_polynomial)
        cs = [0] * (deg + 1)
        for d, c in self.base_polynomial:
            cs[d] = c
        return TruncatedSeries.polynomial(cs)


class _Parser:
    def __init__(self, src: str):
        self.src = src
        self.pos = 0

    def error(self, message, pos=None):
        raise ParseError(message, (self.pos if pos is None else pos) + 1)

    def skip(self):
        while self.pos < len(self.src) and self.src[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.src[self.pos] if self.pos < len(self.src) else ""

    def eat(self, ch: str) -> bool:
        if self.peek() == ch:
            self.pos += 1
            return True
        return False

    def expect(self, ch: str):
        if not self.eat(ch):
            found = self.peek()
            self.error(f"expected {ch!r}, found {found!r}" if found else f"expected {ch!r} before end of input")

    def integer(self) -> int:
        self.skip()
        start = self.pos
        while self.pos < len(self.src) and self.src[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            found = self.peek()
            self.error(f"expected an integer, found {found!r}" if found else "expected an integer before end of input")
        return int(self.src[start : self.pos])

    def xpow(self) -> int:
        self.expect("x")
        return self.integer() if self.eat("^") else 1

    def term(self) -> tuple[int, int]:
        ch = self.peek()
        if ch == "x":
            return self.xpow(), 1
        if not ch.isdigit():
            self.error(f"expected a term, found {ch!r}" if ch else "expected a term before end of input")
        c = self.integer()
        if self.eat("*"):
            return self.xpow(), c
        if self.peek() == "x":
            return self.xpow(), c
        return 0, c

    def poly(self) -> dict[int, int]:
        coeffs: dict[int, int] = {}
        sign = 1
        if self.eat("-"):
            sign = -1
        else:
            self.eat("+")
        while True:
            d, c = self.term()
            coeffs[d] = coeffs.get(d, 0) + sign * c
            if self.eat("+"):
                sign = 1
            elif self.eat("-"):
                sign = -1
            else:
                return coeffs

    def rational(self) -> Fraction:
        neg = self.eat("-")
        num = self.integer()
        den = 1
        if self.eat("/"):
            self.skip()
            at = self.pos
            den = self.integer()
            if den == 0:
                self.error("zero denominator", at)
        q = Fraction(num, den)
        return -q if neg else q

    def expr(self) -> tuple[dict[int, int], Fraction]:
        if self.peek() == "(":
            open_at = self.pos
            self.pos += 1
            coeffs = self.poly()
            if not self.eat(")"):
                found = self.peek()
                if found:
                    self.error(f"expected ')', found {found!r}")
                self.error(f"unclosed parenthesis opened at column {open_at + 1}")
            lam = Fraction(1)
            if self.eat("^"):
                self.expect("(")
                lam = self.rational()
                self.expect(")")
            return coeffs, lam
        return self.poly(), Fraction(1)

    def parse(self):
        result = self.expr()
        if self.peek():
            self.error(f"unexpected {self.peek()!r}")
        return result


def parse_expression(src: str, **options) -> Query:
    """Parse ``src`` into a :class:`Query`; ``options`` fill the remaining fields."""
    coeffs, lam = _Parser(src).parse()
    terms = tuple(sorted((d, c) for d, c in coeffs.items() if c != 0 or d == 0))
    if not any(d == 0 for d, _ in terms):
        terms = ((0, 0),) + terms
    if dict(terms)[0] != 1:
        raise SemanticError(f"constant term must be 1, got {dict(terms)[0]}")
    return Query(terms, lam, **options)


def render_polynomial(terms) -> str:
    parts = []
    for d, c in sorted(terms):
        if c == 0:
            continue
        mono = "" if d == 0 else ("x" if d == 1 else f"x^{d}")
        mag = abs(c)
        body = mono if (d and mag == 1) else f"{mag}{mono}"
        parts.append(("-" if c < 0 else "+", body))
    if not parts:
        return "0"
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    return out + "".join(f" {s} {b}" for s, b in parts[1:])


def render(query: Query) -> str:
    """Canonical source text; ``parse_expression(render(q))`` reproduces q's polynomial and exponent."""
    lam = query.exponent
    lam_s = str(lam.numerator) if lam.denominator == 1 else f"{lam.numerator}/{lam.denominator}"
    return f"({render_polynomial(query.base_polynomial)})^({lam_s})"

