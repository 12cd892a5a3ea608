"""
Text input for cubic forms.

A form is a sum of monomials with exact rational coefficients, for example
``x^3 + y^3 + z^3 + 5*w^3`` or ``X0^3 - 2/3*X1*X2*X3``. Variables are
``x, y, z, w`` or ``X0..X3``; factors are joined by ``*`` or written side by
side; powers use ``^``. There is no general expression evaluator.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .arith.forms import QQ, HomogeneousForm
from .errors import InputError, ParseError

TOKEN_RE = re.compile(
    r"""
    (?P<space>[ \t\r]+)
  | (?P<newline>\n)
  | (?P<number>[0-9]+)
  | (?P<var>X[0-9]|[a-z])
  | (?P<op>[-+*/^])
    """,
    re.VERBOSE,
)

VARIABLES = {"x": 0, "y": 1, "z": 2, "w": 3, "X0": 0, "X1": 1, "X2": 2, "X3": 3}


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    column: int


def tokenize(text: str) -> list[Token]:
    """Split form text into tokens with 1-based positions; raises ParseError."""
    tokens = []
    pos, line, column = 0, 1, 1
    while pos < len(text):
        match = TOKEN_RE.match(text, pos)
        if match is None:
            raise ParseError(f"unexpected character {text[pos]!r}", line, column)
        kind = match.lastgroup or ""
        if kind == "newline":
            line, column = line + 1, 1
        else:
            if kind != "space":
                tokens.append(Token(kind, match.group(), line, column))
            column += len(match.group())
        pos = match.end()
    tokens.append(Token("end", "", line, column))
    return tokens


class _Parser:
    def __init__(self, text: str, nvars: int) -> None:
        self.tokens = tokenize(text)
        self.index = 0
        self.nvars = nvars

    def peek(self) -> Token:
        return self.tokens[self.index]

    def advance(self) -> Token:
        token = self.tokens[self.index]
        self.index += 1
        return token

    def fail(self, message: str, token: Token | None = None) -> ParseError:
        token = token or self.peek()
        return ParseError(message, token.line, token.column)

    def form(self) -> dict[tuple[int, ...], Fraction]:
        coeffs: dict[tuple[int, ...], Fraction] = {}
        sign = 1
        if self.peek().text in ("+", "-"):
            sign = -1 if self.advance().text == "-" else 1
        while True:
            start = self.peek()
            coeff, exps = self.term()
            if sum(exps) != 3:
                raise self.fail(f"monomial of degree {sum(exps)} in a cubic form", start)
            coeffs[exps] = coeffs.get(exps, Fraction(0)) + sign * coeff
            token = self.peek()
            if token.kind == "end":
                return coeffs
            if token.text not in ("+", "-"):
                raise self.fail(f"expected '+' or '-', found {token.text!r}")
            sign = -1 if self.advance().text == "-" else 1

    def term(self) -> tuple[Fraction, tuple[int, ...]]:
        coeff = Fraction(1)
        exps = [0] * self.nvars
        has_coefficient = self.peek().kind == "number"
        if has_coefficient:
            coeff = self.number()
            if self.peek().text == "*":
                self.advance()
                if self.peek().kind != "var":
                    raise self.fail("expected a variable after '*'")
        factors = 0
        while self.peek().kind == "var":
            index, exponent = self.factor()
            exps[index] += exponent
            factors += 1
            if self.peek().text == "*":
                self.advance()
                if self.peek().kind != "var":
                    raise self.fail("expected a variable after '*'")
        if not factors and not has_coefficient:
            token = self.peek()
            found = "end of input" if token.kind == "end" else repr(token.text)
            raise self.fail(f"expected a term, found {found}")
        return coeff, tuple(exps)

    def number(self) -> Fraction:
        token = self.advance()
        value = Fraction(int(token.text))
        if self.peek().text == "/":
            self.advance()
            denominator = self.peek()
            if denominator.kind != "number":
                raise self.fail("expected a denominator after '/'")
            self.advance()
            if int(denominator.text) == 0:
                raise self.fail("zero denominator", denominator)
            value /= int(denominator.text)
        return value

    def factor(self) -> tuple[int, int]:
        token = self.advance()
        index = VARIABLES.get(token.text)
        if index is None or index >= self.nvars:
            raise self.fail(f"unknown variable {token.text!r}", token)
        exponent = 1
        if self.peek().text == "^":
            self.advance()
            power = self.peek()
            if power.kind != "number":
                raise self.fail("expected an exponent after '^'")
            self.advance()
            exponent = int(power.text)
            if exponent < 1:
                raise self.fail("exponents must be positive", power)
        return index, exponent


def parse_cubic_form(text: str, nvars: int = 4) -> HomogeneousForm:
    """
    Parse a cubic form over Q in ``nvars`` variables (4 for surfaces, 3 for
    plane cubics).

    Raises:
        ParseError: Malformed text, with its line and column
        InputError: A zero form, or a surface form that does not involve every
            variable (plane cubics may be degenerate)
    """
    if nvars not in (3, 4):
        raise ValueError("forms have 3 or 4 variables")
    coeffs = _Parser(text, nvars).form()
    coeffs = {e: c for e, c in coeffs.items() if c != 0}
    if not coeffs:
        raise InputError("the form is zero")
    form = HomogeneousForm.from_dict(QQ, nvars, 3, coeffs)
    missing = sorted(set(range(nvars)) - form.variables_used())
    if missing and nvars == 4:
        names = ", ".join("xyzw"[i] for i in missing)
        raise InputError(
            f"expected a homogeneous cubic in {nvars} variables; {names} does not occur"
        )
    return form
