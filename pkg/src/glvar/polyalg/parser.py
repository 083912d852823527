"""Recursive-descent parser for polynomial text.

Grammar::

    expr   := term (("+" | "-") term)*
    term   := unary (("*" | "/") unary)*
    unary  := ("-" | "+") unary | power
    power  := atom (("^" | "**") INTEGER)?
    atom   := NUMBER | IDENTIFIER | "(" expr ")"

Division is only allowed by non-zero constants, so ``1/2*x`` and ``x/3`` parse
but ``x/y`` does not.
"""

import re
from typing import NamedTuple

from glvar.polyalg.exceptions import PolynomialSyntaxError, UnknownVariableError
from glvar.polyalg.polynomial import Polynomial, PolynomialRing

_TOKEN = re.compile(
    r"\s*(?:(?P<number>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>\*\*|[-+*/^()]))"
)


class Token(NamedTuple):
    kind: str
    text: str
    position: int


def tokenize(text: str) -> list[Token]:
    """Split polynomial text into tokens, ending with an ``end`` token."""
    tokens: list[Token] = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        match = _TOKEN.match(text, pos)
        if match is None:
            offset = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise PolynomialSyntaxError(text, offset, f"unexpected character {text[offset]!r}")
        kind = match.lastgroup or "op"
        tokens.append(Token(kind, match.group(kind), match.start(kind)))
        pos = match.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, ring: PolynomialRing) -> None:
        self.text = text
        self.ring = ring
        self.tokens = tokenize(text)
        self.index = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.index]

    def advance(self) -> Token:
        token = self.tokens[self.index]
        self.index += 1
        return token

    def error(self, reason: str, token: Token | None = None) -> PolynomialSyntaxError:
        token = token or self.current
        return PolynomialSyntaxError(self.text, token.position, reason)

    def parse(self) -> Polynomial:
        if self.current.kind == "end":
            raise self.error("empty expression")
        result = self.expr()
        if self.current.kind != "end":
            raise self.error(f"unexpected {self.current.text!r}")
        return result

    def expr(self) -> Polynomial:
        result = self.term()
        while self.current.text in ("+", "-") and self.current.kind == "op":
            op = self.advance().text
            rhs = self.term()
            result = result + rhs if op == "+" else result - rhs
        return result

    def term(self) -> Polynomial:
        result = self.unary()
        while self.current.text in ("*", "/") and self.current.kind == "op":
            op_token = self.advance()
            rhs = self.unary()
            if op_token.text == "*":
                result = result * rhs
            elif not rhs.is_constant or rhs.is_zero:
                raise self.error("division by a non-constant or zero", op_token)
            else:
                result = result / rhs.constant_value()
        return result

    def unary(self) -> Polynomial:
        if self.current.kind == "op" and self.current.text in ("-", "+"):
            sign = self.advance().text
            operand = self.unary()
            return -operand if sign == "-" else operand
        return self.power()

    def power(self) -> Polynomial:
        base = self.atom()
        if self.current.kind == "op" and self.current.text in ("^", "**"):
            self.advance()
            token = self.current
            if token.kind != "number":
                raise self.error("expected a non-negative integer exponent")
            self.advance()
            return base ** int(token.text)
        return base

    def atom(self) -> Polynomial:
        token = self.current
        if token.kind == "number":
            self.advance()
            return self.ring.constant(int(token.text))
        if token.kind == "name":
            self.advance()
            if token.text not in self.ring.variables:
                raise UnknownVariableError(token.text, token.position)
            return self.ring.gen(token.text)
        if token.kind == "op" and token.text == "(":
            self.advance()
            inner = self.expr()
            if not (self.current.kind == "op" and self.current.text == ")"):
                raise self.error("expected ')'")
            self.advance()
            return inner
        if token.kind == "end":
            raise self.error("unexpected end of input")
        raise self.error(f"unexpected {token.text!r}")


def parse_poly(text: str, ring: PolynomialRing) -> Polynomial:
    """Parse ``text`` as a polynomial in ``ring``.

    Args:
        text: Polynomial in the grammar above
        ring: Ring whose variables may appear in ``text``

    Returns:
        The parsed polynomial

    Raises:
        PolynomialSyntaxError: If the text is malformed (carries the position)
        UnknownVariableError: If an identifier is not a ring variable

    Example:
        >>> R = PolynomialRing(("f", "g", "h"))
        >>> str(parse_poly("f*g - h^2", R))
        'f*g - h^2'

    """
    return _Parser(text, ring).parse()


def parse_polys(texts: list[str], ring: PolynomialRing) -> list[Polynomial]:
    return [parse_poly(text, ring) for text in texts]


def variables_in(text: str) -> list[str]:
    """Identifiers occurring in ``text``, in order of first appearance."""
    seen: list[str] = []
    for token in tokenize(text):
        if token.kind == "name" and token.text not in seen:
            seen.append(token.text)
    return seen
