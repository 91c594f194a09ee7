"""
Recursive-descent parser for polynomial and rational expressions.

Grammar (whitespace ignored):

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := '-' unary | power
    power  := atom ('^' INTEGER)?
    atom   := INTEGER | IDENT | '(' expr ')'

Identifiers are ring variables or bound rational parameters. Decimal literals and
implicit multiplication are rejected so that every coefficient stays exact.
"""

import re
from fractions import Fraction
from typing import Dict, Iterator, List, NamedTuple

from pydantic import BaseModel, ConfigDict, field_validator, model_validator

from app.api.algebra.polynomial import MultiPoly, Ring
from app.api.algebra.rational_function import RationalFn
from app.api.core.errors import (
    ExprSyntaxError,
    InvalidExponentError,
    NonPolynomialError,
    UnknownIdentifierError,
    ZeroDivisionAlgebraError,
)

_TOKEN = re.compile(
    r"\s*(?:(?P<decimal>\d+\.\d*|\.\d+)|(?P<int>\d+)|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)"
    r"|(?P<op>[-+*/^()])|(?P<bad>\S))"
)


class ParseContext(BaseModel):
    """
    Variable ring plus bound rational parameters for parsing.

    Attributes:
        ring (Ring): Ring whose variable names may appear in expressions.
        params (Dict[str, Fraction]): Parameter values substituted at parse time.

    Examples:
        >>> ctx = ParseContext(ring=Ring(("x", "y", "z")), params={"beta": 2})
        >>> print(parse_poly("y*z + beta*y", ctx))
        1*y*z + 2*y
    """

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    ring: Ring
    params: Dict[str, Fraction] = {}

    @field_validator("params", mode="before")
    @classmethod
    def validate_params(cls, v: Dict[str, object]) -> Dict[str, Fraction]:
        """Coerce parameter values to exact fractions."""
        return {name: Fraction(value) for name, value in (v or {}).items()}

    @model_validator(mode="after")
    def validate_disjoint(self) -> "ParseContext":
        """Ensure parameter names do not shadow ring variables."""
        clash = sorted(set(self.params) & set(self.ring.names))
        if clash:
            raise ValueError(f"Parameters shadow ring variables: {', '.join(clash)}")
        return self


class _Token(NamedTuple):
    kind: str
    text: str
    position: int


def _tokenize(src: str) -> Iterator[_Token]:
    position = 0
    while True:
        match = _TOKEN.match(src, position)
        if not match or match.lastgroup is None:
            break
        kind = match.lastgroup
        start = match.start(kind)
        text = match.group(kind)
        if kind == "decimal":
            raise ExprSyntaxError("Decimal literals are not supported; use fractions", start)
        if kind == "bad":
            raise ExprSyntaxError(f"Unexpected character '{text}'", start)
        yield _Token(kind, text, start)
        position = match.end()
    yield _Token("end", "", len(src))


class _Parser:
    def __init__(self, src: str, ctx: ParseContext):
        self.ctx = ctx
        self.tokens: List[_Token] = list(_tokenize(src))
        self.pos = 0

    @property
    def token(self) -> _Token:
        return self.tokens[self.pos]

    def advance(self) -> _Token:
        token = self.tokens[self.pos]
        self.pos += 1
        return token

    def at(self, text: str) -> bool:
        return self.token.kind == "op" and self.token.text == text

    def parse(self) -> RationalFn:
        value = self.expr()
        if self.token.kind != "end":
            raise ExprSyntaxError(f"Unexpected '{self.token.text}'", self.token.position)
        return value

    def expr(self) -> RationalFn:
        left = self.term()
        while self.at("+") or self.at("-"):
            op = self.advance().text
            right = self.term()
            left = left + right if op == "+" else left - right
        return left

    def term(self) -> RationalFn:
        left = self.unary()
        while self.at("*") or self.at("/"):
            op = self.advance()
            right = self.unary()
            if op.text == "*":
                left = left * right
            elif right.is_zero:
                raise ZeroDivisionAlgebraError(
                    f"Division by an expression that is identically zero at offset {op.position}",
                    field="expression",
                )
            else:
                left = left / right
        return left

    def unary(self) -> RationalFn:
        if self.at("-"):
            self.advance()
            return -self.unary()
        return self.power()

    def power(self) -> RationalFn:
        base = self.atom()
        if not self.at("^"):
            return base
        self.advance()
        token = self.token
        if token.kind == "end":
            raise ExprSyntaxError("Expected an integer exponent", token.position)
        if token.kind != "int":
            raise InvalidExponentError(
                "Exponent must be a nonnegative integer literal", token.position
            )
        self.advance()
        if self.at("^"):
            raise ExprSyntaxError("Chained exponents need parentheses", self.token.position)
        return base ** int(token.text)

    def atom(self) -> RationalFn:
        token = self.token
        ring = self.ctx.ring
        if token.kind == "int":
            self.advance()
            return RationalFn(ring.const(int(token.text)))
        if token.kind == "ident":
            self.advance()
            if token.text in ring:
                return RationalFn(ring.var(token.text))
            if token.text in self.ctx.params:
                return RationalFn(ring.const(self.ctx.params[token.text]))
            raise UnknownIdentifierError(f"Unknown identifier '{token.text}'", token.position)
        if self.at("("):
            self.advance()
            value = self.expr()
            if not self.at(")"):
                raise ExprSyntaxError("Expected ')'", self.token.position)
            self.advance()
            return value
        if token.kind == "end":
            raise ExprSyntaxError("Unexpected end of expression", token.position)
        raise ExprSyntaxError(f"Unexpected '{token.text}'", token.position)


def parse_expr(src: str, ctx: ParseContext) -> RationalFn:
    """
    Parse text into a rational function over ``ctx.ring``.

    Args:
        src (str): Expression text, e.g. ``"x^2/4 - y^2/4"``.
        ctx (ParseContext): Ring and bound parameters.

    Returns:
        RationalFn: The exact value; constant denominators are folded into coefficients.

    Raises:
        ExprSyntaxError: Malformed input, with the offending offset.
        UnknownIdentifierError: Name that is neither a variable nor a parameter.
        InvalidExponentError: Exponent that is not a nonnegative integer literal.
        ZeroDivisionAlgebraError: Division by an identically-zero expression.
    """
    if not src or not src.strip():
        raise ExprSyntaxError("Empty expression", 0)
    return _Parser(src, ctx).parse()


def parse_poly(src: str, ctx: ParseContext) -> MultiPoly:
    """
    Parse text that must denote a polynomial.

    A non-constant denominator is accepted when it divides the numerator exactly,
    so ``"x*y/y"`` parses to ``x``.

    Raises:
        NonPolynomialError: If the denominator does not divide the numerator.
    """
    value = parse_expr(src, ctx)
    if not value.is_polynomial:
        quotient = value.num.exact_div(value.den)
        if quotient is not None:
            return quotient
        raise NonPolynomialError(
            f"Expression '{src}' has non-constant denominator {value.den}",
            field="expression",
        )
    return value.num


def parse_rational(text: str, allow_decimal: bool = False) -> Fraction:
    """
    Parse a rational literal such as ``"1"``, ``"3/2"`` or ``"-2"``.

    Args:
        text (str): Literal text.
        allow_decimal (bool): Also accept exact decimals like ``"0.5"``.

    Raises:
        ValueError: If the text is not a rational literal.
    """
    pattern = r"[+-]?\d+(/\d+)?" if not allow_decimal else r"[+-]?(\d+(/\d+)?|\d*\.\d+|\d+\.\d*)"
    cleaned = text.strip()
    if not re.fullmatch(pattern, cleaned):
        raise ValueError(f"'{text}' is not a rational number")
    try:
        return Fraction(cleaned)
    except ZeroDivisionError:
        raise ValueError(f"'{text}' has a zero denominator") from None


