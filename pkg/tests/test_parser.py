from fractions import Fraction

import pytest
from hypothesis import given
from pydantic import ValidationError

from app.api.algebra.parser import ParseContext, parse_expr, parse_poly, parse_rational
from app.api.algebra.rational_function import RationalFn
from app.api.core.errors import (
    ExprSyntaxError,
    InvalidExponentError,
    NonPolynomialError,
    UnknownIdentifierError,
    ZeroDivisionAlgebraError,
)
from app.api.models import CANONICAL_RING, JET_RING
from tests.conftest import XYZ, polys

CTX = ParseContext(ring=XYZ, params={"beta": 2})


def test_params_are_substituted_exactly():
    assert str(parse_poly("y*z + beta*y", CTX)) == "1*y*z + 2*y"
    assert parse_poly("1/(2*beta)*x", CTX) == XYZ.var("x") * Fraction(1, 4)


def test_precedence_and_unary_minus():
    x = XYZ.var("x")
    assert parse_poly("-x^2", CTX) == -(x * x)
    assert parse_poly("2 - 3 - 4", CTX) == XYZ.const(-5)
    assert parse_poly("x^2/4 - x*x/4", CTX).is_zero
    assert parse_poly("(x + 1)^2", CTX) == x * x + 2 * x + 1


def test_rational_expression():
    r = parse_expr("x/(y + 1)", CTX)
    assert r == RationalFn(XYZ.var("x"), XYZ.var("y") + 1)
    with pytest.raises(NonPolynomialError):
        parse_poly("x/(y + 1)", CTX)


def test_exactly_divisible_denominator_is_polynomial():
    x, y = XYZ.var("x"), XYZ.var("y")
    assert parse_poly("x*y/y", CTX) == x
    assert parse_poly("(x^2 - y^2)/(x - y)", CTX) == x + y
    with pytest.raises(NonPolynomialError):
        parse_poly("(x^2 + y^2)/(x - y)", CTX)


def test_jet_names_parse():
    ctx = ParseContext(ring=JET_RING, params={"beta": 1})
    delta = parse_poly("qdd2*qd2 + 2*beta^2*qdd2 + 4*beta^2*q1*qd1", ctx)
    assert delta.depends_on("qdd2")
    assert not delta.depends_on("qdd1")


def test_dangling_exponent_reports_offset():
    ctx = ParseContext(ring=CANONICAL_RING)
    with pytest.raises(ExprSyntaxError) as info:
        parse_expr("q1^", ctx)
    assert info.value.position == 3


def test_unknown_identifier():
    with pytest.raises(UnknownIdentifierError) as info:
        parse_expr("x + w", CTX)
    assert info.value.position == 4


@pytest.mark.parametrize("src", ["x^-1", "x^y", "x^(2)"])
def test_invalid_exponents(src):
    with pytest.raises(InvalidExponentError):
        parse_expr(src, CTX)


@pytest.mark.parametrize("src", ["", "   ", "x +", "(x + y", "x y", "0.5*x", "x # y", "x^2^3"])
def test_syntax_errors(src):
    with pytest.raises(ExprSyntaxError):
        parse_expr(src, CTX)


def test_division_by_identically_zero():
    with pytest.raises(ZeroDivisionAlgebraError):
        parse_expr("x/(y - y)", CTX)


def test_params_may_not_shadow_variables():
    with pytest.raises(ValidationError):
        ParseContext(ring=XYZ, params={"x": 1})


@given(polys())
def test_printed_polynomials_parse_back(p):
    assert parse_poly(str(p), CTX) == p


@pytest.mark.parametrize(
    "text,value",
    [("1", Fraction(1)), ("3/2", Fraction(3, 2)), ("-2", Fraction(-2)), (" 1/2 ", Fraction(1, 2))],
)
def test_parse_rational(text, value):
    assert parse_rational(text) == value


@pytest.mark.parametrize("text", ["abc", "1.5", "1/0", "", "2/"])
def test_parse_rational_rejects(text):
    with pytest.raises(ValueError):
        parse_rational(text)


def test_parse_rational_decimals_when_allowed():
    assert parse_rational("0.5", allow_decimal=True) == Fraction(1, 2)
    assert parse_rational("-1.25", allow_decimal=True) == Fraction(-5, 4)
