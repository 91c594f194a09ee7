from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from app.api.algebra.polynomial import (
    MultiPoly,
    Ring,
    poly_arith,
    poly_diff,
    poly_eval,
    poly_exact_div,
    poly_subst,
)
from app.api.core.errors import (
    ArityMismatchError,
    MissingImageError,
    RingMismatchError,
    UnknownVariableError,
)
from tests.conftest import XYZ, fractions, polys

points = st.tuples(fractions, fractions, fractions)


@given(polys(), polys(), polys())
def test_ring_laws(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert (a - a).is_zero


@given(polys(), polys())
def test_leibniz_rule(a, b):
    for name in XYZ.names:
        assert (a * b).diff(name) == a.diff(name) * b + a * b.diff(name)


@given(polys())
def test_mixed_partials_commute(a):
    assert a.diff("x").diff("y") == a.diff("y").diff("x")


@given(polys(), polys(), points)
def test_evaluation_is_a_homomorphism(a, b, point):
    assert (a * b).evaluate(point) == a.evaluate(point) * b.evaluate(point)
    assert (a + b).evaluate(point) == a.evaluate(point) + b.evaluate(point)


@settings(max_examples=50)
@given(polys(max_terms=3, max_exp=2), polys(max_terms=3, max_exp=1), points)
def test_substitution_agrees_with_evaluation(a, image, point):
    x, y, z = XYZ.gens()
    composed = a.substitute({"x": image, "y": y, "z": z})
    inner = image.evaluate(point)
    assert composed.evaluate(point) == a.evaluate((inner, point[1], point[2]))


@given(polys(), polys())
def test_exact_division_recovers_factor(a, b):
    if b.is_zero:
        return
    assert (a * b).exact_div(b) == a


def test_exact_division_detects_non_divisor():
    x, y, _ = XYZ.gens()
    assert (x * x + y).exact_div(x) is None


def test_canonical_text():
    x, y, z = XYZ.gens()
    assert str((x + y) * (x - y)) == "1*x^2 + -1*y^2"
    assert str(XYZ.zero()) == "0"
    assert str(x * Fraction(1, 2) - 3) == "1/2*x + -3"


def test_zero_coefficients_are_dropped():
    p = MultiPoly(XYZ, {(1, 0, 0): 2, (0, 1, 0): 0})
    assert p.terms == {(1, 0, 0): Fraction(2)}
    assert (p - p).terms == {}


def test_degree_and_dependence():
    x, y, z = XYZ.gens()
    p = x**3 * y + z
    assert p.total_degree == 4
    assert p.degree_in("x") == 3
    assert p.depends_on("z")
    assert not (x * z).depends_on("y")
    assert p.leading_term() == ((3, 1, 0), Fraction(1))


def test_ring_mismatch_is_rejected():
    other = Ring(("q1", "q2"))
    with pytest.raises(RingMismatchError):
        XYZ.var("x") + other.var("q1")
    with pytest.raises(RingMismatchError):
        poly_arith(XYZ.var("x"), other.var("q1"), "mul")


def test_unknown_variable():
    with pytest.raises(UnknownVariableError):
        XYZ.var("w")
    with pytest.raises(UnknownVariableError):
        poly_diff(XYZ.var("x"), "w")


def test_evaluate_arity_mismatch():
    with pytest.raises(ArityMismatchError):
        poly_eval(XYZ.var("x"), (1, 2))


def test_float_evaluation():
    x, y, z = XYZ.gens()
    assert poly_eval(x * y + z, (0.5, 2.0, 1.0)) == pytest.approx(2.0)


def test_substitute_into_another_ring():
    canonical = Ring(("q1", "q2", "p1", "p2"))
    q1, q2, p1, p2 = canonical.gens()
    z = XYZ.var("z")
    image = {
        "x": q1,
        "y": p1,
        "z": p1 * p1 * Fraction(1, 4) - q1 * q1 * Fraction(1, 4) + p2,
    }
    assert str(z.substitute(image)) == "-1/4*q1^2 + 1/4*p1^2 + 1*p2"
    assert poly_subst(XYZ.var("x"), image) == q1


def test_substitute_missing_image():
    with pytest.raises(MissingImageError):
        XYZ.var("x").substitute({"x": XYZ.var("y")})


def test_embed_into_larger_ring():
    extended = Ring(("t", "x", "y", "z"))
    p = XYZ.var("x") * XYZ.var("z")
    lifted = p.embed(extended)
    assert lifted.ring == extended
    assert lifted == extended.var("x") * extended.var("z")


def test_poly_exact_div_functional_form():
    x, y, _ = XYZ.gens()
    assert poly_exact_div(x * x - y * y, x + y) == x - y


def test_power():
    x, y, _ = XYZ.gens()
    assert (x + y) ** 2 == x * x + 2 * x * y + y * y
    with pytest.raises(ValueError):
        _ = x**-1
