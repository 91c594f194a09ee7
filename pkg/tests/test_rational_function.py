from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from app.api.algebra.polynomial import Ring
from app.api.algebra.rational_function import (
    RationalFn,
    ratfn_arith,
    ratfn_cancel_factor,
    ratfn_diff,
    ratfn_is_zero,
    ratfn_reduce,
    ratfn_subst,
    substitute_rational,
)
from app.api.core.errors import RingMismatchError, ZeroDivisionAlgebraError
from tests.conftest import XYZ, fractions, polys

x, y, z = XYZ.gens()


def test_cancellation_to_zero():
    r = RationalFn(x, y) + RationalFn(-x, y)
    assert r.is_zero
    assert ratfn_is_zero(ratfn_arith(RationalFn(x, y), RationalFn(x, y), "sub"))


def test_equality_is_cross_multiplication():
    assert RationalFn(x * y, y * y) == RationalFn(x, y)
    assert RationalFn(x * 2, z * 2) == RationalFn(x, z)


def test_constant_denominator_is_folded():
    r = RationalFn(x, XYZ.const(4))
    assert r.is_polynomial
    assert r.num == x * Fraction(1, 4)
    assert str(r) == "1/4*x"


def test_zero_denominator_rejected():
    with pytest.raises(ZeroDivisionAlgebraError):
        RationalFn(x, XYZ.zero())
    with pytest.raises(ZeroDivisionAlgebraError):
        RationalFn(x) / RationalFn(XYZ.zero())


def test_ring_mismatch():
    other = Ring(("a",))
    with pytest.raises(RingMismatchError):
        RationalFn(x, other.var("a"))


def test_quotient_rule():
    r = RationalFn(x, y)
    assert ratfn_diff(r, "y") == RationalFn(-x, y * y)
    assert r.diff("x") == RationalFn(XYZ.one(), y)


@given(polys(max_terms=3, max_exp=2), polys(max_terms=3, max_exp=2))
def test_product_rule_for_quotients(a, b):
    r = RationalFn(a, y + 1)
    s = RationalFn(b, x + 2)
    assert (r * s).diff("x") == r.diff("x") * s + r * s.diff("x")


def test_cancel_factor_and_reduce():
    factor = y + 2
    r = RationalFn(x * factor * factor, z * factor * factor * factor)
    cancelled = ratfn_cancel_factor(r, factor)
    assert cancelled.num == x
    assert cancelled.den == z * factor
    assert cancelled == r


def test_reduced_removes_common_monomial_and_normalizes():
    r = RationalFn(x * x * y.scale(3), x * y * (z + 1).scale(6))
    reduced = ratfn_reduce(r)
    assert reduced == r
    assert reduced.num == x * Fraction(1, 2)
    assert reduced.den == z + 1


def test_reduced_turns_exact_quotients_into_polynomials():
    r = RationalFn(x * x - y * y, x + y)
    assert r.reduced().is_polynomial
    assert r.reduced().num == x - y


def test_substitute_rational_matches_direct_evaluation():
    poly = x * x * y + z
    images = {"x": RationalFn(y, z + 1)}
    result = substitute_rational(poly, images)
    point = (Fraction(1), Fraction(2), Fraction(3))
    expected = (Fraction(2) / 4) ** 2 * 2 + 3
    assert result.evaluate(point) == expected


def test_ratfn_subst_both_parts():
    r = RationalFn(x, y + 1)
    result = ratfn_subst(r, {"y": RationalFn(z, x)})
    assert result == RationalFn(x * x, z + x)


def test_compose_into_another_ring():
    target = Ring(("u", "v"))
    u, v = target.gens()
    r = RationalFn(x + y, z)
    composed = r.compose({"x": u, "y": v, "z": u * v}, target)
    assert composed == RationalFn(u + v, u * v)


def test_evaluate_raises_at_pole():
    with pytest.raises(ZeroDivisionAlgebraError):
        RationalFn(x, y).evaluate((1, 0, 0))


rational_points = st.lists(st.tuples(fractions, fractions, fractions), min_size=100, max_size=100)


@settings(max_examples=20, deadline=None)
@given(
    polys(max_terms=3, max_exp=2),
    polys(max_terms=2, max_exp=1),
    polys(max_terms=2, max_exp=1),
    rational_points,
)
def test_zero_test_agrees_with_evaluation(a, b, c, points):
    assume(not b.is_zero and not c.is_zero)
    left, right = RationalFn(a, b), RationalFn(a * c, b * c)
    difference = left - right
    assert ratfn_is_zero(difference)
    for point in points:
        if (b * c).evaluate(point) == 0:
            continue
        assert left.evaluate(point) == right.evaluate(point)
        assert difference.evaluate(point) == 0
