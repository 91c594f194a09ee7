"""
Shared fixtures and hypothesis strategies.
"""

from fractions import Fraction

import pytest
from hypothesis import strategies as st

from app.api.algebra.polynomial import MultiPoly, Ring

XYZ = Ring(("x", "y", "z"))

BETAS = [Fraction(1), Fraction(1, 2), Fraction(-2)]

fractions = st.fractions(min_value=-5, max_value=5, max_denominator=6)


@st.composite
def polys(draw, ring: Ring = XYZ, max_terms: int = 4, max_exp: int = 3) -> MultiPoly:
    """Small sparse polynomials with rational coefficients."""
    exponents = st.tuples(*[st.integers(0, max_exp)] * ring.arity)
    terms = draw(st.dictionaries(exponents, fractions, max_size=max_terms))
    return MultiPoly(ring, terms)


@pytest.fixture
def xyz() -> Ring:
    return XYZ


@pytest.fixture(params=BETAS, ids=lambda b: f"beta={b}")
def beta(request) -> Fraction:
    return request.param
