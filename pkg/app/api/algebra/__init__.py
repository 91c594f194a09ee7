"""
Exact polynomial and rational-function algebra plus the expression parser.
"""

from app.api.algebra.parser import ParseContext, parse_expr, parse_poly, parse_rational
from app.api.algebra.polynomial import (
    MultiPoly,
    Rational,
    Ring,
    poly_arith,
    poly_diff,
    poly_eval,
    poly_exact_div,
    poly_subst,
)
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

__all__ = [
    "MultiPoly",
    "ParseContext",
    "Rational",
    "RationalFn",
    "Ring",
    "parse_expr",
    "parse_poly",
    "parse_rational",
    "poly_arith",
    "poly_diff",
    "poly_eval",
    "poly_exact_div",
    "poly_subst",
    "ratfn_arith",
    "ratfn_cancel_factor",
    "ratfn_diff",
    "ratfn_is_zero",
    "ratfn_reduce",
    "ratfn_subst",
    "substitute_rational",
]
