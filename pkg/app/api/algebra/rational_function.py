"""
Quotients of exact polynomials.

A RationalFn is ``num / den`` over one ring with ``den`` never the zero polynomial.
No polynomial gcd is taken; the zero test only looks at the numerator. A light
normalization (``reduced``) is available and applied automatically when
``RATFN_REDUCE`` is enabled in settings.
"""

import operator
from fractions import Fraction
from typing import Dict, Mapping, Sequence, Tuple, Union

from app.api.algebra.polynomial import Exponent, MultiPoly, Ring, Scalar
from app.api.core.config import get_settings
from app.api.core.errors import RingMismatchError, ZeroDivisionAlgebraError

settings = get_settings()

Operand = Union["RationalFn", MultiPoly, int, Fraction]


def _constant_den(num: MultiPoly, den: MultiPoly) -> Tuple[MultiPoly, MultiPoly]:
    if den.is_constant:
        return num.scale(1 / den.constant_term), den.ring.one()
    return num, den


class RationalFn:
    """
    Immutable rational function ``num / den``.

    Attributes:
        num (MultiPoly): Numerator.
        den (MultiPoly): Denominator, never identically zero; folded to 1 when constant.

    Examples:
        >>> x, y = Ring(("x", "y")).gens()
        >>> r = RationalFn(x, y) + RationalFn(-x, y)
        >>> r.is_zero
        True
    """

    __slots__ = ("num", "den")

    def __init__(self, num: MultiPoly, den: Union[MultiPoly, None] = None):
        if den is None:
            den = num.ring.one()
        if num.ring != den.ring:
            raise RingMismatchError(
                f"Numerator over {num.ring!r}, denominator over {den.ring!r}", field="ring"
            )
        if den.is_zero:
            raise ZeroDivisionAlgebraError("Denominator is the zero polynomial")
        self.num, self.den = _constant_den(num, den)

    @classmethod
    def _make(cls, num: MultiPoly, den: MultiPoly) -> "RationalFn":
        result = cls(num, den)
        return result.reduced() if settings.RATFN_REDUCE else result

    @property
    def ring(self) -> Ring:
        return self.num.ring

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    @property
    def is_polynomial(self) -> bool:
        return self.den.is_constant

    def _coerce(self, other: object) -> "RationalFn":
        if isinstance(other, RationalFn):
            if other.ring != self.ring:
                raise RingMismatchError(
                    f"Ring mismatch: {self.ring!r} vs {other.ring!r}", field="ring"
                )
            return other
        if isinstance(other, MultiPoly):
            return self._coerce(RationalFn(other))
        if isinstance(other, (int, Fraction)):
            return RationalFn(self.ring.const(other))
        return NotImplemented

    def __add__(self, other: object) -> "RationalFn":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.den == other.den:
            return RationalFn._make(self.num + other.num, self.den)
        return RationalFn._make(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    __radd__ = __add__

    def __neg__(self) -> "RationalFn":
        return RationalFn(-self.num, self.den)

    def __sub__(self, other: object) -> "RationalFn":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: object) -> "RationalFn":
        return (-self) + other

    def __mul__(self, other: object) -> "RationalFn":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RationalFn._make(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> "RationalFn":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero:
            raise ZeroDivisionAlgebraError("Division by the zero function")
        return RationalFn._make(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other: object) -> "RationalFn":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __pow__(self, exponent: int) -> "RationalFn":
        return RationalFn(self.num**exponent, self.den**exponent)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, MultiPoly):
            if other.ring != self.ring:
                return False
            other = RationalFn(other)
        elif isinstance(other, (int, Fraction)):
            other = RationalFn(self.ring.const(other))
        if not isinstance(other, RationalFn):
            return NotImplemented
        return self.ring == other.ring and self.num * other.den == other.num * self.den

    __hash__ = None

    def diff(self, name: str) -> "RationalFn":
        """Quotient rule; keeps the denominator when it does not involve ``name``."""
        d_den = self.den.diff(name)
        if d_den.is_zero:
            return RationalFn._make(self.num.diff(name), self.den)
        return RationalFn._make(
            self.num.diff(name) * self.den - self.num * d_den, self.den * self.den
        )

    def evaluate(self, point: Sequence[Union[Scalar, float]]) -> Union[Fraction, float]:
        den = self.den.evaluate(point)
        if not den:
            raise ZeroDivisionAlgebraError(f"Denominator vanishes at {tuple(point)}")
        return self.num.evaluate(point) / den

    def substitute(self, images: Mapping[str, "RationalFn"]) -> "RationalFn":
        """Simultaneously replace the named variables by rational functions (same ring)."""
        num = substitute_rational(self.num, images)
        den = substitute_rational(self.den, images)
        return num / den

    def compose(
        self, images: Union[Sequence[MultiPoly], Mapping[str, MultiPoly]], target: Ring
    ) -> "RationalFn":
        """Compose numerator and denominator with polynomial images into ``target``."""
        den = self.den.substitute(images, target)
        if den.is_zero:
            raise ZeroDivisionAlgebraError("Denominator vanishes identically after composition")
        return RationalFn._make(self.num.substitute(images, target), den)

    def embed(self, target: Ring) -> "RationalFn":
        return RationalFn(self.num.embed(target), self.den.embed(target))

    def cancel_factor(self, factor: MultiPoly) -> "RationalFn":
        """Divide numerator and denominator by ``factor`` while it divides both exactly."""
        num, den = self.num, self.den
        if factor.is_constant or num.is_zero:
            return self
        while True:
            q_num = num.exact_div(factor)
            q_den = den.exact_div(factor) if q_num is not None else None
            if q_num is None or q_den is None:
                return RationalFn(num, den)
            num, den = q_num, q_den

    def reduced(self) -> "RationalFn":
        """
        Light normalization without a gcd.

        Cancels the common monomial factor, divides the denominator into the
        numerator when that is exact, and makes the denominator's leading
        coefficient 1.
        """
        if self.num.is_zero:
            return RationalFn(self.ring.zero())
        arity = self.ring.arity
        shift = [
            min(exps[i] for exps in list(self.num.terms) + list(self.den.terms))
            for i in range(arity)
        ]
        num, den = self.num, self.den
        if any(shift):
            num = _shift_down(num, shift)
            den = _shift_down(den, shift)
        quotient = num.exact_div(den)
        if quotient is not None:
            return RationalFn(quotient)
        _, lead = den.leading_term()
        return RationalFn(num.scale(1 / lead), den.scale(1 / lead))

    def __str__(self) -> str:
        if self.den.is_constant:
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self) -> str:
        return f"RationalFn({self.ring!r}, '{self}')"


def _shift_down(poly: MultiPoly, shift: Sequence[int]) -> MultiPoly:
    return MultiPoly(
        poly.ring, {tuple(map(operator.sub, exps, shift)): c for exps, c in poly.terms.items()}
    )


def substitute_rational(poly: MultiPoly, images: Mapping[str, RationalFn]) -> RationalFn:
    """
    Replace named variables of ``poly`` by rational functions over the same ring.

    Uses the common denominator ``prod(d_v ** deg_v(poly))``, so no cross-multiplied
    sums are formed term by term.
    """
    ring = poly.ring
    slots = []
    for name, image in images.items():
        if image.ring != ring:
            raise RingMismatchError(
                f"Image for '{name}' over {image.ring!r}, expected {ring!r}", field="images"
            )
        i = ring.index(name)
        degree = poly.degree_in(name)
        if degree:
            slots.append((i, degree, image))
    if not slots:
        return RationalFn(poly)

    # Group terms by their exponents in the substituted variables.
    groups: Dict[Tuple[int, ...], Dict[Exponent, Fraction]] = {}
    for exps, coeff in poly.terms.items():
        pattern = tuple(exps[i] for i, _, _ in slots)
        rest = list(exps)
        for i, _, _ in slots:
            rest[i] = 0
        groups.setdefault(pattern, {})[tuple(rest)] = coeff

    num_powers = [[image.num**k for k in range(degree + 1)] for _, degree, image in slots]
    den_powers = [[image.den**k for k in range(degree + 1)] for _, degree, image in slots]

    numerator = ring.zero()
    for pattern, rest_terms in groups.items():
        term = MultiPoly(ring, rest_terms)
        for s, a in enumerate(pattern):
            degree = slots[s][1]
            term = term * num_powers[s][a] * den_powers[s][degree - a]
        numerator = numerator + term
    denominator = ring.one()
    for s, (_, degree, _) in enumerate(slots):
        denominator = denominator * den_powers[s][degree]
    return RationalFn._make(numerator, denominator)


def ratfn_arith(a: RationalFn, b: RationalFn, op: str) -> RationalFn:
    """
    Exact ``add``, ``sub``, ``mul`` or ``div`` of two rational functions.

    Raises:
        RingMismatchError: If the rings differ.
        ZeroDivisionAlgebraError: For ``div`` by the zero function.
    """
    ops = {
        "add": operator.add,
        "sub": operator.sub,
        "mul": operator.mul,
        "div": operator.truediv,
    }
    if op not in ops:
        raise ValueError(f"Unsupported rational-function operation '{op}'")
    return ops[op](a, b)


def ratfn_diff(r: RationalFn, name: str) -> RationalFn:
    return r.diff(name)


def ratfn_is_zero(r: RationalFn) -> bool:
    return r.is_zero


def ratfn_subst(r: RationalFn, images: Mapping[str, RationalFn]) -> RationalFn:
    return r.substitute(images)


def ratfn_cancel_factor(r: RationalFn, factor: MultiPoly) -> RationalFn:
    return r.cancel_factor(factor)


def ratfn_reduce(r: RationalFn) -> RationalFn:
    return r.reduced()
