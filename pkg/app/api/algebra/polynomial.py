"""
Exact sparse multivariate polynomials over the rationals.

Defines:
- Ring: an ordered tuple of variable names
- MultiPoly: a map from exponent vectors to nonzero ``Fraction`` coefficients
- poly_arith, poly_diff, poly_eval, poly_subst, poly_exact_div: functional entry points

Terms are printed and iterated in graded-lexicographic order (descending), so the
canonical text form is deterministic and round-trips through the expression parser.
"""

import operator
from fractions import Fraction
from types import MappingProxyType
from typing import Dict, Iterable, Iterator, Mapping, Optional, Sequence, Tuple, Union

from app.api.core.errors import (
    ArityMismatchError,
    MissingImageError,
    RingMismatchError,
    UnknownVariableError,
    ZeroDivisionAlgebraError,
)

Rational = Fraction
Exponent = Tuple[int, ...]
Scalar = Union[int, Fraction]


class Ring:
    """
    Ordered set of variable names hosting polynomials.

    Attributes:
        names (Tuple[str, ...]): Variable names, unique, fixed for the ring's lifetime.

    Examples:
        >>> ring = Ring(("x", "y", "z"))
        >>> x, y, z = ring.gens()
        >>> print(x * y - y * x)
        0
    """

    __slots__ = ("names", "_index")

    def __init__(self, names: Iterable[str]):
        names = tuple(names)
        if not names:
            raise ValueError("A ring needs at least one variable")
        if len(set(names)) != len(names):
            raise ValueError(f"Duplicate variable names in {names}")
        self.names = names
        self._index = {name: i for i, name in enumerate(names)}

    @property
    def arity(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise UnknownVariableError(
                f"Unknown variable '{name}' for ring {self.names}", field="variable"
            ) from None

    def __contains__(self, name: object) -> bool:
        return name in self._index

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Ring) and self.names == other.names

    def __hash__(self) -> int:
        return hash(self.names)

    def __repr__(self) -> str:
        return f"Ring({', '.join(self.names)})"

    def zero(self) -> "MultiPoly":
        return MultiPoly._raw(self, {})

    def one(self) -> "MultiPoly":
        return self.const(1)

    def const(self, value: Scalar) -> "MultiPoly":
        value = Fraction(value)
        if not value:
            return self.zero()
        return MultiPoly._raw(self, {(0,) * self.arity: value})

    def var(self, name: str) -> "MultiPoly":
        exps = [0] * self.arity
        exps[self.index(name)] = 1
        return MultiPoly._raw(self, {tuple(exps): Fraction(1)})

    def gens(self) -> Tuple["MultiPoly", ...]:
        return tuple(self.var(name) for name in self.names)

    def monomial(self, exps: Sequence[int], coeff: Scalar = 1) -> "MultiPoly":
        return MultiPoly(self, {tuple(exps): coeff})


def _grlex_key(exps: Exponent) -> Tuple[int, Exponent]:
    return (sum(exps), exps)


class MultiPoly:
    """
    Immutable sparse polynomial with exact rational coefficients.

    Attributes:
        ring (Ring): Variable ring.
        terms (Mapping[Exponent, Fraction]): Exponent vector to nonzero coefficient.

    Examples:
        >>> ring = Ring(("x", "y"))
        >>> x, y = ring.gens()
        >>> print((x + y) * (x - y))
        1*x^2 + -1*y^2
    """

    __slots__ = ("ring", "_terms", "_hash")

    def __init__(self, ring: Ring, terms: Optional[Mapping[Sequence[int], Scalar]] = None):
        clean: Dict[Exponent, Fraction] = {}
        for exps, coeff in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != ring.arity:
                raise ArityMismatchError(
                    f"Exponent vector {exps} does not match ring arity {ring.arity}"
                )
            if any(e < 0 for e in exps):
                raise ValueError(f"Negative exponent in {exps}")
            value = clean.get(exps, Fraction(0)) + Fraction(coeff)
            if value:
                clean[exps] = value
            else:
                clean.pop(exps, None)
        self.ring = ring
        self._terms = MappingProxyType(clean)
        self._hash = None

    @classmethod
    def _raw(cls, ring: Ring, clean: Dict[Exponent, Fraction]) -> "MultiPoly":
        poly = object.__new__(cls)
        poly.ring = ring
        poly._terms = MappingProxyType(clean)
        poly._hash = None
        return poly

    # Introspection

    @property
    def terms(self) -> Mapping[Exponent, Fraction]:
        return self._terms

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def is_constant(self) -> bool:
        return all(not any(exps) for exps in self._terms)

    @property
    def constant_term(self) -> Fraction:
        return self._terms.get((0,) * self.ring.arity, Fraction(0))

    @property
    def total_degree(self) -> int:
        return max((sum(exps) for exps in self._terms), default=0)

    def degree_in(self, name: str) -> int:
        i = self.ring.index(name)
        return max((exps[i] for exps in self._terms), default=0)

    def depends_on(self, name: str) -> bool:
        return self.degree_in(name) > 0

    def sorted_terms(self) -> Iterator[Tuple[Exponent, Fraction]]:
        for exps in sorted(self._terms, key=_grlex_key, reverse=True):
            yield exps, self._terms[exps]

    def leading_term(self) -> Tuple[Exponent, Fraction]:
        if not self._terms:
            raise ValueError("The zero polynomial has no leading term")
        exps = max(self._terms, key=_grlex_key)
        return exps, self._terms[exps]

    # Arithmetic

    def _coerce(self, other: object) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            if other.ring != self.ring:
                raise RingMismatchError(
                    f"Ring mismatch: {self.ring!r} vs {other.ring!r}", field="ring"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.const(other)
        return NotImplemented

    def __add__(self, other: object) -> "MultiPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._terms)
        for exps, coeff in other._terms.items():
            value = out.get(exps, 0) + coeff
            if value:
                out[exps] = value
            else:
                out.pop(exps, None)
        return MultiPoly._raw(self.ring, out)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly._raw(self.ring, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other: object) -> "MultiPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: object) -> "MultiPoly":
        return (-self) + other

    def scale(self, factor: Scalar) -> "MultiPoly":
        factor = Fraction(factor)
        if not factor:
            return self.ring.zero()
        return MultiPoly._raw(self.ring, {e: c * factor for e, c in self._terms.items()})

    def __mul__(self, other: object) -> "MultiPoly":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out: Dict[Exponent, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                exps = tuple(map(operator.add, e1, e2))
                out[exps] = out.get(exps, 0) + c1 * c2
        return MultiPoly._raw(self.ring, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> "MultiPoly":
        if isinstance(other, (int, Fraction)):
            if not other:
                raise ZeroDivisionAlgebraError("Division of a polynomial by zero")
            return self.scale(1 / Fraction(other))
        return NotImplemented

    def __pow__(self, exponent: int) -> "MultiPoly":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError(f"Exponent must be a nonnegative integer, got {exponent!r}")
        result, base = self.ring.one(), self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            return self == self.ring.const(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.ring == other.ring and dict(self._terms) == dict(other._terms)

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self._terms.items())))
        return self._hash

    # Calculus and composition

    def diff(self, name: str) -> "MultiPoly":
        i = self.ring.index(name)
        out: Dict[Exponent, Fraction] = {}
        for exps, coeff in self._terms.items():
            if exps[i]:
                lowered = exps[:i] + (exps[i] - 1,) + exps[i + 1 :]
                out[lowered] = coeff * exps[i]
        return MultiPoly._raw(self.ring, out)

    def evaluate(self, point: Sequence[Union[Scalar, float]]) -> Union[Fraction, float]:
        """
        Evaluate at a point given in ring order.

        Rational points evaluate exactly; a point containing any float is evaluated
        in binary64 by summing terms in canonical order.

        Raises:
            ArityMismatchError: If the point length differs from the ring arity.
        """
        if len(point) != self.ring.arity:
            raise ArityMismatchError(
                f"Point of length {len(point)} for ring of arity {self.ring.arity}"
            )
        if any(isinstance(v, float) for v in point):
            values = [float(v) for v in point]
            total = 0.0
            for exps, coeff in self.sorted_terms():
                term = float(coeff)
                for v, e in zip(values, exps):
                    if e:
                        term *= v**e
                total += term
            return total
        values = [Fraction(v) for v in point]
        total = Fraction(0)
        for exps, coeff in self._terms.items():
            term = coeff
            for v, e in zip(values, exps):
                if e:
                    term *= v**e
            total += term
        return total

    def substitute(
        self,
        images: Union[Sequence["MultiPoly"], Mapping[str, "MultiPoly"]],
        target: Optional[Ring] = None,
    ) -> "MultiPoly":
        """
        Compose with one image polynomial per source variable.

        Args:
            images: Images in ring order, or keyed by variable name.
            target (Optional[Ring]): Target ring; inferred from the images when omitted.

        Returns:
            MultiPoly: The composition, over the target ring.

        Raises:
            MissingImageError: If a source variable has no image.
            RingMismatchError: If the images live in different rings.

        Examples:
            >>> q1, q2, p1, p2 = canonical.gens()
            >>> z = state.var("z")
            >>> print(z.substitute({"x": q1, "y": p1, "z": p1**2 / 4 - q1**2 / 4 + p2}))
            -1/4*q1^2 + 1/4*p1^2 + 1*p2
        """
        if isinstance(images, Mapping):
            missing = [name for name in self.ring.names if name not in images]
            if missing:
                raise MissingImageError(
                    f"No image given for variable(s) {', '.join(missing)}", field="images"
                )
            ordered = [images[name] for name in self.ring.names]
        else:
            ordered = list(images)
            if len(ordered) != self.ring.arity:
                raise MissingImageError(
                    f"Expected {self.ring.arity} images, got {len(ordered)}", field="images"
                )
        target = target or ordered[0].ring
        for image in ordered:
            if image.ring != target:
                raise RingMismatchError(
                    f"Image over {image.ring!r}, expected {target!r}", field="images"
                )
        powers: Dict[Tuple[int, int], MultiPoly] = {}

        def power(i: int, e: int) -> MultiPoly:
            key = (i, e)
            if key not in powers:
                powers[key] = ordered[i] if e == 1 else power(i, e - 1) * ordered[i]
            return powers[key]

        result = target.zero()
        for exps, coeff in self._terms.items():
            term = target.const(coeff)
            for i, e in enumerate(exps):
                if e:
                    term = term * power(i, e)
            result = result + term
        return result

    def embed(self, target: Ring) -> "MultiPoly":
        """Re-express over a ring whose variable names contain this ring's names."""
        if target == self.ring:
            return self
        positions = [target.index(name) for name in self.ring.names]
        out: Dict[Exponent, Fraction] = {}
        for exps, coeff in self._terms.items():
            lifted = [0] * target.arity
            for pos, e in zip(positions, exps):
                lifted[pos] = e
            out[tuple(lifted)] = coeff
        return MultiPoly._raw(target, out)

    def exact_div(self, divisor: "MultiPoly") -> Optional["MultiPoly"]:
        """
        Quotient when ``divisor`` divides this polynomial exactly, else None.

        Single-divisor division in graded-lex order: the remainder is zero exactly
        when the divisor divides, so the first non-divisible leading term settles it.
        """
        divisor = self._coerce(divisor)
        if divisor.is_zero:
            raise ZeroDivisionAlgebraError("Exact division by the zero polynomial")
        lead_exps, lead_coeff = divisor.leading_term()
        work = dict(self._terms)
        quotient: Dict[Exponent, Fraction] = {}
        while work:
            exps = max(work, key=_grlex_key)
            if any(a < b for a, b in zip(exps, lead_exps)):
                return None
            shift = tuple(map(operator.sub, exps, lead_exps))
            factor = work[exps] / lead_coeff
            quotient[shift] = quotient.get(shift, 0) + factor
            for d_exps, d_coeff in divisor._terms.items():
                key = tuple(map(operator.add, shift, d_exps))
                value = work.get(key, 0) - factor * d_coeff
                if value:
                    work[key] = value
                else:
                    work.pop(key, None)
        return MultiPoly._raw(self.ring, {e: c for e, c in quotient.items() if c})

    # Text

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for exps, coeff in self.sorted_terms():
            factors = [
                name if e == 1 else f"{name}^{e}"
                for name, e in zip(self.ring.names, exps)
                if e
            ]
            parts.append("*".join([str(coeff)] + factors))
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"MultiPoly({self.ring!r}, '{self}')"


def _check_same_ring(a: MultiPoly, b: MultiPoly) -> None:
    if a.ring != b.ring:
        raise RingMismatchError(f"Ring mismatch: {a.ring!r} vs {b.ring!r}", field="ring")


def poly_arith(a: MultiPoly, b: MultiPoly, op: str) -> MultiPoly:
    """
    Exact ``add``, ``sub`` or ``mul`` of two polynomials over the same ring.

    Raises:
        RingMismatchError: If the rings differ.
        ValueError: For any other ``op``.
    """
    _check_same_ring(a, b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"Unsupported polynomial operation '{op}'")


def poly_diff(p: MultiPoly, name: str) -> MultiPoly:
    return p.diff(name)


def poly_eval(p: MultiPoly, point: Sequence[Union[Scalar, float]]) -> Union[Fraction, float]:
    return p.evaluate(point)


def poly_subst(
    p: MultiPoly, images: Union[Sequence[MultiPoly], Mapping[str, MultiPoly]]
) -> MultiPoly:
    return p.substitute(images)


def poly_exact_div(a: MultiPoly, b: MultiPoly) -> Optional[MultiPoly]:
    _check_same_ring(a, b)
    return a.exact_div(b)
