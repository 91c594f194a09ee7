"""
Symmetry candidates checked by the symmetry service.
"""

from fractions import Fraction
from typing import Mapping, Optional, Sequence

from app.api.algebra.parser import ParseContext, parse_poly
from app.api.algebra.polynomial import MultiPoly, Ring, Scalar
from app.api.core.errors import ArityMismatchError, RingMismatchError
from app.api.models.rikitake import EXTENDED_STATE_RING, NEWTON_RING


class PointSymmetryCandidate:
    """
    ``tau d/dt + sum_i A_i d/dx_i`` on the extended ring ``(t, states...)``.

    Attributes:
        ring (Ring): Extended ring; its first variable is time.
        tau (MultiPoly): Time component.
        A (Tuple[MultiPoly, ...]): One component per state variable.

    Examples:
        >>> cand = PointSymmetryCandidate.from_text("-t", ["x", "y", "z"])
        >>> print(cand.tau)
        -1*t
    """

    __slots__ = ("ring", "tau", "A")

    def __init__(self, ring: Ring, tau: MultiPoly, A: Sequence[MultiPoly]):
        A = tuple(A)
        if len(A) != ring.arity - 1:
            raise ArityMismatchError(f"{len(A)} state components for {ring!r}")
        for poly in (tau,) + A:
            if poly.ring != ring:
                raise RingMismatchError(f"Candidate component over {poly.ring!r}, expected {ring!r}")
        self.ring = ring
        self.tau = tau
        self.A = A

    @classmethod
    def from_text(
        cls,
        tau: str,
        A: Sequence[str],
        params: Optional[Mapping[str, Scalar]] = None,
        ring: Ring = EXTENDED_STATE_RING,
    ) -> "PointSymmetryCandidate":
        ctx = ParseContext(ring=ring, params=params or {})
        return cls(ring, parse_poly(tau, ctx), [parse_poly(a, ctx) for a in A])

    def __add__(self, other: "PointSymmetryCandidate") -> "PointSymmetryCandidate":
        return PointSymmetryCandidate(
            self.ring, self.tau + other.tau, [a + b for a, b in zip(self.A, other.A)]
        )

    def scale(self, factor: Scalar) -> "PointSymmetryCandidate":
        return PointSymmetryCandidate(self.ring, self.tau.scale(factor), [a.scale(factor) for a in self.A])


class NewtonCandidate:
    """
    ``xi d/dt + eta1 d/dq1 + eta2 d/dq2`` with components polynomial in ``(t, q1, q2)``.

    The constant candidates ``c1 d/dt + c2 d/dq2`` are the general solution for
    Newton's equations; ``constant`` builds them.
    """

    __slots__ = ("ring", "xi", "eta")

    def __init__(self, xi: MultiPoly, eta: Sequence[MultiPoly], ring: Ring = NEWTON_RING):
        eta = tuple(eta)
        if len(eta) != 2:
            raise ArityMismatchError(f"Newton candidates have two eta components, got {len(eta)}")
        for poly in (xi,) + eta:
            if poly.ring != ring:
                raise RingMismatchError(f"Candidate component over {poly.ring!r}, expected {ring!r}")
        self.ring = ring
        self.xi = xi
        self.eta = eta

    @classmethod
    def constant(cls, xi: Scalar, eta1: Scalar, eta2: Scalar) -> "NewtonCandidate":
        ring = NEWTON_RING
        return cls(ring.const(Fraction(xi)), [ring.const(Fraction(eta1)), ring.const(Fraction(eta2))])

    @classmethod
    def from_text(
        cls, xi: str, eta1: str, eta2: str, params: Optional[Mapping[str, Scalar]] = None
    ) -> "NewtonCandidate":
        ctx = ParseContext(ring=NEWTON_RING, params=params or {})
        return cls(parse_poly(xi, ctx), [parse_poly(eta1, ctx), parse_poly(eta2, ctx)])

    def __add__(self, other: "NewtonCandidate") -> "NewtonCandidate":
        return NewtonCandidate(self.xi + other.xi, [a + b for a, b in zip(self.eta, other.eta)], self.ring)

    def scale(self, factor: Scalar) -> "NewtonCandidate":
        return NewtonCandidate(self.xi.scale(factor), [e.scale(factor) for e in self.eta], self.ring)

    def __str__(self) -> str:
        return f"(xi={self.xi}, eta1={self.eta[0]}, eta2={self.eta[1]})"
