"""
Structural types shared by all models.

Provides the vector fields, antisymmetric bivectors (Poisson tensors), polynomial
maps and the second-order jet system on which the calculus and symmetry services
operate.
"""

from fractions import Fraction
from typing import Iterator, Mapping, Sequence, Tuple, Union

from app.api.algebra.polynomial import MultiPoly, Ring, Scalar
from app.api.algebra.rational_function import RationalFn
from app.api.core.errors import ArityMismatchError, RingMismatchError


def _require_ring(polys: Sequence[MultiPoly], ring: Ring, what: str) -> None:
    for poly in polys:
        if poly.ring != ring:
            raise RingMismatchError(f"{what} entry over {poly.ring!r}, expected {ring!r}")


class VectorField:
    """
    Polynomial vector field, one component per ring variable.

    Attributes:
        ring (Ring): State ring.
        components (Tuple[MultiPoly, ...]): Component ``i`` multiplies ``d/d ring.names[i]``.

    Examples:
        >>> x, y, z = state.gens()
        >>> euler = VectorField(state, (x, y, z))
        >>> euler.evaluate((1, 2, 3))
        (Fraction(1, 1), Fraction(2, 1), Fraction(3, 1))
    """

    __slots__ = ("ring", "components")

    def __init__(self, ring: Ring, components: Sequence[MultiPoly]):
        components = tuple(components)
        if len(components) != ring.arity:
            raise ArityMismatchError(
                f"{len(components)} components for a ring of arity {ring.arity}"
            )
        _require_ring(components, ring, "Vector field")
        self.ring = ring
        self.components = components

    @classmethod
    def zero(cls, ring: Ring) -> "VectorField":
        return cls(ring, [ring.zero()] * ring.arity)

    def __len__(self) -> int:
        return len(self.components)

    def __iter__(self) -> Iterator[MultiPoly]:
        return iter(self.components)

    def __getitem__(self, i: int) -> MultiPoly:
        return self.components[i]

    def _check(self, other: "VectorField") -> None:
        if other.ring != self.ring:
            raise RingMismatchError(f"Vector fields over {self.ring!r} and {other.ring!r}")

    def __add__(self, other: "VectorField") -> "VectorField":
        self._check(other)
        return VectorField(self.ring, [a + b for a, b in zip(self, other)])

    def __sub__(self, other: "VectorField") -> "VectorField":
        self._check(other)
        return VectorField(self.ring, [a - b for a, b in zip(self, other)])

    def scale(self, factor: Scalar) -> "VectorField":
        return VectorField(self.ring, [c.scale(factor) for c in self])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, VectorField):
            return NotImplemented
        return self.ring == other.ring and self.components == other.components

    __hash__ = None

    @property
    def is_zero(self) -> bool:
        return all(c.is_zero for c in self)

    def evaluate(self, point: Sequence[Union[Scalar, float]]) -> Tuple[Union[Fraction, float], ...]:
        return tuple(c.evaluate(point) for c in self)

    def embed(self, target: Ring) -> Tuple[MultiPoly, ...]:
        """Components lifted to a larger ring (the field itself stays on its own ring)."""
        return tuple(c.embed(target) for c in self)

    def __str__(self) -> str:
        return "[" + "; ".join(str(c) for c in self) + "]"

    def __repr__(self) -> str:
        return f"VectorField({self.ring!r}, {self})"


class PoissonTensor:
    """
    Antisymmetric ``n x n`` matrix of polynomials (a bivector field).

    Used for Poisson tensors and for bivector-valued residuals such as Lie
    derivatives, so the constructor enforces antisymmetry but not Jacobi.

    Attributes:
        ring (Ring): State ring.
        entries (Tuple[Tuple[MultiPoly, ...], ...]): Row-major entries.
    """

    __slots__ = ("ring", "entries")

    def __init__(self, ring: Ring, entries: Sequence[Sequence[MultiPoly]]):
        rows = tuple(tuple(row) for row in entries)
        n = ring.arity
        if len(rows) != n or any(len(row) != n for row in rows):
            raise ArityMismatchError(f"Bivector must be {n}x{n}")
        for row in rows:
            _require_ring(row, ring, "Bivector")
        for i in range(n):
            if not rows[i][i].is_zero:
                raise ValueError(f"Diagonal entry ({i + 1},{i + 1}) is not zero")
            for j in range(i + 1, n):
                if rows[i][j] != -rows[j][i]:
                    raise ValueError(f"Entries ({i + 1},{j + 1}) and ({j + 1},{i + 1}) are not opposite")
        self.ring = ring
        self.entries = rows

    @classmethod
    def from_upper(cls, ring: Ring, upper: Mapping[Tuple[int, int], MultiPoly]) -> "PoissonTensor":
        """Build from the strict upper triangle, keyed by 0-based ``(i, j)`` with ``i < j``."""
        n = ring.arity
        rows = [[ring.zero() for _ in range(n)] for _ in range(n)]
        for (i, j), value in upper.items():
            if not i < j:
                raise ValueError(f"Upper-triangle key {(i, j)} needs i < j")
            rows[i][j] = value
            rows[j][i] = -value
        return cls(ring, rows)

    def entry(self, i: int, j: int) -> MultiPoly:
        return self.entries[i][j]

    def __add__(self, other: "PoissonTensor") -> "PoissonTensor":
        if other.ring != self.ring:
            raise RingMismatchError(f"Bivectors over {self.ring!r} and {other.ring!r}")
        return PoissonTensor(
            self.ring, [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.entries, other.entries)]
        )

    def __sub__(self, other: "PoissonTensor") -> "PoissonTensor":
        return self + other.scale(-1)

    def scale(self, factor: Scalar) -> "PoissonTensor":
        return PoissonTensor(self.ring, [[e.scale(factor) for e in row] for row in self.entries])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PoissonTensor):
            return NotImplemented
        return self.ring == other.ring and self.entries == other.entries

    __hash__ = None

    @property
    def is_zero(self) -> bool:
        return all(e.is_zero for row in self.entries for e in row)

    def upper(self) -> Iterator[Tuple[int, int, MultiPoly]]:
        n = self.ring.arity
        for i in range(n):
            for j in range(i + 1, n):
                yield i, j, self.entries[i][j]

    def __str__(self) -> str:
        return "[" + "; ".join(f"({i + 1},{j + 1}): {e}" for i, j, e in self.upper()) + "]"

    def __repr__(self) -> str:
        return f"PoissonTensor({self.ring!r}, {self})"


class PolyMap:
    """
    Polynomial map between rings: one source polynomial per target variable.

    Attributes:
        source (Ring): Domain ring.
        target (Ring): Codomain ring.
        components (Tuple[MultiPoly, ...]): Image of each target coordinate.
    """

    __slots__ = ("source", "target", "components")

    def __init__(self, source: Ring, target: Ring, components: Sequence[MultiPoly]):
        components = tuple(components)
        if len(components) != target.arity:
            raise ArityMismatchError(
                f"{len(components)} components for a target of arity {target.arity}"
            )
        _require_ring(components, source, "Map")
        self.source = source
        self.target = target
        self.components = components

    def pullback(self, poly: MultiPoly) -> MultiPoly:
        """``poly o self`` for a polynomial over the target ring."""
        if poly.ring != self.target:
            raise RingMismatchError(f"Cannot pull back a polynomial over {poly.ring!r}")
        return poly.substitute(self.components, self.source)

    def compose(self, inner: "PolyMap") -> "PolyMap":
        """``self o inner``."""
        if inner.target != self.source:
            raise RingMismatchError(f"Cannot compose through {inner.target!r} and {self.source!r}")
        return PolyMap(inner.source, self.target, [inner.pullback(c) for c in self.components])

    def evaluate(self, point: Sequence[Union[Scalar, float]]) -> Tuple[Union[Fraction, float], ...]:
        return tuple(c.evaluate(point) for c in self.components)

    def __str__(self) -> str:
        return "(" + ", ".join(str(c) for c in self.components) + ")"


class JetSystem:
    """
    Second-order system on the jet ring ``(t, q1, q2, qd1, qd2, qdd1, qdd2)``.

    Attributes:
        ring (Ring): Jet ring.
        beta (Fraction): Bound parameter.
        equations (Tuple[MultiPoly, MultiPoly]): Newton equations, linear in accelerations.
        accelerations (Tuple[RationalFn, RationalFn]): On-shell ``qdd1, qdd2``; free of
            ``t`` and of the acceleration variables.
        lagrangian (RationalFn): Lagrangian in ``(q, qd)``.
        singular_factor (MultiPoly): ``qd2 + 2*beta^2``, the factor behind every denominator.
    """

    TIME = "t"
    POSITIONS = ("q1", "q2")
    VELOCITIES = ("qd1", "qd2")
    ACCELERATIONS = ("qdd1", "qdd2")

    __slots__ = ("ring", "beta", "equations", "accelerations", "lagrangian", "singular_factor")

    def __init__(
        self,
        ring: Ring,
        beta: Fraction,
        equations: Sequence[MultiPoly],
        accelerations: Sequence[RationalFn],
        lagrangian: RationalFn,
        singular_factor: MultiPoly,
    ):
        expected = (self.TIME,) + self.POSITIONS + self.VELOCITIES + self.ACCELERATIONS
        if ring.names != expected:
            raise RingMismatchError(f"Jet ring must be {expected}, got {ring.names}")
        _require_ring(list(equations) + [singular_factor], ring, "Jet system")
        for r in list(accelerations) + [lagrangian]:
            if r.ring != ring:
                raise RingMismatchError(f"Jet system function over {r.ring!r}")
        self.ring = ring
        self.beta = beta
        self.equations = tuple(equations)
        self.accelerations = tuple(accelerations)
        self.lagrangian = lagrangian
        self.singular_factor = singular_factor

    def on_shell_images(self) -> Mapping[str, RationalFn]:
        return dict(zip(self.ACCELERATIONS, self.accelerations))
