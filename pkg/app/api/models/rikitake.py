"""
Concrete objects of the Rikitake-type system.

Every object is entered as displayed text and parsed with the bound parameters,
so coefficients such as ``1/(2*beta)`` stay exact rationals:

- the 3-D field (beta-family and beta = 0), the Euler field and the master field
- the Poisson tensors pi1, pi2 and the modified tensor Pi^beta
- the invariant functions H1, H2, H_beta, C_beta
- the canonical system on R^4, the realization map phi and its section
- Newton's equations, their on-shell accelerations and the Lagrangian
"""

import logging
from fractions import Fraction
from functools import cached_property
from typing import Dict, Union

from app.api.algebra.parser import ParseContext, parse_expr, parse_poly
from app.api.algebra.polynomial import MultiPoly, Ring, Scalar
from app.api.algebra.rational_function import RationalFn, substitute_rational
from app.api.core.errors import CertificateError, ParameterDomainError
from app.api.models.base import JetSystem, PoissonTensor, PolyMap, VectorField

logger = logging.getLogger(__name__)

STATE_RING = Ring(("x", "y", "z"))
EXTENDED_STATE_RING = Ring(("t", "x", "y", "z"))
CANONICAL_RING = Ring(("q1", "q2", "p1", "p2"))
EXTENDED_CANONICAL_RING = Ring(("t", "q1", "q2", "p1", "p2"))
NEWTON_RING = Ring(("t", "q1", "q2"))
JET_RING = Ring(("t", "q1", "q2", "qd1", "qd2", "qdd1", "qdd2"))


def _poly(ring: Ring, src: str, **params: Scalar) -> MultiPoly:
    return parse_poly(src, ParseContext(ring=ring, params=params))


def _require_nonzero(beta: Fraction, what: str) -> None:
    if beta == 0:
        raise ParameterDomainError(f"{what} is defined only for beta != 0", field="beta")


def rikitake_field(beta: Scalar) -> VectorField:
    """
    Right-hand side ``(yz + beta*y, xz - beta*x, -xy)``; beta = 0 gives the reduced system.

    Examples:
        >>> rikitake_field(0).evaluate((1, 2, 3))
        (Fraction(6, 1), Fraction(3, 1), Fraction(-2, 1))
    """
    beta = Fraction(beta)
    return VectorField(
        STATE_RING,
        [
            _poly(STATE_RING, "y*z + beta*y", beta=beta),
            _poly(STATE_RING, "x*z - beta*x", beta=beta),
            _poly(STATE_RING, "-x*y"),
        ],
    )


class PoissonTensors:
    """
    The Lie-Poisson tensors pi1, pi2 and the modified tensor Pi^beta.

    ``pibeta`` raises ParameterDomainError when beta = 0; the other two do not
    depend on beta.
    """

    def __init__(self, beta: Scalar):
        self.beta = Fraction(beta)

    @cached_property
    def pi1(self) -> PoissonTensor:
        return PoissonTensor.from_upper(
            STATE_RING,
            {(0, 2): _poly(STATE_RING, "y/2"), (1, 2): _poly(STATE_RING, "x/2")},
        )

    @cached_property
    def pi2(self) -> PoissonTensor:
        return PoissonTensor.from_upper(
            STATE_RING,
            {
                (0, 1): _poly(STATE_RING, "-2*z"),
                (0, 2): _poly(STATE_RING, "y"),
                (1, 2): _poly(STATE_RING, "-x"),
            },
        )

    @cached_property
    def pibeta(self) -> PoissonTensor:
        _require_nonzero(self.beta, "Pi^beta")
        return PoissonTensor.from_upper(
            STATE_RING,
            {
                (0, 1): _poly(STATE_RING, "1"),
                (0, 2): _poly(STATE_RING, "y/(2*beta)", beta=self.beta),
                (1, 2): _poly(STATE_RING, "x/(2*beta)", beta=self.beta),
            },
        )

    def pencil(self, c: Scalar) -> PoissonTensor:
        """``pi1 + c * pi2``."""
        return self.pi1 + self.pi2.scale(c)


def poisson_tensors(beta: Scalar) -> PoissonTensors:
    return PoissonTensors(beta)


class InvariantFunctions:
    """Constants of motion H1, H2 and, for beta != 0, the Hamiltonian H_beta and Casimir C_beta."""

    def __init__(self, beta: Scalar):
        self.beta = Fraction(beta)

    @cached_property
    def H1(self) -> MultiPoly:
        return _poly(STATE_RING, "x^2/4 - y^2/4")

    @cached_property
    def H2(self) -> MultiPoly:
        return _poly(STATE_RING, "x^2/2 + y^2/2 + z^2")

    @cached_property
    def Hbeta(self) -> MultiPoly:
        _require_nonzero(self.beta, "H_beta")
        return _poly(STATE_RING, "beta/2*x^2 + beta/2*y^2 + beta*z^2", beta=self.beta)

    @cached_property
    def Cbeta(self) -> MultiPoly:
        _require_nonzero(self.beta, "C_beta")
        return _poly(
            STATE_RING, "1/(4*beta)*x^2 - 1/(4*beta)*y^2 + z", beta=self.beta
        )


def invariant_functions(beta: Scalar) -> InvariantFunctions:
    return InvariantFunctions(beta)


class CanonicalSystem:
    """
    Canonical Hamiltonian system on ``(q1, q2, p1, p2)``.

    Attributes:
        beta (Fraction): Bound parameter.
        H (MultiPoly): Hamiltonian.
        F (VectorField): Hamilton's equations as displayed.
    """

    def __init__(self, beta: Fraction, H: MultiPoly, F: VectorField):
        self.beta = beta
        self.H = H
        self.F = F


def canonical_system(beta: Scalar) -> CanonicalSystem:
    """
    Build H and Hamilton's equations and certify ``F = (H_p1, H_p2, -H_q1, -H_q2)``.

    Raises:
        ParameterDomainError: If beta = 0.
        CertificateError: If the displayed equations are not Hamilton's equations of H.
    """
    beta = Fraction(beta)
    _require_nonzero(beta, "The symplectic realization")
    ring = CANONICAL_RING
    H = _poly(
        ring,
        "1/(16*beta)*q1^4 + 1/(16*beta)*p1^4 - 1/(8*beta)*q1^2*p1^2 - 1/2*q1^2*p2"
        " + 1/2*p1^2*p2 + beta/2*q1^2 + beta/2*p1^2 + beta*p2^2",
        beta=beta,
    )
    F = VectorField(
        ring,
        [
            _poly(ring, "1/(4*beta)*p1^3 - 1/(4*beta)*q1^2*p1 + p1*p2 + beta*p1", beta=beta),
            _poly(ring, "-1/2*q1^2 + 1/2*p1^2 + 2*beta*p2", beta=beta),
            _poly(ring, "-1/(4*beta)*q1^3 + 1/(4*beta)*q1*p1^2 + q1*p2 - beta*q1", beta=beta),
            _poly(ring, "0"),
        ],
    )
    expected = VectorField(ring, [H.diff("p1"), H.diff("p2"), -H.diff("q1"), -H.diff("q2")])
    if F != expected:
        raise CertificateError(f"Hamilton's equations disagree with H: {F - expected}")
    return CanonicalSystem(beta, H, F)


def phi_map(beta: Scalar) -> PolyMap:
    """Realization map ``(q1, q2, p1, p2) -> (q1, p1, -q1^2/(4 beta) + p1^2/(4 beta) + p2)``."""
    beta = Fraction(beta)
    _require_nonzero(beta, "phi")
    return PolyMap(
        CANONICAL_RING,
        STATE_RING,
        [
            _poly(CANONICAL_RING, "q1"),
            _poly(CANONICAL_RING, "p1"),
            _poly(CANONICAL_RING, "-1/(4*beta)*q1^2 + 1/(4*beta)*p1^2 + p2", beta=beta),
        ],
    )


def phi_section(beta: Scalar) -> PolyMap:
    """Right inverse of phi: ``(x, y, z) -> (x, 0, y, z + x^2/(4 beta) - y^2/(4 beta))``."""
    beta = Fraction(beta)
    _require_nonzero(beta, "The section of phi")
    return PolyMap(
        STATE_RING,
        CANONICAL_RING,
        [
            _poly(STATE_RING, "x"),
            _poly(STATE_RING, "0"),
            _poly(STATE_RING, "y"),
            _poly(STATE_RING, "z + 1/(4*beta)*x^2 - 1/(4*beta)*y^2", beta=beta),
        ],
    )


def lagrangian_system(beta: Scalar) -> JetSystem:
    """
    Newton's equations, the Lagrangian and the accelerations solved from them.

    The equations are linear in ``(qdd1, qdd2)``; the accelerations come from
    Cramer's rule, are reduced by the factor ``qd2 + 2 beta^2`` and certified by
    substituting them back.

    Raises:
        ParameterDomainError: If beta = 0.
        CertificateError: If the solve is singular or fails to annihilate the equations.
    """
    beta = Fraction(beta)
    _require_nonzero(beta, "The Lagrangian system")
    ring = JET_RING
    ctx = ParseContext(ring=ring, params={"beta": beta})
    delta1 = parse_poly("qdd2*qd2 + 2*beta^2*qdd2 + 4*beta^2*q1*qd1", ctx)
    delta2 = parse_poly(
        "2*beta*qdd1*qd2 + 4*beta^3*qdd1 - 2*beta*qd1*qdd2 - 1/(2*beta)*q1*qd2^3"
        " - beta*q1*qd2^2 + 2*beta^3*q1*qd2 + 4*beta^5*q1",
        ctx,
    )
    lagrangian = parse_expr(
        "1/(4*beta)*qd2^2 - beta/2*q1^2 + 1/(4*beta)*q1^2*qd2 + beta*qd1^2/(qd2 + 2*beta^2)",
        ctx,
    )
    factor = parse_poly("qd2 + 2*beta^2", ctx)

    (a11, a12, b1), (a21, a22, b2) = (_linear_parts(d) for d in (delta1, delta2))
    det = a11 * a22 - a12 * a21
    if det.is_zero:
        raise CertificateError("Newton's equations are singular in the accelerations")
    accelerations = tuple(
        RationalFn(num, det).cancel_factor(factor).reduced()
        for num in (a12 * b2 - a22 * b1, a21 * b1 - a11 * b2)
    )
    images = dict(zip(JetSystem.ACCELERATIONS, accelerations))
    for k, delta in enumerate((delta1, delta2), start=1):
        residual = substitute_rational(delta, images)
        if not residual.is_zero:
            raise CertificateError(f"Accelerations do not solve Newton equation {k}: {residual}")
    return JetSystem(ring, beta, (delta1, delta2), accelerations, lagrangian, factor)


def _linear_parts(delta: MultiPoly):
    """Split an equation linear in accelerations into ``(coef_qdd1, coef_qdd2, rest)``."""
    coefficients = []
    for name in JetSystem.ACCELERATIONS:
        coefficient = delta.diff(name)
        if any(coefficient.depends_on(n) for n in JetSystem.ACCELERATIONS):
            raise CertificateError(f"Equation is not linear in {name}: {delta}")
        coefficients.append(coefficient)
    qdd = [JET_RING.var(name) for name in JetSystem.ACCELERATIONS]
    rest = delta - coefficients[0] * qdd[0] - coefficients[1] * qdd[1]
    return coefficients[0], coefficients[1], rest


def named_fields(beta: Scalar, k1: Scalar, k2: Scalar) -> Dict[str, VectorField]:
    """
    The system fields plus the Euler field and the master-symmetry candidate.

    A zero ``k1`` violates the master-symmetry hypothesis; it is logged, not rejected,
    so that falsification can exercise it.
    """
    k1, k2 = Fraction(k1), Fraction(k2)
    if k1 == 0:
        logger.warning("master field with k1 = 0 is outside the master-symmetry hypothesis")
    ring = STATE_RING
    return {
        "V": rikitake_field(beta),
        "V0": rikitake_field(0),
        "euler": VectorField(ring, ring.gens()),
        "master": VectorField(
            ring,
            [
                _poly(ring, "k1*x + k2*y*z", k1=k1, k2=k2),
                _poly(ring, "k1*y + k2*x*z", k1=k1, k2=k2),
                _poly(ring, "k1*z - k2*x*y", k1=k1, k2=k2),
            ],
        ),
    }


CatalogEntry = Union[VectorField, PoissonTensor, MultiPoly, PolyMap, CanonicalSystem]


def catalog(beta: Scalar, k1: Scalar = 1, k2: Scalar = 0) -> Dict[str, CatalogEntry]:
    """
    All objects under their stable identifiers; beta-family entries only when beta != 0.

    Examples:
        >>> sorted(catalog(0))
        ['H1', 'H2', 'V', 'V0', 'euler', 'master', 'pi1', 'pi2']
    """
    beta = Fraction(beta)
    tensors = poisson_tensors(beta)
    functions = invariant_functions(beta)
    entries: Dict[str, CatalogEntry] = {
        "pi1": tensors.pi1,
        "pi2": tensors.pi2,
        "H1": functions.H1,
        "H2": functions.H2,
        **named_fields(beta, k1, k2),
    }
    if beta != 0:
        entries.update(
            {
                "pibeta": tensors.pibeta,
                "Hbeta": functions.Hbeta,
                "Cbeta": functions.Cbeta,
                "phi": phi_map(beta),
                "canonical": canonical_system(beta),
            }
        )
    return entries
