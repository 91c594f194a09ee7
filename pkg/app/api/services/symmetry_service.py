"""
Symmetry service: prolongations, determining-equation residuals and Noether quantities.

Handles:
- On-shell total derivatives for first-order systems
- Lie point symmetry residuals of first-order systems
- Jet total derivatives and second prolongations for Newton's equations
- Noether residuals, energy and momenta of the Lagrangian
- Euler-Lagrange, Newton and Legendre consistency residuals
"""

from typing import Dict, List, Mapping, Tuple, Union

from app.api.algebra.polynomial import MultiPoly
from app.api.algebra.rational_function import RationalFn, substitute_rational
from app.api.core.errors import RingMismatchError
from app.api.models.base import JetSystem, VectorField
from app.api.models.candidates import NewtonCandidate, PointSymmetryCandidate
from app.api.models.rikitake import EXTENDED_CANONICAL_RING, CanonicalSystem

JetFunction = Union[MultiPoly, RationalFn]


def _check_state_ring(g_ring, F: VectorField) -> None:
    if g_ring.names[1:] != F.ring.names:
        raise RingMismatchError(
            f"Field over {F.ring!r} does not match the state part of {g_ring!r}", field="ring"
        )


class SymmetryService:
    """Prolongation machinery for the first-order systems and for Newton's equations."""

    @staticmethod
    def total_derivative(g: MultiPoly, F: VectorField) -> MultiPoly:
        """
        On-shell total derivative ``D_t g = dg/dt + sum_i F^i dg/dx_i``.

        Args:
            g (MultiPoly): Function over ``(t, states...)``.
            F (VectorField): Right-hand side over the state ring.

        Raises:
            RingMismatchError: If ``F``'s ring is not the state part of ``g``'s ring.

        Examples:
            >>> x = EXTENDED_STATE_RING.var("x")
            >>> print(SymmetryService.total_derivative(x, rikitake_field(0)))
            1*y*z
        """
        ring = g.ring
        _check_state_ring(ring, F)
        total = g.diff(ring.names[0])
        for component, name in zip(F.embed(ring), F.ring.names):
            partial = g.diff(name)
            if not partial.is_zero:
                total = total + component * partial
        return total

    @staticmethod
    def ode1_symmetry_residual(F: VectorField, cand: PointSymmetryCandidate) -> List[MultiPoly]:
        """
        Determining-equation residuals of a point symmetry for ``x' = F(x)``.

        ``R_i = D_t A_i - F^i D_t tau - sum_j A_j dF^i/dx_j``; all zero exactly when the
        candidate is a Lie point symmetry.
        """
        ring = cand.ring
        _check_state_ring(ring, F)
        lifted = F.embed(ring)
        d_tau = SymmetryService.total_derivative(cand.tau, F)
        residuals = []
        for i, component in enumerate(lifted):
            total = SymmetryService.total_derivative(cand.A[i], F) - component * d_tau
            for a_j, name in zip(cand.A, F.ring.names):
                total = total - a_j * component.diff(name)
            residuals.append(total)
        return residuals

    @staticmethod
    def jet_total_derivative(f: JetFunction) -> JetFunction:
        """
        Formal total derivative on the jet ring, for functions of ``(t, q, qd)``.

        ``D_t f = df/dt + sum_i qd_i df/dq_i + sum_i qdd_i df/dqd_i``.

        Raises:
            ValueError: If ``f`` already involves accelerations.
        """
        if isinstance(f, RationalFn):
            d_num = SymmetryService.jet_total_derivative(f.num)
            d_den = SymmetryService.jet_total_derivative(f.den)
            if d_den.is_zero:
                return RationalFn(d_num, f.den)
            return RationalFn(d_num * f.den - f.num * d_den, f.den * f.den)
        ring = f.ring
        for name in JetSystem.ACCELERATIONS:
            if f.depends_on(name):
                raise ValueError(f"Jet total derivative of a function of {name} is second-order")
        total = f.diff(JetSystem.TIME)
        lower = JetSystem.POSITIONS + JetSystem.VELOCITIES
        upper = JetSystem.VELOCITIES + JetSystem.ACCELERATIONS
        for low, high in zip(lower, upper):
            partial = f.diff(low)
            if not partial.is_zero:
                total = total + ring.var(high) * partial
        return total

    @staticmethod
    def on_shell(js: JetSystem, f: JetFunction) -> RationalFn:
        """Replace ``qdd1, qdd2`` by the solved accelerations."""
        images = js.on_shell_images()
        if isinstance(f, RationalFn):
            return f.substitute(images)
        return substitute_rational(f, images)

    @staticmethod
    def prolongation(
        js: JetSystem, cand: NewtonCandidate
    ) -> Tuple[MultiPoly, Tuple[MultiPoly, ...], Tuple[MultiPoly, ...], Tuple[MultiPoly, ...]]:
        """
        Second prolongation coefficients over the jet ring.

        Returns:
            ``(xi, eta, eta1, eta2)`` with ``eta1_i = D_t eta_i - qd_i D_t xi`` and
            ``eta2_i = D_t eta1_i - qdd_i D_t xi``.
        """
        ring = js.ring
        xi = cand.xi.embed(ring)
        eta = tuple(e.embed(ring) for e in cand.eta)
        d_xi = SymmetryService.jet_total_derivative(xi)
        eta1 = tuple(
            SymmetryService.jet_total_derivative(e) - ring.var(v) * d_xi
            for e, v in zip(eta, JetSystem.VELOCITIES)
        )
        eta2 = tuple(
            SymmetryService.jet_total_derivative(e) - ring.var(a) * d_xi
            for e, a in zip(eta1, JetSystem.ACCELERATIONS)
        )
        return xi, eta, eta1, eta2

    @staticmethod
    def prolong2_residual(js: JetSystem, cand: NewtonCandidate) -> Tuple[RationalFn, RationalFn]:
        """
        ``pr2 v (Delta_k)`` restricted to solutions, for both Newton equations.

        Examples:
            >>> js = lagrangian_system(1)
            >>> first, _ = SymmetryService.prolong2_residual(js, NewtonCandidate.constant(0, 1, 0))
            >>> print(first)
            4*qd1
        """
        xi, eta, eta1, eta2 = SymmetryService.prolongation(js, cand)
        residuals = []
        for delta in js.equations:
            total = xi * delta.diff(JetSystem.TIME)
            for coeffs, names in (
                (eta, JetSystem.POSITIONS),
                (eta1, JetSystem.VELOCITIES),
                (eta2, JetSystem.ACCELERATIONS),
            ):
                for coeff, name in zip(coeffs, names):
                    if not coeff.is_zero:
                        total = total + coeff * delta.diff(name)
            residuals.append(SymmetryService.on_shell(js, total))
        return residuals[0], residuals[1]

    @staticmethod
    def noether_residual(js: JetSystem, cand: NewtonCandidate) -> RationalFn:
        """
        Variational-symmetry residual ``pr1 v (L) + L D_t xi``.

        The divergence of the single time component is read as its total derivative.
        """
        xi, eta, eta1, _ = SymmetryService.prolongation(js, cand)
        L = js.lagrangian
        total = L.diff(JetSystem.TIME) * xi + L * SymmetryService.jet_total_derivative(xi)
        for coeffs, names in ((eta, JetSystem.POSITIONS), (eta1, JetSystem.VELOCITIES)):
            for coeff, name in zip(coeffs, names):
                if not coeff.is_zero:
                    total = total + L.diff(name) * coeff
        return total

    @staticmethod
    def conserved_quantities(js: JetSystem) -> Dict[str, Union[RationalFn, List[RationalFn]]]:
        """
        Energy ``sum_i qd_i dL/dqd_i - L`` and momenta ``dL/dqd_i``.

        Returns:
            Dict with ``energy`` (RationalFn) and ``momenta`` (list of RationalFn).
        """
        L = js.lagrangian
        momenta = [L.diff(v) for v in JetSystem.VELOCITIES]
        energy = -L
        for momentum, v in zip(momenta, JetSystem.VELOCITIES):
            energy = energy + momentum * js.ring.var(v)
        return {"energy": energy, "momenta": momenta}

    @staticmethod
    def conservation_residuals(js: JetSystem) -> Dict[str, RationalFn]:
        """On-shell ``D_t`` of the energy and of each momentum."""
        quantities = SymmetryService.conserved_quantities(js)
        residuals = {"energy": quantities["energy"]}
        for k, momentum in enumerate(quantities["momenta"], start=1):
            residuals[f"momentum{k}"] = momentum
        return {
            name: SymmetryService.on_shell(js, SymmetryService.jet_total_derivative(value))
            for name, value in residuals.items()
        }

    @staticmethod
    def euler_lagrange_residuals(js: JetSystem) -> Tuple[RationalFn, RationalFn]:
        """``D_t(dL/dqd_k) - dL/dq_k`` with the accelerations substituted, for k = 1, 2."""
        L = js.lagrangian
        residuals = []
        for q, v in zip(JetSystem.POSITIONS, JetSystem.VELOCITIES):
            expression = SymmetryService.jet_total_derivative(L.diff(v)) - L.diff(q)
            residuals.append(SymmetryService.on_shell(js, expression))
        return residuals[0], residuals[1]

    @staticmethod
    def canonical_jet_images(canonical: CanonicalSystem) -> Mapping[str, MultiPoly]:
        """
        Jet variables expressed along the canonical flow, over ``(t, q1, q2, p1, p2)``.

        Velocities are the ``q`` rows of Hamilton's equations; accelerations are one more
        on-shell derivative of those rows.
        """
        ring = EXTENDED_CANONICAL_RING
        field = canonical.F
        lifted = field.embed(ring)
        images: Dict[str, MultiPoly] = {JetSystem.TIME: ring.var(JetSystem.TIME)}
        for q, v, a in zip(JetSystem.POSITIONS, JetSystem.VELOCITIES, JetSystem.ACCELERATIONS):
            velocity = lifted[field.ring.index(q)]
            acceleration = ring.zero()
            for component, name in zip(lifted, field.ring.names):
                acceleration = acceleration + component * velocity.diff(name)
            images[q] = ring.var(q)
            images[v] = velocity
            images[a] = acceleration
        return images

    @staticmethod
    def newton_onshell_from_canonical(
        js: JetSystem, canonical: CanonicalSystem
    ) -> Tuple[MultiPoly, MultiPoly]:
        """Newton's equations evaluated on jets of the canonical flow; zero when they follow from it."""
        images = SymmetryService.canonical_jet_images(canonical)
        target = EXTENDED_CANONICAL_RING
        first, second = (delta.substitute(images, target) for delta in js.equations)
        return first, second

    @staticmethod
    def legendre_residuals(js: JetSystem, canonical: CanonicalSystem) -> Dict[str, RationalFn]:
        """
        ``energy - H``, ``momentum1 - p1`` and ``momentum2 - p2`` with velocities taken
        from Hamilton's equations.
        """
        images = SymmetryService.canonical_jet_images(canonical)
        target = EXTENDED_CANONICAL_RING
        quantities = SymmetryService.conserved_quantities(js)
        expected = {
            "energy": canonical.H.embed(target),
            "momentum1": target.var("p1"),
            "momentum2": target.var("p2"),
        }
        values = {
            "energy": quantities["energy"],
            "momentum1": quantities["momenta"][0],
            "momentum2": quantities["momenta"][1],
        }
        return {name: values[name].compose(images, target) - expected[name] for name in expected}
