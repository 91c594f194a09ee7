"""
Poisson calculus service.

Handles:
- Hamiltonian vector fields and Casimir residuals of a Poisson tensor
- Jacobi residuals of bivectors
- Lie brackets of vector fields and Lie derivatives of functions and bivectors
- Conformal-symmetry residuals
- The canonical bracket on (q, p) coordinates
- Jacobians, submersion certificates, pushforward and Poisson-map residuals
"""

from fractions import Fraction
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple, TypeVar, Union

from app.api.algebra.polynomial import MultiPoly, Ring, Scalar
from app.api.algebra.rational_function import RationalFn
from app.api.core.errors import RingMismatchError
from app.api.models.base import PoissonTensor, PolyMap, VectorField

Function = TypeVar("Function", MultiPoly, RationalFn)
Matrix = Tuple[Tuple[MultiPoly, ...], ...]


def _same_ring(*objects: Union[VectorField, PoissonTensor, MultiPoly, RationalFn]) -> Ring:
    ring = objects[0].ring
    for obj in objects[1:]:
        if obj.ring != ring:
            raise RingMismatchError(f"Operands over {ring!r} and {obj.ring!r}", field="ring")
    return ring


def _determinant(matrix: Sequence[Sequence[MultiPoly]]) -> MultiPoly:
    """Laplace expansion along the first row; sizes here never exceed 4."""
    if len(matrix) == 1:
        return matrix[0][0]
    total = matrix[0][0].ring.zero()
    for col, entry in enumerate(matrix[0]):
        if entry.is_zero:
            continue
        minor = [row[:col] + row[col + 1 :] for row in matrix[1:]]
        term = entry * _determinant(minor)
        total = total + term if col % 2 == 0 else total - term
    return total


class PoissonService:
    """Differential operators on polynomial vector fields, functions and bivectors."""

    @staticmethod
    def ham_field(pi: PoissonTensor, H: MultiPoly) -> VectorField:
        """
        Hamiltonian vector field ``pi . grad H``.

        Args:
            pi (PoissonTensor): Poisson tensor.
            H (MultiPoly): Hamiltonian over the tensor's ring.

        Returns:
            VectorField: Component ``i`` is ``sum_j pi[i][j] * dH/dx_j``.

        Raises:
            RingMismatchError: If ``H`` lives in another ring.

        Examples:
            >>> tensors, functions = poisson_tensors(0), invariant_functions(0)
            >>> print(PoissonService.ham_field(tensors.pi1, functions.H2))
            [1*y*z; 1*x*z; -1*x*y]
        """
        ring = _same_ring(pi, H)
        gradient = [H.diff(name) for name in ring.names]
        components = []
        for row in pi.entries:
            total = ring.zero()
            for entry, partial in zip(row, gradient):
                if not entry.is_zero and not partial.is_zero:
                    total = total + entry * partial
            components.append(total)
        return VectorField(ring, components)

    @staticmethod
    def casimir_residual(pi: PoissonTensor, C: MultiPoly) -> VectorField:
        """``pi . grad C``; zero exactly when ``C`` is a Casimir of ``pi``."""
        return PoissonService.ham_field(pi, C)

    @staticmethod
    def jacobi_residual(pi: PoissonTensor) -> Dict[Tuple[int, int, int], MultiPoly]:
        """
        Jacobi residual for every index triple ``i < j < k`` (1-based keys).

        ``J^{ijk} = sum_l (pi^{il} d_l pi^{jk} + pi^{jl} d_l pi^{ki} + pi^{kl} d_l pi^{ij})``.
        For a 3-dimensional ring only ``(1, 2, 3)`` is produced.
        """
        ring = pi.ring
        names = ring.names
        n = ring.arity
        partials = [[[e.diff(name) for name in names] for e in row] for row in pi.entries]

        def cyclic_term(a: int, b: int, c: int) -> MultiPoly:
            total = ring.zero()
            for m in range(n):
                left = pi.entries[a][m]
                right = partials[b][c][m]
                if not left.is_zero and not right.is_zero:
                    total = total + left * right
            return total

        residuals = {}
        for i, j, k in combinations(range(n), 3):
            residuals[(i + 1, j + 1, k + 1)] = (
                cyclic_term(i, j, k) + cyclic_term(j, k, i) + cyclic_term(k, i, j)
            )
        return residuals

    @staticmethod
    def lie_bracket(X: VectorField, Y: VectorField) -> VectorField:
        """
        ``[X, Y]^i = sum_j (X^j d_j Y^i - Y^j d_j X^i)``.

        Examples:
            >>> fields = named_fields(0, 2, 3)
            >>> bracket = PoissonService.lie_bracket(fields["master"], fields["V0"])
            >>> (bracket - fields["V0"].scale(2)).is_zero
            True
        """
        ring = _same_ring(X, Y)
        components = []
        for i in range(ring.arity):
            total = ring.zero()
            for j, name in enumerate(ring.names):
                total = total + X[j] * Y[i].diff(name) - Y[j] * X[i].diff(name)
            components.append(total)
        return VectorField(ring, components)

    @staticmethod
    def lie_derivative_scalar(X: VectorField, f: MultiPoly) -> MultiPoly:
        """``L_X f = sum_i X^i df/dx_i``."""
        ring = _same_ring(X, f)
        total = ring.zero()
        for component, name in zip(X, ring.names):
            total = total + component * f.diff(name)
        return total

    @staticmethod
    def lie_derivative_bivector(X: VectorField, pi: PoissonTensor) -> PoissonTensor:
        """
        Lie derivative of a bivector field.

        ``(L_X pi)^{ij} = sum_k (X^k d_k pi^{ij} - pi^{kj} d_k X^i - pi^{ik} d_k X^j)``.

        Returns:
            PoissonTensor: The (antisymmetric) derivative; not necessarily Poisson.
        """
        ring = _same_ring(X, pi)
        names = ring.names
        n = ring.arity
        dX = [[X[i].diff(name) for name in names] for i in range(n)]
        rows: List[List[MultiPoly]] = [[ring.zero()] * n for _ in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                total = ring.zero()
                for k, name in enumerate(names):
                    total = (
                        total
                        + X[k] * pi.entry(i, j).diff(name)
                        - pi.entry(k, j) * dX[i][k]
                        - pi.entry(i, k) * dX[j][k]
                    )
                rows[i][j] = total
                rows[j][i] = -total
        return PoissonTensor(ring, rows)

    @staticmethod
    def conformal_residual(
        X: VectorField, pi: PoissonTensor, lam: Scalar, H: MultiPoly, nu: Scalar
    ) -> Tuple[PoissonTensor, MultiPoly]:
        """
        Residuals ``(L_X pi - lam*pi, L_X H - nu*H)``.

        ``X`` is a conformal symmetry of ``(pi, H)`` with factors ``(lam, nu)`` exactly
        when both are zero.
        """
        _same_ring(X, pi, H)
        bivector = PoissonService.lie_derivative_bivector(X, pi) - pi.scale(lam)
        scalar = PoissonService.lie_derivative_scalar(X, H) - H.scale(nu)
        return bivector, scalar

    @staticmethod
    def canonical_pairs(ring: Ring) -> List[Tuple[str, str]]:
        """``(q_i, p_i)`` name pairs present in ``ring``, in ring order."""
        return [
            (name, "p" + name[1:])
            for name in ring.names
            if name.startswith("q") and "p" + name[1:] in ring
        ]

    @staticmethod
    def canonical_bracket(F: Function, G: Function) -> Function:
        """
        Canonical bracket ``{F, G} = sum_i (dF/dq_i dG/dp_i - dF/dp_i dG/dq_i)``.

        With this sign ``{u, H}`` reproduces Hamilton's equations ``q' = H_p, p' = -H_q``.
        Works for polynomials and rational functions; a mixed pair returns a RationalFn.

        Raises:
            RingMismatchError: If the operands live in different rings.

        Examples:
            >>> q1, q2, p1, p2 = CANONICAL_RING.gens()
            >>> print(PoissonService.canonical_bracket(q1, p1))
            1
        """
        ring = _same_ring(F, G)
        if isinstance(F, RationalFn) != isinstance(G, RationalFn):
            F, G = (f if isinstance(f, RationalFn) else RationalFn(f) for f in (F, G))
        total = None
        for q, p in PoissonService.canonical_pairs(ring):
            term = F.diff(q) * G.diff(p) - F.diff(p) * G.diff(q)
            total = term if total is None else total + term
        if total is None:
            return F * 0
        return total

    @staticmethod
    def poisson_bracket(pi: PoissonTensor, F: MultiPoly, G: MultiPoly) -> MultiPoly:
        """``{F, G}_pi = grad F . pi . grad G``."""
        ring = _same_ring(pi, F, G)
        grad_F = [F.diff(name) for name in ring.names]
        grad_G = [G.diff(name) for name in ring.names]
        total = ring.zero()
        for i, j, entry in pi.upper():
            total = total + entry * (grad_F[i] * grad_G[j] - grad_F[j] * grad_G[i])
        return total

    @staticmethod
    def jacobian(phi: PolyMap) -> Matrix:
        """Row ``a`` holds the partial derivatives of component ``a`` by each source variable."""
        return tuple(
            tuple(component.diff(name) for name in phi.source.names)
            for component in phi.components
        )

    @staticmethod
    def submersion_certificate(phi: PolyMap) -> Optional[Tuple[Tuple[int, ...], Fraction]]:
        """
        Find a maximal minor of the Jacobian that is a nonzero constant.

        Such a minor proves the Jacobian has full rank everywhere, i.e. ``phi`` is a
        submersion.

        Returns:
            Optional[Tuple[Tuple[int, ...], Fraction]]: 0-based source columns and the
            minor's value, or None when no constant nonzero minor exists.
        """
        jac = PoissonService.jacobian(phi)
        rank = phi.target.arity
        if rank > phi.source.arity:
            return None
        for cols in combinations(range(phi.source.arity), rank):
            minor = _determinant([tuple(row[c] for c in cols) for row in jac])
            if minor.is_constant and not minor.is_zero:
                return cols, minor.constant_term
        return None

    @staticmethod
    def pushforward_residual(
        phi: PolyMap, F_src: VectorField, F_tgt: VectorField
    ) -> Tuple[MultiPoly, ...]:
        """
        ``Dphi . F_src - F_tgt o phi``, one component per target variable, over the source ring.

        Zero exactly when ``phi`` maps integral curves of ``F_src`` onto those of ``F_tgt``.

        Raises:
            RingMismatchError: If the fields do not live on the map's source and target.
        """
        if F_src.ring != phi.source or F_tgt.ring != phi.target:
            raise RingMismatchError(
                f"Fields over {F_src.ring!r}, {F_tgt.ring!r} for a map {phi.source!r} -> {phi.target!r}",
                field="ring",
            )
        jac = PoissonService.jacobian(phi)
        residual = []
        for row, target_component in zip(jac, F_tgt):
            total = phi.source.zero()
            for partial, source_component in zip(row, F_src):
                if not partial.is_zero:
                    total = total + partial * source_component
            residual.append(total - phi.pullback(target_component))
        return tuple(residual)

    @staticmethod
    def poisson_map_residual(phi: PolyMap, pi: PoissonTensor) -> Matrix:
        """
        Entry ``(i, j)`` is ``{u_i o phi, u_j o phi}_canonical - pi^{ij} o phi``.

        Zero exactly when ``phi`` carries the canonical structure of its source onto ``pi``.
        """
        if pi.ring != phi.target:
            raise RingMismatchError(
                f"Tensor over {pi.ring!r} for a map into {phi.target!r}", field="ring"
            )
        n = phi.target.arity
        return tuple(
            tuple(
                PoissonService.canonical_bracket(phi.components[i], phi.components[j])
                - phi.pullback(pi.entry(i, j))
                for j in range(n)
            )
            for i in range(n)
        )
