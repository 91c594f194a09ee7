"""
Integration service for floating-point trajectories.

Handles:
- Compiling exact polynomial fields into numpy evaluators
- Classical RK4 and implicit-midpoint steps
- Trajectories and parallel batches of trajectories
- Invariant drift along a trajectory
- The numeric conjugacy gap between the R^4 realization and the R^3 system
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from typing import Callable, Dict, List, Literal, Optional, Sequence

import numpy as np
from pydantic import BaseModel, ConfigDict

from app.api.algebra.polynomial import MultiPoly, Ring, Scalar
from app.api.core.config import get_settings
from app.api.core.errors import ArityMismatchError, ConvergenceError, ParameterDomainError
from app.api.models.base import PolyMap, VectorField
from app.api.models.rikitake import canonical_system, phi_map, rikitake_field

settings = get_settings()
logger = logging.getLogger(__name__)

Method = Literal["rk4", "midpoint"]
Evaluator = Callable[[np.ndarray], np.ndarray]


class CompiledPolys:
    """
    Polynomials over one ring flattened for binary64 evaluation.

    Monomials are rows of an exponent matrix ``E`` (``m x n``) and coefficients a
    matrix ``C`` (``m x outputs``); a point ``x`` evaluates as ``prod(x**E) @ C``.
    Leading axes of ``x`` are batch axes.

    Examples:
        >>> f = CompiledPolys.from_field(rikitake_field(0))
        >>> f(np.array([1.0, 2.0, 3.0]))
        array([ 6.,  3., -2.])
    """

    def __init__(self, ring: Ring, polys: Sequence[MultiPoly]):
        monomials = sorted(
            {exps for poly in polys for exps in poly.terms},
            key=lambda e: (sum(e), e),
            reverse=True,
        )
        index = {exps: row for row, exps in enumerate(monomials)}
        self.ring = ring
        self.exponents = np.array(monomials, dtype=np.int64).reshape(len(monomials), ring.arity)
        self.coefficients = np.zeros((len(monomials), len(polys)))
        for col, poly in enumerate(polys):
            if poly.ring != ring:
                raise ArityMismatchError(f"Polynomial over {poly.ring!r} in a {ring!r} bundle")
            for exps, coeff in poly.terms.items():
                self.coefficients[index[exps], col] = float(coeff)

    @classmethod
    def from_field(cls, field: VectorField) -> "CompiledPolys":
        return cls(field.ring, field.components)

    @classmethod
    def from_map(cls, phi: PolyMap) -> "CompiledPolys":
        return cls(phi.source, phi.components)

    @classmethod
    def from_functions(cls, ring: Ring, functions: Sequence[MultiPoly]) -> "CompiledPolys":
        return cls(ring, functions)

    @property
    def arity(self) -> int:
        return self.ring.arity

    @property
    def outputs(self) -> int:
        return self.coefficients.shape[1]

    def __call__(self, x: np.ndarray) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        if x.shape[-1] != self.arity:
            raise ArityMismatchError(
                f"Point of dimension {x.shape[-1]} for a ring of arity {self.arity}"
            )
        monomials = np.prod(x[..., None, :] ** self.exponents, axis=-1)
        return monomials @ self.coefficients


class NumericState(BaseModel):
    """One sample of a trajectory."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    time: float
    coords: np.ndarray


class Trajectory(BaseModel):
    """
    Uniformly sampled numeric solution.

    Attributes:
        system (str): System identifier, e.g. ``"r3"`` or ``"r4"``.
        beta (Fraction): Parameter the field was built with.
        method (str): ``"rk4"`` or ``"midpoint"``.
        dt (float): Step size.
        times (np.ndarray): ``k * dt`` for ``k = 0..n_steps``.
        states (np.ndarray): One row per sample.
    """

    model_config = ConfigDict(arbitrary_types_allowed=True)

    system: str
    beta: Fraction
    method: Method
    dt: float
    times: np.ndarray
    states: np.ndarray

    @property
    def samples(self) -> List[NumericState]:
        return [NumericState(time=t, coords=x) for t, x in zip(self.times, self.states)]


class Drift(BaseModel):
    """Deviation of a function from its initial value along a trajectory."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    max_abs_dev: float
    final_dev: float
    series: np.ndarray


def rk4_step(f: Evaluator, x: np.ndarray, dt: float) -> np.ndarray:
    k1 = f(x)
    k2 = f(x + 0.5 * dt * k1)
    k3 = f(x + 0.5 * dt * k2)
    k4 = f(x + dt * k3)
    return x + dt * (k1 + 2 * k2 + 2 * k3 + k4) / 6


def midpoint_step(
    f: Evaluator,
    x: np.ndarray,
    dt: float,
    tol: Optional[float] = None,
    max_iter: Optional[int] = None,
) -> np.ndarray:
    """
    Implicit midpoint ``y = x + dt * f((x + y) / 2)`` by fixed-point iteration.

    Starts from an explicit Euler predictor. Converged when the max-norm of the
    change between iterates is at most ``tol * max(1, |x|_inf)``.

    Raises:
        ConvergenceError: If ``max_iter`` iterations do not converge.
    """
    tol = settings.MIDPOINT_TOL if tol is None else tol
    max_iter = settings.MIDPOINT_MAX_ITER if max_iter is None else max_iter
    threshold = tol * max(1.0, float(np.max(np.abs(x))))
    y = x + dt * f(x)
    for _ in range(max_iter):
        y_next = x + dt * f(0.5 * (x + y))
        if np.max(np.abs(y_next - y)) <= threshold:
            return y_next
        y = y_next
    logger.error(f"Implicit midpoint did not converge in {max_iter} iterations at dt={dt}")
    raise ConvergenceError(
        f"Implicit midpoint did not converge in {max_iter} iterations", field="dt"
    )


INTEGRATORS: Dict[str, Callable[[Evaluator, np.ndarray, float], np.ndarray]] = {
    "rk4": rk4_step,
    "midpoint": midpoint_step,
}


class IntegrationService:
    """Fixed-step integration of compiled polynomial fields."""

    @staticmethod
    def get_integrator(method: str) -> Callable[[Evaluator, np.ndarray, float], np.ndarray]:
        """
        Look up a one-step method by name.

        Raises:
            ParameterDomainError: For an unknown method.
        """
        try:
            return INTEGRATORS[method]
        except KeyError:
            raise ParameterDomainError(
                f"Unknown method '{method}'; expected one of {', '.join(INTEGRATORS)}",
                field="method",
            ) from None

    @staticmethod
    def step(F: CompiledPolys, s: NumericState, dt: float, method: Method = "rk4") -> NumericState:
        """
        Advance one state by one step.

        Raises:
            ParameterDomainError: If ``dt`` is zero or the method is unknown.
            ConvergenceError: If a midpoint step does not converge.

        Examples:
            >>> F = CompiledPolys.from_field(rikitake_field(0))
            >>> s = IntegrationService.step(F, NumericState(time=0.0, coords=np.zeros(3)), 0.1)
            >>> s.coords
            array([0., 0., 0.])
        """
        if dt == 0:
            raise ParameterDomainError("Step size must be nonzero", field="dt")
        advance = IntegrationService.get_integrator(method)
        return NumericState(time=s.time + dt, coords=advance(F, np.asarray(s.coords, dtype=float), dt))

    @staticmethod
    def integrate(
        F: CompiledPolys,
        x0: Sequence[float],
        dt: float,
        n_steps: int,
        method: Method = "rk4",
        system: str = "custom",
        beta: Scalar = 0,
    ) -> Trajectory:
        """
        Integrate ``n_steps`` steps from ``x0``.

        Args:
            F (CompiledPolys): Compiled right-hand side.
            x0 (Sequence[float]): Initial state.
            dt (float): Nonzero step size.
            n_steps (int): At least 1.
            method (str): ``"rk4"`` or ``"midpoint"``.
            system (str): Identifier stored on the trajectory.
            beta (Scalar): Parameter stored on the trajectory.

        Returns:
            Trajectory: ``n_steps + 1`` samples at times ``k * dt``.

        Raises:
            ParameterDomainError: For zero ``dt``, ``n_steps < 1`` or an unknown method.
            ArityMismatchError: If ``x0`` does not match the field's dimension.
        """
        if dt == 0:
            raise ParameterDomainError("Step size must be nonzero", field="dt")
        if n_steps < 1:
            raise ParameterDomainError("At least one step is required", field="steps")
        advance = IntegrationService.get_integrator(method)
        x = np.array(x0, dtype=float)
        if x.shape != (F.arity,):
            raise ArityMismatchError(
                f"Initial state has {x.size} coordinates, system has {F.arity}", field="x0"
            )
        states = np.empty((n_steps + 1, F.arity))
        states[0] = x
        for k in range(1, n_steps + 1):
            x = advance(F, x, dt)
            states[k] = x
        logger.debug(f"Integrated {system} with {method}, dt={dt}, {n_steps} steps")
        return Trajectory(
            system=system,
            beta=Fraction(beta),
            method=method,
            dt=dt,
            times=np.arange(n_steps + 1) * dt,
            states=states,
        )

    @staticmethod
    def integrate_batch(
        F: CompiledPolys,
        x0s: Sequence[Sequence[float]],
        dt: float,
        n_steps: int,
        method: Method = "rk4",
        max_workers: Optional[int] = None,
    ) -> List[Trajectory]:
        """Integrate several initial states on a thread pool; results follow input order."""
        workers = max_workers or settings.MAX_WORKERS
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(
                pool.map(lambda x0: IntegrationService.integrate(F, x0, dt, n_steps, method), x0s)
            )

    @staticmethod
    def invariant_drift(traj: Trajectory, f: CompiledPolys) -> Drift:
        """
        Deviation of a scalar function from its value at the first sample.

        Raises:
            ArityMismatchError: If ``f`` is not a function of the trajectory's state.
        """
        if f.arity != traj.states.shape[1]:
            raise ArityMismatchError(
                f"Function of {f.arity} variables on a {traj.states.shape[1]}-dimensional trajectory"
            )
        values = f(traj.states)[:, 0]
        series = values - values[0]
        return Drift(
            max_abs_dev=float(np.max(np.abs(series))),
            final_dev=float(series[-1]),
            series=series,
        )

    @staticmethod
    def conjugacy_gap(
        beta: Scalar,
        w0: Sequence[float],
        dt: float,
        n_steps: int,
        method: Method = "rk4",
    ) -> float:
        """
        Largest max-norm distance between ``phi(w(t))`` and ``u(t)``.

        ``w`` solves Hamilton's equations from ``w0`` and ``u`` the 3-D system from
        ``phi(w0)``, both with the same method and step.

        Raises:
            ParameterDomainError: If beta = 0.
        """
        beta = Fraction(beta)
        phi = CompiledPolys.from_map(phi_map(beta))
        canonical = CompiledPolys.from_field(canonical_system(beta).F)
        reduced = CompiledPolys.from_field(rikitake_field(beta))
        w = IntegrationService.integrate(canonical, w0, dt, n_steps, method, "r4", beta)
        u0 = phi(np.asarray(w0, dtype=float))
        u = IntegrationService.integrate(reduced, u0, dt, n_steps, method, "r3", beta)
        return float(np.max(np.abs(phi(w.states) - u.states)))
