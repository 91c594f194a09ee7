"""
Analysis service behind the simulate and analyze commands.

Handles:
- Building the r3 / r4 systems with their monitored invariants
- Trajectory tables in the CSV layout
- Drift, conjugacy and on-trajectory Newton-residual summaries
"""

import logging
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import numpy as np

from app.api.algebra.parser import parse_rational
from app.api.algebra.polynomial import MultiPoly
from app.api.core.config import get_settings
from app.api.core.errors import ArityMismatchError, ParameterDomainError
from app.api.models import (
    CANONICAL_RING,
    EXTENDED_CANONICAL_RING,
    JET_RING,
    VectorField,
    canonical_system,
    invariant_functions,
    lagrangian_system,
    rikitake_field,
)
from app.api.schemas.simulation import (
    AnalyzeRequest,
    AnalyzeSummary,
    NumericRunRequest,
    SimulateRequest,
    SimulateResponse,
)
from app.api.services.integration_service import CompiledPolys, IntegrationService, Trajectory
from app.api.services.symmetry_service import SymmetryService

settings = get_settings()
logger = logging.getLogger(__name__)


def parse_vector(text: str) -> List[float]:
    """
    Parse a comma-separated list of numbers.

    Examples:
        >>> parse_vector("0.4,0,0.3,0.2")
        [0.4, 0.0, 0.3, 0.2]
    """
    try:
        return [float(part) for part in text.split(",")]
    except ValueError:
        raise ParameterDomainError(
            f"'{text}' is not a comma-separated list of numbers", field="x0"
        ) from None


class SystemSpec:
    """
    A numeric system: field, state names and the monitored invariants.

    Attributes:
        name (str): ``"r3"`` or ``"r4"``.
        beta (Fraction): Parameter.
        field (VectorField): Right-hand side.
        invariant_names (List[str]): CSV column names of the invariants.
        invariants (List[MultiPoly]): The invariants, over the field's ring.
    """

    def __init__(self, name: str, beta: Fraction):
        self.name = name
        self.beta = beta
        if name == "r4":
            canonical = canonical_system(beta)
            self.field: VectorField = canonical.F
            self.invariant_names = ["H", "p2_invariant"]
            self.invariants: List[MultiPoly] = [canonical.H, CANONICAL_RING.var("p2")]
            self.default_x0 = settings.R4_X0
        else:
            self.field = rikitake_field(beta)
            functions = invariant_functions(beta)
            if beta == 0:
                self.invariant_names = ["H1", "H2"]
                self.invariants = [functions.H1, functions.H2]
            else:
                self.invariant_names = ["Hbeta", "Cbeta"]
                self.invariants = [functions.Hbeta, functions.Cbeta]
            self.default_x0 = settings.R3_X0

    @property
    def header(self) -> List[str]:
        return ["t"] + list(self.field.ring.names) + self.invariant_names

    def initial_state(self, x0: Optional[Sequence[float]]) -> List[float]:
        values = list(x0) if x0 is not None else parse_vector(self.default_x0)
        if len(values) != self.field.ring.arity:
            raise ArityMismatchError(
                f"{self.name} needs {self.field.ring.arity} initial coordinates, got {len(values)}",
                field="x0",
            )
        return values


class AnalysisService:
    """Numeric runs over the r3 and r4 systems."""

    @staticmethod
    def run(
        request: NumericRunRequest, system: Optional[str] = None
    ) -> Tuple[SystemSpec, Trajectory]:
        """
        Integrate the requested system.

        Raises:
            ParameterDomainError: For r4 with beta = 0.
            ArityMismatchError: If ``x0`` has the wrong length.
        """
        beta = parse_rational(request.beta, allow_decimal=True)
        spec = SystemSpec(system or request.system, beta)
        x0 = spec.initial_state(request.x0)
        field = CompiledPolys.from_field(spec.field)
        traj = IntegrationService.integrate(
            field, x0, request.dt, request.steps, request.method, spec.name, beta
        )
        return spec, traj

    @staticmethod
    def table(spec: SystemSpec, traj: Trajectory) -> np.ndarray:
        """Columns ``t``, the state and the invariants, one row per sample."""
        invariants = CompiledPolys.from_functions(spec.field.ring, spec.invariants)
        return np.column_stack([traj.times, traj.states, invariants(traj.states)])

    @staticmethod
    def simulate(request: SimulateRequest) -> SimulateResponse:
        """
        Integrate one trajectory and lay it out as the CSV table.

        Examples:
            >>> result = AnalysisService.simulate(SimulateRequest(system="r3", beta="0", steps=10))
            >>> result.header
            ['t', 'x', 'y', 'z', 'H1', 'H2']
        """
        spec, traj = AnalysisService.run(request)
        return SimulateResponse(header=spec.header, rows=AnalysisService.table(spec, traj).tolist())

    @staticmethod
    def drift(request: AnalyzeRequest) -> AnalyzeSummary:
        """Largest deviation of the system's two invariants from their initial values."""
        spec, traj = AnalysisService.run(request)
        deviations = {}
        for name, poly in zip(spec.invariant_names, spec.invariants):
            compiled = CompiledPolys.from_functions(spec.field.ring, [poly])
            deviations[name] = IntegrationService.invariant_drift(traj, compiled).max_abs_dev
        tol = request.tol if request.tol is not None else settings.DRIFT_TOL
        max_abs = max(deviations.values())
        return AnalysisService._summary(
            request, spec.name, traj.states[0], max_abs, tol, invariants=deviations
        )

    @staticmethod
    def conjugacy(request: AnalyzeRequest) -> AnalyzeSummary:
        """Gap between the projected R^4 trajectory and the R^3 trajectory."""
        beta = parse_rational(request.beta, allow_decimal=True)
        spec = SystemSpec("r4", beta)
        w0 = spec.initial_state(request.x0)
        gap = IntegrationService.conjugacy_gap(beta, w0, request.dt, request.steps, request.method)
        tol = request.tol if request.tol is not None else settings.CONJUGACY_TOL
        return AnalysisService._summary(request, "r4", w0, gap, tol)

    @staticmethod
    def newton_residual(request: AnalyzeRequest) -> AnalyzeSummary:
        """
        Newton's equations evaluated on numeric jets along an r4 trajectory.

        Velocities and accelerations at each sample come from the exact chain rule
        applied to Hamilton's equations, so the residual is roundoff only.
        """
        spec, traj = AnalysisService.run(request, system="r4")
        canonical = canonical_system(spec.beta)
        js = lagrangian_system(spec.beta)
        images = SymmetryService.canonical_jet_images(canonical)
        to_jets = CompiledPolys.from_functions(
            EXTENDED_CANONICAL_RING, [images[name] for name in JET_RING.names]
        )
        equations = CompiledPolys.from_functions(JET_RING, js.equations)
        jets = to_jets(np.column_stack([traj.times, traj.states]))
        max_abs = float(np.max(np.abs(equations(jets))))
        tol = request.tol if request.tol is not None else settings.NEWTON_TOL
        return AnalysisService._summary(request, "r4", traj.states[0], max_abs, tol)

    @staticmethod
    def analyze(request: AnalyzeRequest) -> AnalyzeSummary:
        """Dispatch on ``request.mode``."""
        handlers = {
            "drift": AnalysisService.drift,
            "conjugacy": AnalysisService.conjugacy,
            "newton-residual": AnalysisService.newton_residual,
        }
        summary = handlers[request.mode](request)
        logger.info(f"analyze {summary.mode}: max_abs={summary.max_abs:.3e} pass={summary.passed}")
        return summary

    @staticmethod
    def _summary(
        request: AnalyzeRequest,
        system: str,
        x0: Sequence[float],
        max_abs: float,
        tol: float,
        **extra,
    ) -> AnalyzeSummary:
        params = {
            "system": system,
            "beta": request.beta,
            "x0": [float(v) for v in x0],
            "dt": request.dt,
            "steps": request.steps,
            "method": request.method,
            "tol": tol,
            **extra,
        }
        return AnalyzeSummary(mode=request.mode, params=params, max_abs=max_abs, passed=max_abs <= tol)
