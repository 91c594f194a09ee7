"""
Pydantic schemas for trajectory simulation and numeric analysis.

Defines schemas for:
- Simulation requests and CSV-shaped responses
- Analysis requests (drift, conjugacy, newton-residual)
- The analysis summary
"""

from typing import Any, Dict, List, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator

from app.api.algebra.parser import parse_rational
from app.api.core.config import get_settings

settings = get_settings()

System = Literal["r3", "r4"]
Method = Literal["rk4", "midpoint"]
Mode = Literal["drift", "conjugacy", "newton-residual"]


class NumericRunRequest(BaseModel):
    """
    Shared flags of every numeric run.

    Attributes:
        system (str): ``"r3"`` for the 3-D system, ``"r4"`` for Hamilton's equations.
        beta (str): Rational or exact decimal literal.
        x0 (Optional[List[float]]): Initial state; the configured default when omitted.
        dt (float): Nonzero step size.
        steps (int): Number of steps, at least 1.
        method (str): ``"rk4"`` or ``"midpoint"``.
    """

    system: System = "r3"
    beta: str = settings.DEFAULT_BETA
    x0: Optional[List[float]] = None
    dt: float = settings.DEFAULT_DT
    steps: int = Field(default=settings.DEFAULT_STEPS, ge=1)
    method: Method = settings.DEFAULT_METHOD

    @field_validator("beta")
    @classmethod
    def validate_beta(cls, v: str) -> str:
        """Ensure beta is a rational or exact decimal literal."""
        parse_rational(v, allow_decimal=True)
        return v.strip()

    @field_validator("dt")
    @classmethod
    def validate_dt(cls, v: float) -> float:
        """Reject a zero step."""
        if v == 0:
            raise ValueError("Step size must be nonzero")
        return v


class SimulateRequest(NumericRunRequest):
    """
    Schema for integrating one trajectory.

    Examples:
        >>> request = SimulateRequest(system="r4", beta="1", x0=[0.4, 0, 0.3, 0.2], steps=100)
    """


class SimulateResponse(BaseModel):
    """
    Trajectory in the CSV layout.

    Attributes:
        header (List[str]): Column names, e.g. ``["t", "x", "y", "z", "H1", "H2"]``.
        rows (List[List[float]]): One row per sample.
    """

    header: List[str]
    rows: List[List[float]]


class AnalyzeRequest(NumericRunRequest):
    """
    Schema for a numeric analysis.

    Attributes:
        mode (str): ``"drift"``, ``"conjugacy"`` or ``"newton-residual"``.
        tol (Optional[float]): Pass threshold; the mode's configured tolerance when omitted.
    """

    mode: Mode
    tol: Optional[float] = Field(default=None, gt=0)


class AnalyzeSummary(BaseModel):
    """
    Summary of a numeric analysis.

    Attributes:
        mode (str): Analysis mode.
        params (Dict[str, Any]): Effective parameters.
        max_abs (float): Largest absolute deviation observed.
        passed (bool): ``max_abs <= tol``; serialized as ``"pass"``.
    """

    model_config = ConfigDict(populate_by_name=True)

    mode: Mode
    params: Dict[str, Any]
    max_abs: float
    passed: bool = Field(alias="pass")
