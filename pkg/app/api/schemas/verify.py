"""
Pydantic schemas for the symbolic verification suite.

Defines schemas for:
- Verification requests
- Per-check results
- The verification report (also the JSON file written by ``rikitake verify --json``)
"""

from typing import List, Literal, Optional

from pydantic import BaseModel, Field, field_validator

from app.api.algebra.parser import parse_rational
from app.api.core.config import get_settings

settings = get_settings()


class VerifyRequest(BaseModel):
    """
    Schema for running the verification suite.

    Attributes:
        beta (str): Rational literal such as ``"1"``, ``"3/2"`` or ``"-2"``.
        seed (int): Seed for the sample points logged with falsification checks.
        extended (bool): Append the extended checks to the 26 catalog checks.

    Examples:
        >>> request = VerifyRequest(beta="1/2", extended=True)
    """

    beta: str = Field(default=settings.DEFAULT_BETA, description="Rational parameter beta")
    seed: int = Field(default=settings.DEFAULT_SEED, ge=0)
    extended: bool = False

    @field_validator("beta")
    @classmethod
    def validate_beta(cls, v: str) -> str:
        """Ensure beta is an exact rational literal."""
        parse_rational(v)
        return v.strip()


class CheckResult(BaseModel):
    """
    Outcome of one named check.

    Attributes:
        name (str): Stable check identifier, e.g. ``"jacobi-pibeta"``.
        status (str): ``"pass"``, ``"fail"`` or ``"skipped"``.
        residual (Optional[str]): Canonical text of the residual; None when skipped.
    """

    name: str
    status: Literal["pass", "fail", "skipped"]
    residual: Optional[str] = None


class VerifyReport(BaseModel):
    """
    Report of a verification run, in catalog order.

    Attributes:
        beta (str): Parameter as given.
        seed (int): Seed used for witness points.
        checks (List[CheckResult]): One entry per check.
    """

    beta: str
    seed: int
    checks: List[CheckResult]

    @property
    def passed(self) -> bool:
        return all(check.status != "fail" for check in self.checks)
