"""
Command-line entry point: ``rikitake verify | simulate | analyze``.

Exit codes: 0 when every check or analysis passes, 1 when something fails
(or an output file cannot be written), 2 for usage and parameter errors.
"""

import json
import logging
from enum import Enum
from pathlib import Path
from typing import Callable, Optional, TypeVar

import typer
from pydantic import ValidationError

from app.api.algebra.parser import parse_rational
from app.api.core.config import configure_logging, get_settings
from app.api.core.errors import ConvergenceError, RikitakeError
from app.api.schemas.simulation import AnalyzeRequest, SimulateRequest
from app.api.services.analysis_service import AnalysisService, parse_vector
from app.api.services.verification_service import VerificationService
from app.api.utils.serialization import render_csv, write_csv, write_json

settings = get_settings()
logger = logging.getLogger(__name__)

app = typer.Typer(
    name="rikitake",
    help="Exact certificates and numeric analysis for the Rikitake system.",
    no_args_is_help=True,
    add_completion=False,
)

EXIT_FAIL = 1
EXIT_USAGE = 2

T = TypeVar("T")


class SystemName(str, Enum):
    r3 = "r3"
    r4 = "r4"


class MethodName(str, Enum):
    rk4 = "rk4"
    midpoint = "midpoint"


class ModeName(str, Enum):
    drift = "drift"
    conjugacy = "conjugacy"
    newton_residual = "newton-residual"


@app.callback()
def main() -> None:
    configure_logging(settings)


def _usage_guard(build: Callable[[], T]) -> T:
    """Run ``build``; map engine and validation errors to exit code 2."""
    try:
        return build()
    except ConvergenceError as exc:
        typer.echo(f"Error: {exc.error_code}: {exc.message}", err=True)
        raise typer.Exit(code=EXIT_FAIL) from None
    except RikitakeError as exc:
        typer.echo(f"Error: {exc.error_code}: {exc.message}", err=True)
        raise typer.Exit(code=EXIT_USAGE) from None
    except ValidationError as exc:
        for error in exc.errors():
            field = ".".join(str(loc) for loc in error["loc"]) or "input"
            typer.echo(f"Error: {field}: {error['msg']}", err=True)
        raise typer.Exit(code=EXIT_USAGE) from None


def _write(writer: Callable[[], None], path: Path) -> None:
    try:
        writer()
    except OSError as exc:
        logger.error(f"Could not write {path}: {exc}")
        typer.echo(f"Error: could not write {path}: {exc.strerror or exc}", err=True)
        raise typer.Exit(code=EXIT_FAIL) from None


def _vector(x0: Optional[str]):
    return _usage_guard(lambda: parse_vector(x0)) if x0 is not None else None


@app.command()
def verify(
    beta: str = typer.Option(settings.DEFAULT_BETA, "--beta", help="Rational beta, e.g. 1, 3/2, -2"),
    json_path: Optional[Path] = typer.Option(None, "--json", help="Write the JSON report here"),
    seed: int = typer.Option(settings.DEFAULT_SEED, "--seed", min=0, help="Seed for witness points"),
    extended: bool = typer.Option(False, "--extended", help="Also run the extended checks"),
) -> None:
    """Run the named symbolic checks and print one row per check."""
    try:
        parse_rational(beta)
    except ValueError as exc:
        raise typer.BadParameter(str(exc), param_hint="--beta") from None

    report = VerificationService.verify(beta, seed, extended)
    width = max(len(check.name) for check in report.checks)
    for check in report.checks:
        residual = check.residual if check.residual is not None else "-"
        typer.echo(f"{check.name:<{width}}  {check.status.upper():<7}  {residual}")

    if json_path is not None:
        _write(lambda: write_json(json_path, report.model_dump()), json_path)

    failed = sum(check.status == "fail" for check in report.checks)
    if failed:
        typer.echo(f"{failed} check(s) failed", err=True)
        raise typer.Exit(code=EXIT_FAIL)


@app.command()
def simulate(
    system: SystemName = typer.Option(SystemName.r3, "--system"),
    beta: str = typer.Option(settings.DEFAULT_BETA, "--beta", help="Rational or decimal beta"),
    x0: Optional[str] = typer.Option(None, "--x0", help="Comma-separated initial state"),
    dt: float = typer.Option(settings.DEFAULT_DT, "--dt"),
    steps: int = typer.Option(settings.DEFAULT_STEPS, "--steps"),
    method: MethodName = typer.Option(MethodName(settings.DEFAULT_METHOD), "--method"),
    out: Optional[Path] = typer.Option(None, "--out", help="CSV path; stdout when omitted"),
) -> None:
    """Integrate r3 or r4 and write the trajectory CSV."""
    vector = _vector(x0)
    result = _usage_guard(
        lambda: AnalysisService.simulate(
            SimulateRequest(
                system=system.value,
                beta=beta,
                x0=vector,
                dt=dt,
                steps=steps,
                method=method.value,
            )
        )
    )
    if out is None:
        typer.echo(render_csv(result.header, result.rows), nl=False)
        return
    _write(lambda: write_csv(out, result.header, result.rows), out)


@app.command()
def analyze(
    mode: ModeName = typer.Option(..., "--mode"),
    system: SystemName = typer.Option(SystemName.r3, "--system"),
    beta: str = typer.Option(settings.DEFAULT_BETA, "--beta", help="Rational or decimal beta"),
    x0: Optional[str] = typer.Option(None, "--x0", help="Comma-separated initial state"),
    dt: float = typer.Option(settings.DEFAULT_DT, "--dt"),
    steps: int = typer.Option(settings.DEFAULT_STEPS, "--steps"),
    method: MethodName = typer.Option(MethodName(settings.DEFAULT_METHOD), "--method"),
    tol: Optional[float] = typer.Option(None, "--tol", help="Pass threshold"),
    out: Optional[Path] = typer.Option(None, "--out", help="Also write the JSON summary here"),
) -> None:
    """Drift, conjugacy or newton-residual; prints the JSON summary."""
    vector = _vector(x0)
    summary = _usage_guard(
        lambda: AnalysisService.analyze(
            AnalyzeRequest(
                mode=mode.value,
                system=system.value,
                beta=beta,
                x0=vector,
                dt=dt,
                steps=steps,
                method=method.value,
                tol=tol,
            )
        )
    )
    payload = summary.model_dump(by_alias=True)
    typer.echo(json.dumps(payload, indent=2))
    if out is not None:
        _write(lambda: write_json(out, payload), out)
    if not summary.passed:
        raise typer.Exit(code=EXIT_FAIL)


if __name__ == "__main__":
    app()
