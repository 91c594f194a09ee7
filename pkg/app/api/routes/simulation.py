"""
Numeric simulation and analysis routes.

Endpoints:
- POST /simulate: Integrate one trajectory, returned in the CSV layout
- POST /analyze: Drift, conjugacy or newton-residual summary
"""

from fastapi import APIRouter, status

from app.api.routes.docs.simulation_docs import analyze_responses, simulate_responses
from app.api.schemas.simulation import AnalyzeRequest, SimulateRequest
from app.api.services.analysis_service import AnalysisService
from app.api.utils.response_payload import success_response

router = APIRouter(tags=["Simulation"])


@router.post("/simulate", responses=simulate_responses)
def simulate(payload: SimulateRequest):
    """
    Integrate the r3 or r4 system.

    Args:
        payload (SimulateRequest): System, beta, initial state, step, steps and method.

    Returns:
        JSONResponse: ``header`` and ``rows`` of the trajectory table.

    Notes:
        - r4 requires beta != 0 (400 PARAMETER_DOMAIN otherwise).
    """
    result = AnalysisService.simulate(payload)
    return success_response(
        status_code=status.HTTP_200_OK,
        message="Trajectory computed",
        data=result.model_dump(),
    )


@router.post("/analyze", responses=analyze_responses)
def analyze(payload: AnalyzeRequest):
    """
    Run a numeric analysis and report whether it stayed within tolerance.

    A summary with ``pass`` false is still a 200 response; the flag carries the outcome.
    """
    summary = AnalysisService.analyze(payload)
    return success_response(
        status_code=status.HTTP_200_OK,
        message="Analysis complete",
        data=summary.model_dump(by_alias=True),
    )
