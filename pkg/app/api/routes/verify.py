"""
Symbolic verification routes.

Endpoints:
- POST /verify: Run the certificate suite for one beta
- GET /verify/checks: List the check names in catalog order
"""

from fastapi import APIRouter, Query, status

from app.api.routes.docs.verify_docs import list_checks_responses, run_verification_responses
from app.api.schemas.verify import VerifyRequest
from app.api.services.verification_service import VerificationService
from app.api.utils.response_payload import success_response

router = APIRouter(prefix="/verify", tags=["Verification"])


@router.post("", responses=run_verification_responses)
def run_verification(payload: VerifyRequest):
    """
    Run the named checks and return the JSON report.

    Args:
        payload (VerifyRequest): beta, seed and the extended flag.

    Returns:
        JSONResponse: The report plus ``passed`` (no check failed).

    Notes:
        - beta = 0 reports the beta-family checks as skipped.
        - Runs synchronously in the worker thread pool; the suite is CPU-bound.
    """
    report = VerificationService.verify(payload.beta, payload.seed, payload.extended)
    return success_response(
        status_code=status.HTTP_200_OK,
        message="Verification complete",
        data={**report.model_dump(), "passed": report.passed},
    )


@router.get("/checks", responses=list_checks_responses)
def list_checks(extended: bool = Query(False, description="Include the extended checks")):
    """List check names in the order they are reported."""
    return success_response(
        status_code=status.HTTP_200_OK,
        message="Check catalog",
        data={"checks": VerificationService.check_names(extended)},
    )
