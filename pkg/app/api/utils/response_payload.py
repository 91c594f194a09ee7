"""
Standard JSON payload builders for the HTTP surface.

Every route answers with one of two shapes:
- success: ``{"status": "SUCCESS", "status_code", "message", "data"}``
- error: ``{"error", "message", "status_code", "errors"}``
"""

from typing import Any, Dict, List, Optional

from fastapi.encoders import jsonable_encoder
from fastapi.responses import JSONResponse

from app.api.core.errors import RikitakeError


def success_response(status_code: int, message: str, data: Optional[Dict[str, Any]] = None) -> JSONResponse:
    """
    Wrap a result in the success envelope.

    Args:
        status_code (int): HTTP status code, usually 200.
        message (str): Short description of the result.
        data (Optional[Dict[str, Any]]): Payload; an empty object when omitted.

    Returns:
        JSONResponse: The success envelope.

    Examples:
        >>> success_response(200, "Verification complete", {"passed": True})
    """
    payload = {
        "status": "SUCCESS",
        "status_code": status_code,
        "message": message,
        "data": data or {},
    }
    return JSONResponse(status_code=status_code, content=jsonable_encoder(payload))


def error_response(
    *,
    status_code: int,
    message: str,
    error: str = "ERROR",
    errors: Optional[Dict[str, List[str]]] = None,
) -> JSONResponse:
    """
    Wrap a failure in the error envelope.

    Args:
        status_code (int): HTTP status code (400, 404, 500, ...).
        message (str): Human-readable summary.
        error (str): Upper-snake machine-readable code, e.g. ``"PARAMETER_DOMAIN"``.
        errors (Optional[Dict[str, List[str]]]): Messages keyed by offending field.

    Returns:
        JSONResponse: The error envelope.
    """
    payload = {
        "error": error,
        "message": message,
        "status_code": status_code,
        "errors": errors or {},
    }
    return JSONResponse(status_code=status_code, content=jsonable_encoder(payload))


def domain_error_response(exc: RikitakeError, status_code: int = 400) -> JSONResponse:
    """
    Error envelope for an engine error, keyed by the field it concerns.

    Examples:
        >>> domain_error_response(ParameterDomainError("beta must be nonzero", field="beta"))
        >>> # {"error": "PARAMETER_DOMAIN", "message": "beta must be nonzero",
        >>> #  "status_code": 400, "errors": {"beta": ["beta must be nonzero"]}}
    """
    return error_response(
        status_code=status_code,
        message=exc.message,
        error=exc.error_code,
        errors=exc.to_errors(),
    )
