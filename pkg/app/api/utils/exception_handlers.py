"""
Global exception handlers for the FastAPI application.

Every failure leaves the service in the standard error envelope; stack traces
are logged, never returned.
"""

import logging

from fastapi import Request, status
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse
from starlette.exceptions import HTTPException as StarletteHTTPException

from app.api.core.errors import RikitakeError
from app.api.utils.response_payload import domain_error_response, error_response

logger = logging.getLogger(__name__)

HTTP_ERROR_CODES = {
    400: "BAD_REQUEST",
    404: "NOT_FOUND",
    405: "METHOD_NOT_ALLOWED",
    422: "UNPROCESSABLE_ENTITY",
    500: "INTERNAL_SERVER_ERROR",
}


def rikitake_exception_handler(request: Request, exc: RikitakeError) -> JSONResponse:
    """
    Handle engine errors (parse errors, beta = 0 requests, arity mismatches, ...).

    Examples:
        >>> POST /api/v1/simulate {"system": "r4", "beta": "0"}
        >>> # Response 400:
        >>> {
        >>>   "error": "PARAMETER_DOMAIN",
        >>>   "message": "The symplectic realization is defined only for beta != 0",
        >>>   "status_code": 400,
        >>>   "errors": {"beta": ["The symplectic realization is defined only for beta != 0"]}
        >>> }
    """
    logger.debug(f"{request.url.path}: {exc.error_code}: {exc.message}")
    return domain_error_response(exc, status.HTTP_400_BAD_REQUEST)


def validation_exception_handler(request: Request, exc: RequestValidationError) -> JSONResponse:
    """
    Handle request-body validation errors.

    Field locations drop the leading ``body`` segment, so an unparseable beta is
    reported under ``errors["beta"]``.
    """
    errors = {}
    for error in exc.errors():
        field = ".".join(str(loc) for loc in error["loc"][1:]) or "body"
        errors.setdefault(field, []).append(error["msg"])
    return error_response(
        status_code=status.HTTP_400_BAD_REQUEST,
        message="Validation failed",
        error="VALIDATION_ERROR",
        errors=errors,
    )


def http_exception_handler(request: Request, exc: StarletteHTTPException) -> JSONResponse:
    """Handle HTTP exceptions such as unknown routes."""
    return error_response(
        status_code=exc.status_code,
        message=str(exc.detail),
        error=HTTP_ERROR_CODES.get(exc.status_code, "ERROR"),
    )


def generic_exception_handler(request: Request, exc: Exception) -> JSONResponse:
    """Handle anything unexpected as a 500 with a generic message."""
    logger.error(f"Unhandled exception: {exc}", exc_info=True)
    return error_response(
        status_code=status.HTTP_500_INTERNAL_SERVER_ERROR,
        message="An unexpected error occurred",
        error="INTERNAL_SERVER_ERROR",
    )
