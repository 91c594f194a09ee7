"""
FastAPI application entry point.

Initializes the FastAPI app, registers routes, and configures exception handlers.
"""

import logging
from contextlib import asynccontextmanager

from fastapi import FastAPI
from fastapi.exceptions import RequestValidationError
from starlette.exceptions import HTTPException as StarletteHTTPException

from app.api.core.config import configure_logging, get_settings
from app.api.core.errors import RikitakeError
from app.api.routes import simulation, verify
from app.api.services.verification_service import VerificationService
from app.api.utils.exception_handlers import (
    generic_exception_handler,
    http_exception_handler,
    rikitake_exception_handler,
    validation_exception_handler,
)

settings = get_settings()
configure_logging(settings)

logger = logging.getLogger(__name__)


@asynccontextmanager
async def lifespan(app: FastAPI):
    checks = VerificationService.check_names(extended=True)
    logger.info(
        f"{settings.APP_NAME} ready: {len(checks)} checks, default beta {settings.DEFAULT_BETA}, "
        f"integrator {settings.DEFAULT_METHOD}"
    )
    yield
    logger.info(f"{settings.APP_NAME} shutting down")


app = FastAPI(
    title=settings.APP_NAME,
    description="Exact Poisson, symmetry and conjugacy certificates for the Rikitake system, "
    "plus numeric trajectory analysis",
    version="1.0.0",
    docs_url="/docs",
    redoc_url="/redoc",
    lifespan=lifespan,
)

app.add_exception_handler(RikitakeError, rikitake_exception_handler)
app.add_exception_handler(RequestValidationError, validation_exception_handler)
app.add_exception_handler(StarletteHTTPException, http_exception_handler)
app.add_exception_handler(Exception, generic_exception_handler)


app.include_router(verify.router, prefix=settings.API_V1_PREFIX)
app.include_router(simulation.router, prefix=settings.API_V1_PREFIX)


@app.get("/")
async def root():
    """
    Service banner with links to the interactive docs.

    Returns:
        dict: Basic API information.
    """
    return {
        "message": "Rikitake Symmetry Engine API",
        "version": "1.0.0",
        "status": "operational",
        "docs": "/docs",
    }


@app.get("/health")
async def health_check():
    return {"status": "healthy"}


if __name__ == "__main__":
    import uvicorn

    logger.info(f"Starting {settings.APP_NAME} on port {settings.APP_PORT}")
    uvicorn.run(
        "main:app",
        host="0.0.0.0",
        port=settings.APP_PORT,
        reload=settings.DEBUG,
    )
