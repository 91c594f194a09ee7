"""
Application configuration management.

This module centralizes all environment-based configuration for the Rikitake
symmetry engine, including symbolic-suite defaults, integrator tolerances,
numeric oracle thresholds and the HTTP surface settings.
"""

import logging
from functools import lru_cache

from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """
    Application settings loaded from environment variables (prefix ``RIKITAKE_``).

    Attributes:
        APP_NAME (str): Name of the application.
        DEBUG (bool): Debug mode flag.
        LOG_LEVEL (str): Root logging level.
        API_V1_PREFIX (str): API version prefix for routes.
        APP_PORT (int): Port for the HTTP surface.
        DEFAULT_BETA (str): Rational text for beta when no flag is given.
        DEFAULT_SEED (int): Seed for falsification sample points.
        DEFAULT_DT (float): Integrator step.
        DEFAULT_STEPS (int): Number of integrator steps.
        DEFAULT_METHOD (str): Integrator, "rk4" or "midpoint".
        MIDPOINT_TOL (float): Fixed-point tolerance of the implicit midpoint rule.
        MIDPOINT_MAX_ITER (int): Fixed-point iteration cap.
        DRIFT_TOL (float): Pass threshold for invariant drift.
        CONJUGACY_TOL (float): Pass threshold for the R4/R3 conjugacy gap.
        NEWTON_TOL (float): Pass threshold for the on-trajectory Newton residual.
        R3_X0 (str): Default initial condition for the 3-D system.
        R4_X0 (str): Default initial condition for the canonical 4-D system.
        RATFN_REDUCE (bool): Apply light normalization after rational-function arithmetic.
        MAX_WORKERS (int): Thread pool size for batch integration.

    Examples:
        >>> settings = get_settings()
        >>> print(settings.DEFAULT_METHOD)
        rk4
    """

    model_config = SettingsConfigDict(
        env_file=".env", env_prefix="RIKITAKE_", case_sensitive=True, extra="ignore"
    )

    # App
    APP_NAME: str = "Rikitake Symmetry Engine"
    DEBUG: bool = False
    LOG_LEVEL: str = "WARNING"
    API_V1_PREFIX: str = "/api/v1"
    APP_PORT: int = 7001

    # Symbolic suite
    DEFAULT_BETA: str = "1"
    DEFAULT_SEED: int = 0
    RATFN_REDUCE: bool = False

    # Integration
    DEFAULT_DT: float = 1e-3
    DEFAULT_STEPS: int = 10000
    DEFAULT_METHOD: str = "rk4"
    MIDPOINT_TOL: float = 1e-14
    MIDPOINT_MAX_ITER: int = 50
    MAX_WORKERS: int = 4

    # Numeric oracles
    DRIFT_TOL: float = 1e-8
    CONJUGACY_TOL: float = 1e-6
    NEWTON_TOL: float = 1e-9
    R3_X0: str = "1,2,3"
    R4_X0: str = "0.4,0,0.3,0.2"


@lru_cache
def get_settings() -> Settings:
    """
    Get cached settings instance.

    Returns:
        Settings: Singleton settings object loaded from environment.

    Examples:
        >>> settings = get_settings()
        >>> tol = settings.MIDPOINT_TOL
    """
    return Settings()


def configure_logging(settings: Settings) -> None:
    """Configure the root logger from ``settings.LOG_LEVEL``."""
    logging.basicConfig(
        level=getattr(logging, settings.LOG_LEVEL.upper(), logging.WARNING),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
