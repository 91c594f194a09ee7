"""
API route modules.
"""

from app.api.routes import simulation, verify

__all__ = ["simulation", "verify"]
