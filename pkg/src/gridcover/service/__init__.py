"""FastAPI service wrapping the counting engine."""

from .app import app

__all__ = ["app"]
