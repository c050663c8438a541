"""HTTP service layer; ``uvicorn festcal.service:app`` serves it."""

from .app import app

__all__ = ["app"]
