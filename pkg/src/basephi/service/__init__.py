"""HTTP service wrapping the core package; see `basephi.service.app`."""

from .app import app

__all__ = ["app"]
