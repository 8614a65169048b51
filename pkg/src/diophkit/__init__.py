"""Exact number-field toolkit for building and checking Diophantine definitions."""

__version__ = "0.1.0"

from ._accel import BACKEND  # noqa: E402

__all__ = ["BACKEND", "__version__"]
