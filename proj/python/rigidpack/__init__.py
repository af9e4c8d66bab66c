"""Rigidity-matroid packings and k-connected orientations."""

from ._core import *  # noqa: F401,F403
from ._core import Graph, PreconditionError, ParseError

__all__ = [name for name in dir() if not name.startswith("_")]
