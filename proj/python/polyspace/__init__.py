"""Moduli spaces of polygons: Hopf map, frames, bending flows and exact moment polytopes."""

from ._core import *  # noqa: F401,F403
from ._core import PolyspaceError, Polygon

__all__ = [name for name in dir() if not name.startswith("_")]
