"""Center functions of planar polygons."""

from ._polycenter import *  # noqa: F401,F403
from ._polycenter import PolycenterError

__all__ = [name for name in dir() if not name.startswith("_")]
