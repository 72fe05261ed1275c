"""Numerical laboratory for weighted Bergman spaces on the unit disc."""

try:
    from ._core import *  # noqa: F401,F403  (wheel layout)
    from . import _core as core  # noqa: F401
except ImportError:  # development build: extension sits on sys.path
    from _core import *  # noqa: F401,F403
    import _core as core  # noqa: F401

__all__ = [name for name in dir(core) if not name.startswith("_")]
