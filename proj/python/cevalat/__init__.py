"""Exact checkers for cones, Ceva configurations, and Cevian lattices."""

try:
    from ._cevalat import *  # noqa: F401,F403
    from ._cevalat import __doc__  # noqa: F401
except ImportError:  # running against a bare build tree
    from _cevalat import *  # noqa: F401,F403

__version__ = "0.1.0"
