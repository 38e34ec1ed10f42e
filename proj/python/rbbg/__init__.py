"""Recursive biconnected bipartition of biconnected graphs."""

from ._rbbg import *  # noqa: F401,F403
from ._rbbg import __doc__  # noqa: F401

__version__ = "0.1.0"
