"""Exact induced-subgraph density toolkit for small oriented graphs."""

from indpath._core import *  # noqa: F401,F403
from indpath._core import __doc__  # noqa: F401

__version__ = "0.1.0"
