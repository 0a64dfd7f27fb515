"""Hilbert-space embeddability of finite metric spaces."""

from ._core import *  # noqa: F401,F403
from ._core import IsoembedError, MetricSpace, Graph

__version__ = "0.1.0"
