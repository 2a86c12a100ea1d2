"""Exact construction and spectral analysis of Boolean functions."""

from ._core import *  # noqa: F401,F403
from ._core import MAX_VARS  # noqa: F401
