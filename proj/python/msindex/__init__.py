"""Stable-set counting on trees: exact counts, structure and extremal search."""

from ._core import *  # noqa: F401,F403
