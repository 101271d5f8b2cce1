"""Emotion-tag sentiment classification for semantically tagged reviews."""

from ._arasent import *  # noqa: F401,F403
from ._arasent import ArasentError

__all__ = [name for name in dir() if not name.startswith("_")]
