"""Exact decision procedures and invariants for shifts of finite type."""

from ._symdyn import *  # noqa: F401,F403
from ._symdyn import __doc__  # noqa: F401
