"""Exact Tevelev degrees, Schubert calculus, and Young tableaux."""

from ._tevelev import *  # noqa: F401,F403
from ._tevelev import __doc__  # noqa: F401
