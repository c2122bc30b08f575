"""Squared-cycle Turán toolkit: graphs, colorings, detection, spectra and search."""

from ._sqturan import *  # noqa: F401,F403
from ._sqturan import Graph, Error, ParameterError, BudgetExceeded

__all__ = [name for name in dir() if not name.startswith("_")]
