"""Expected chromatic numbers of random subgraphs, spectral bounds and graph families."""

from ._core import *  # noqa: F401,F403
from ._core import BudgetExhausted, EnumerationCapExceeded, Graph, ParseError  # noqa: F401

__version__ = "0.1.0"
