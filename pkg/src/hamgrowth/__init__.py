"""Neighborhood growth on the Hamming plane: exact simulation and extremal search."""

from hamgrowth.enhanced import EnhancementPair, tau_en
from hamgrowth.errors import Inconsistency, InternalError, InvalidInput
from hamgrowth.regular import ExtendedState, GrowthTrace, run, spanning_time
from hamgrowth.thin import ThinSetSpec, standard_arrangement
from hamgrowth.young import YoungDiagram

__version__ = "0.1.0"

__all__ = [
    "EnhancementPair",
    "ExtendedState",
    "GrowthTrace",
    "Inconsistency",
    "InternalError",
    "InvalidInput",
    "ThinSetSpec",
    "YoungDiagram",
    "run",
    "spanning_time",
    "standard_arrangement",
    "tau_en",
]
