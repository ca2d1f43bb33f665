"""Exact evaluation of the universal gl(1|1) weight system on chord diagrams."""

from .diagrams import ChordDiagram, DiagramSum, canonicalize, decompose, enumerate_diagrams
from .poly import WeightPoly
from .weights import eval_weight

__all__ = [
    "ChordDiagram",
    "DiagramSum",
    "WeightPoly",
    "canonicalize",
    "decompose",
    "enumerate_diagrams",
    "eval_weight",
]
__version__ = "0.1.0"
