"""Finite F-representation type of graded rings R(P^1, D) in characteristic p."""

from .dsl import parse_divisor
from .picard import PicElement, Weights
from .qdiv import PointLabel, RationalDivisor
from .rootlattice import LatticeVector

__all__ = ["LatticeVector", "PicElement", "PointLabel", "RationalDivisor", "Weights", "parse_divisor"]
__version__ = "0.1.0"
