"""Exact invariants for knot surgery and related 4-manifold constructions."""

from .alexander import (
    alexander_from_braid,
    alexander_torus,
    alexander_two_bridge,
    burau_reduced,
    skein_evaluate,
)
from .knots import parse_presentation
from .laurent import LaurentPoly

__all__ = [
    "LaurentPoly",
    "alexander_from_braid",
    "alexander_torus",
    "alexander_two_bridge",
    "burau_reduced",
    "parse_presentation",
    "skein_evaluate",
]
__version__ = "0.1.0"
