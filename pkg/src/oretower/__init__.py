"""Exact computation in iterated skew polynomial rings."""

from .exactnum import DenMonoid, Frac, MPoly
from .tower import Element, OreTower, commutator
from .lang import GeneratorMap, Presentation, eval_expr, parse

__all__ = [
    "DenMonoid",
    "Element",
    "Frac",
    "GeneratorMap",
    "MPoly",
    "OreTower",
    "Presentation",
    "commutator",
    "eval_expr",
    "parse",
]
