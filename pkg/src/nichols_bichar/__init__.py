"""Exact computations with Nichols algebras of diagonal type and their bicharacter Lie closures."""

from .bichar import BraidingSpec, CapExceeded, bichar_eval, is_connected, is_quantum_linear_space, is_symmetric
from .checkers import Verdict
from .expr import parse_element
from .free_algebra import FreeElement, bracket, pair, skew_derivation
from .lie_closure import generate
from .nichols import coordinates, is_zero, nichols_dims, normal_form
from .scalars import Cyclotomic, root_of_unity

__all__ = [
    "BraidingSpec",
    "CapExceeded",
    "Cyclotomic",
    "FreeElement",
    "Verdict",
    "bichar_eval",
    "bracket",
    "coordinates",
    "generate",
    "is_connected",
    "is_quantum_linear_space",
    "is_symmetric",
    "is_zero",
    "nichols_dims",
    "normal_form",
    "pair",
    "parse_element",
    "root_of_unity",
    "skew_derivation",
]
