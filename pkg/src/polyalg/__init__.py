"""
Aritmética polinomial exacta, formas diferenciales y parser de polinomios.
"""
from src.polyalg.monomial_order import MonomialOrder, Exponent
from src.polyalg.exact_poly import ExactPoly
from src.polyalg.parser import parse_poly, parse_variables, format_poly
from src.polyalg.diff_form import (
    DiffForm,
    UDiffForm,
    exterior_d,
    wedge_df,
    twisted_differential,
)
from src.polyalg.weights import find_weights, quasi_homogeneous_weights

__all__ = [
    "MonomialOrder",
    "Exponent",
    "ExactPoly",
    "parse_poly",
    "parse_variables",
    "format_poly",
    "DiffForm",
    "UDiffForm",
    "exterior_d",
    "wedge_df",
    "twisted_differential",
    "find_weights",
    "quasi_homogeneous_weights",
]
