"""
Bases de Gröbner sobre Q, álgebras de Milnor y funcional residuo.
"""
from src.groebner.buchberger import (
    GroebnerBasis,
    DivisionRecord,
    buchberger,
    normal_form,
    division_record,
    is_groebner_basis,
    is_reduced,
    ideal_contains,
    is_unit_ideal,
)
from src.groebner.milnor_algebra import (
    MilnorAlgebra,
    milnor_algebra,
    is_zero_dimensional,
    standard_monomials,
)
from src.groebner.residue import ResidueFunctional, residue_functional

__all__ = [
    "GroebnerBasis",
    "DivisionRecord",
    "buchberger",
    "normal_form",
    "division_record",
    "is_groebner_basis",
    "is_reduced",
    "ideal_contains",
    "is_unit_ideal",
    "MilnorAlgebra",
    "milnor_algebra",
    "is_zero_dimensional",
    "standard_monomials",
    "ResidueFunctional",
    "residue_functional",
]
