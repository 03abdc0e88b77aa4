"""
Álgebra lineal exacta sobre Q y sobre Q[u].
"""
from src.cu_linalg.rational_matrix import (
    RationalMatrix,
    SparseEchelon,
    bareiss_rank,
    bareiss_determinant,
    rational_rank,
    rational_nullspace,
    solve_affine,
    solve_rational,
    sparse_rank,
)
from src.cu_linalg.upoly import UPoly, upoly_gcd, fraction_text, rational_roots
from src.cu_linalg.upoly_matrix import UPolyMatrix, characteristic_polynomial
from src.cu_linalg.smith_form import SmithDecomposition, smith_normal_form, invariant_factors, column_kernel
from src.cu_linalg.module_report import ModuleReport, BasicuVerdict, module_report, basicu_check

__all__ = [
    "RationalMatrix",
    "SparseEchelon",
    "bareiss_rank",
    "bareiss_determinant",
    "rational_rank",
    "rational_nullspace",
    "solve_affine",
    "solve_rational",
    "sparse_rank",
    "UPoly",
    "upoly_gcd",
    "fraction_text",
    "rational_roots",
    "UPolyMatrix",
    "characteristic_polynomial",
    "SmithDecomposition",
    "smith_normal_form",
    "invariant_factors",
    "column_kernel",
    "ModuleReport",
    "BasicuVerdict",
    "module_report",
    "basicu_check",
]
