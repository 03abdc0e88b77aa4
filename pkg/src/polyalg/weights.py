"""
Pesos de casi homogeneidad: f = sum w_i x_i df/dx_i con w_i > 0.
"""
from fractions import Fraction
from typing import Optional, Tuple

from src.cu_linalg.rational_matrix import solve_affine
from src.domain.errors import NotQuasiHomogeneous
from src.polyalg.exact_poly import ExactPoly, poly_sum

FREE_WEIGHT = Fraction(1, 2)


def find_weights(f: ExactPoly) -> Optional[Tuple[Fraction, ...]]:
    """
    Resuelve sum w_i a_i = 1 sobre el soporte; las variables no determinadas
    reciben el peso 1/2.

    :return: Pesos positivos certificados o None
    """
    if f.is_zero():
        return None
    rows = [[Fraction(a) for a in exponent] for exponent in f.support()]
    solution = solve_affine(rows, [Fraction(1)] * len(rows), f.nvars, FREE_WEIGHT)
    if solution is None or any(w <= 0 for w in solution):
        return None
    if euler_image(f, solution) != f:
        return None
    return tuple(solution)


def euler_image(f: ExactPoly, weights) -> ExactPoly:
    """sum w_i x_i df/dx_i."""
    n = f.nvars
    return poly_sum(
        (f.partial(i).mul_term(tuple(int(j == i) for j in range(n)), weights[i]) for i in range(n)), n
    )


def quasi_homogeneous_weights(f: ExactPoly) -> Tuple[Fraction, ...]:
    """
    Pesos positivos con certificado exacto f = sum w_i x_i df/dx_i.

    :raises NotQuasiHomogeneous: si no existen
    """
    weights = find_weights(f)
    if weights is None:
        raise NotQuasiHomogeneous("f no es casi homogéneo con pesos positivos")
    return weights
