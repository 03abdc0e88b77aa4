"""
Números de Betti de una hipersuperficie lisa V de grado d en P^n.

Fuera del grado medio n - 1 manda Lefschetz; el número medio se despeja de la
característica de Euler, calculada por dos caminos independientes.
"""
from math import comb
from typing import List

from src.utils.logger import setup_logger

logger = setup_logger(__name__)


def euler_characteristic_recursive(n: int, d: int) -> int:
    """
    chi_n = n + (1 - d)(chi_{n-1} - n), chi_0 = 0 (sección hiperplana genérica).

    :param n: Dimensión del espacio proyectivo
    :param d: Grado
    """
    if n < 0 or d < 1:
        raise ValueError("n debe ser >= 0 y d >= 1")
    chi = 0
    for m in range(1, n + 1):
        chi = m + (1 - d) * (chi - m)
    return chi


def euler_characteristic_chern(n: int, d: int) -> int:
    """
    Coeficiente de h^(n-1) en d (1 + h)^(n+1) / (1 + d h).
    """
    if n < 1 or d < 1:
        raise ValueError("n debe ser >= 1 y d >= 1")
    return d * sum(comb(n + 1, j) * (-d) ** (n - 1 - j) for j in range(n))


def hypersurface_betti(n: int, d: int) -> List[int]:
    """
    Betti b_0..b_{2(n-1)} de la hipersuperficie lisa de grado d en P^n.

    :param n: Dimensión ambiente (>= 2)
    :param d: Grado (>= 1)
    :return: Lista de números de Betti
    """
    if n < 2 or d < 1:
        raise ValueError("hypersurface_betti requiere n >= 2 y d >= 1")
    dimension = n - 1
    betti = [1 if j % 2 == 0 else 0 for j in range(2 * dimension + 1)]
    chi = euler_characteristic_recursive(n, d)
    if chi != euler_characteristic_chern(n, d):
        raise ArithmeticError(f"Las dos características de Euler difieren para n={n}, d={d}")
    off_middle = sum((-1) ** j * b for j, b in enumerate(betti) if j != dimension)
    betti[dimension] = (-1) ** dimension * (chi - off_middle)
    logger.debug(f"Betti de V({n},{d}): {betti}")
    return betti


def primitive_middle_betti_from_milnor(n: int, d: int, mu: int) -> int:
    """
    Betti medio primitivo a partir del número de Milnor de x_0^d + ... + x_n^d:
    (mu + (-1)^(n+1) (d - 1)) / d.
    """
    numerator = mu + (-1) ** (n + 1) * (d - 1)
    if numerator % d:
        raise ValueError(f"mu = {mu} no es compatible con el grado {d}")
    return numerator // d
