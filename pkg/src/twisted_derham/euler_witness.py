"""
Testigo del campo de Euler para f casi homogéneo.

Con E = sum w_i x_i d/dx_i y f = E(f), para eta = iota_E(m dx):
(u d + df^) eta = f m dx + u alpha(m) m dx, alpha(m) = sum (a_i + 1) w_i.
"""
from fractions import Fraction
from typing import Sequence

from src.domain.errors import InvariantBreach
from src.polyalg.diff_form import DiffForm, UDiffForm, twisted_differential
from src.polyalg.exact_poly import ExactPoly
from src.polyalg.monomial_order import Exponent


def euler_alpha(exponent: Exponent, weights: Sequence[Fraction]) -> Fraction:
    return sum((Fraction(a + 1) * Fraction(w) for a, w in zip(exponent, weights)), Fraction(0))


def euler_witness(f: ExactPoly, exponent: Exponent, weights: Sequence[Fraction]) -> UDiffForm:
    """
    La (n-1)-forma iota_E(x^a dx) como elemento de Omega^{n-1}[u]/u^2.

    :param f: Polinomio casi homogéneo de grado ponderado 1
    :param exponent: Monomio m = x^a
    :param weights: Pesos w_i
    """
    top = DiffForm.top(ExactPoly.monomial(exponent))
    return UDiffForm((top.contract_euler(weights),), truncation=2)


def check_euler_witness(f: ExactPoly, exponent: Exponent, weights: Sequence[Fraction]) -> bool:
    """
    Comprueba exactamente la identidad del testigo de Euler.

    :raises InvariantBreach: si la identidad falla
    """
    m = ExactPoly.monomial(exponent)
    image = twisted_differential(f, euler_witness(f, exponent, weights))
    expected = UDiffForm(
        (DiffForm.top(f * m), DiffForm.top(m.scale(euler_alpha(exponent, weights)))), truncation=2
    )
    if image != expected:
        raise InvariantBreach(
            "El testigo de Euler no reproduce f m dx + u alpha(m) m dx",
            {"exponent": list(exponent), "weights": [str(w) for w in weights]},
        )
    return True
