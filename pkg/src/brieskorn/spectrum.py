"""
Espectro casi homogéneo y su compatibilidad con el emparejamiento residuo.
"""
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple

from src.cu_linalg.rational_matrix import RationalMatrix
from src.cu_linalg.upoly import fraction_text
from src.domain.errors import NotQuasiHomogeneous
from src.groebner.milnor_algebra import MilnorAlgebra, milnor_algebra
from src.polyalg.exact_poly import ExactPoly
from src.polyalg.monomial_order import Exponent
from src.polyalg.weights import euler_image, quasi_homogeneous_weights
from src.twisted_derham.euler_witness import euler_alpha
from src.utils.logger import setup_logger

logger = setup_logger(__name__)


@dataclass(frozen=True)
class SpectrumData:
    """
    Pesos y valores alpha(m) = sum (a_i + 1) w_i sobre la base monomial.

    ``values[i]`` corresponde a ``basis[i]``; ``multiset`` es la versión ordenada.
    """

    weights: Tuple[Fraction, ...]
    basis: Tuple[Exponent, ...]
    values: Tuple[Fraction, ...]

    @property
    def nvars(self) -> int:
        return len(self.weights)

    @property
    def multiset(self) -> List[Fraction]:
        return sorted(self.values)

    def is_symmetric(self) -> bool:
        """Simetría alpha <-> n - alpha como multiconjunto."""
        return Counter(self.values) == Counter(self.nvars - v for v in self.values)

    def in_open_range(self) -> bool:
        return all(0 < v < self.nvars for v in self.values)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "weights": [fraction_text(w) for w in self.weights],
            "values": [fraction_text(v) for v in self.multiset],
            "symmetric": self.is_symmetric(),
        }


def spectrum_qh(
    f: ExactPoly,
    weights: Optional[Sequence[Fraction]] = None,
    algebra: Optional[MilnorAlgebra] = None,
) -> SpectrumData:
    """
    Espectro de un polinomio casi homogéneo.

    :param f: Polinomio
    :param weights: Pesos (se calculan si no se dan)
    :param algebra: Álgebra de Milnor ya calculada
    :return: SpectrumData
    :raises NotQuasiHomogeneous: si f != sum w_i x_i df/dx_i
    """
    if weights is None:
        weights = quasi_homogeneous_weights(f)
    weights = tuple(Fraction(w) for w in weights)
    if len(weights) != f.nvars or any(w <= 0 for w in weights) or euler_image(f, weights) != f:
        raise NotQuasiHomogeneous("Los pesos no certifican f = sum w_i x_i df/dx_i")
    algebra = algebra or milnor_algebra(f)
    values = tuple(euler_alpha(exponent, weights) for exponent in algebra.basis)
    data = SpectrumData(weights, algebra.basis, values)
    logger.info(f"Espectro: {[fraction_text(v) for v in data.multiset]}")
    return data


@dataclass(frozen=True)
class PairingCheck:
    """Resultado de G_ij != 0 => alpha_i + alpha_j = n."""

    passed: bool
    violations: Tuple[Tuple[int, int], ...] = ()

    def to_dict(self) -> Dict[str, Any]:
        return {"passed": self.passed, "violations": [list(v) for v in self.violations]}


def spectrum_pairing_check(gram: RationalMatrix, spectrum: SpectrumData) -> PairingCheck:
    """
    Comprueba que la matriz de Gram solo empareja clases con alpha_i + alpha_j = n.

    :param gram: Gram del residuo en la base de ``spectrum.basis``
    :param spectrum: Datos de espectro
    """
    n = spectrum.nvars
    violations = tuple(
        (i, j)
        for i in range(gram.nrows)
        for j in range(gram.ncols)
        if gram[i, j] != 0 and spectrum.values[i] + spectrum.values[j] != n
    )
    return PairingCheck(not violations, violations)
