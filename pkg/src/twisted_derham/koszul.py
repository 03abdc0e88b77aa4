"""
Cohomología del complejo (Omega, df^), la fibra u = 0 del complejo torcido.
"""
from dataclasses import dataclass, field
from typing import Any, Dict, Optional, Sequence

from src.domain.errors import InfiniteMilnorNumber, NonIsolatedCritical
from src.groebner.milnor_algebra import MilnorAlgebra, milnor_algebra
from src.polyalg.exact_poly import ExactPoly
from src.twisted_derham.fiber_cohomology import default_ladder, fiber_cohomology_dims
from src.twisted_derham.truncated_complex import build_truncated
from src.utils.logger import setup_logger

logger = setup_logger(__name__)


@dataclass(frozen=True)
class KoszulReport:
    """
    Dimensiones de H^k(Omega, df^) con su certificado de sucesión regular.

    ``dims`` son las dimensiones exactas (0 bajo el grado n, mu en grado n);
    ``truncated_dims`` las obtenidas por rangos en cada escalón Dmax.
    """

    mu: int
    dims: Dict[int, int]
    truncated_dims: Dict[int, Dict[int, int]]
    certificate: Dict[str, Any] = field(default_factory=dict)

    @property
    def verified(self) -> bool:
        """Cierto si el último escalón coincide con las dimensiones exactas."""
        if not self.truncated_dims:
            return False
        last = self.truncated_dims[max(self.truncated_dims)]
        return last == self.dims

    def to_dict(self) -> Dict[str, Any]:
        return {
            "mu": self.mu,
            "dims": [self.dims[k] for k in sorted(self.dims)],
            "truncated_dims": {str(d): [dims[k] for k in sorted(dims)] for d, dims in self.truncated_dims.items()},
            "certificate": self.certificate,
            "verified": self.verified,
        }


def _regular_sequence_certificate(algebra: MilnorAlgebra) -> Dict[str, Any]:
    """
    n parciales que generan un ideal cero-dimensional en n variables forman una
    sucesión regular; la base de Gröbner lo certifica con potencias puras.
    """
    heads = algebra.gb.leading_monomials()
    pure_powers = {}
    for i in range(algebra.nvars):
        powers = [head[i] for head in heads if head[i] > 0 and sum(head) == head[i]]
        pure_powers[i] = min(powers) if powers else 0
    return {
        "method": "zero-dimensional-jacobian",
        "groebner_size": len(algebra.gb.generators),
        "pure_power_exponents": [pure_powers[i] for i in range(algebra.nvars)],
    }


def koszul_dims(
    f: ExactPoly,
    ladder: Optional[Sequence[int]] = None,
    algebra: Optional[MilnorAlgebra] = None,
) -> KoszulReport:
    """
    Dimensiones de H^k(Omega, df^) para todo k.

    :param f: Polinomio con ideal jacobiano cero-dimensional
    :param ladder: Escalera Dmax para la verificación por truncación
    :param algebra: Álgebra de Milnor ya calculada (opcional)
    :return: KoszulReport
    :raises NonIsolatedCritical: si el ideal jacobiano no es cero-dimensional
    """
    if algebra is None:
        try:
            algebra = milnor_algebra(f)
        except InfiniteMilnorNumber as exc:
            raise NonIsolatedCritical(
                f"El lugar crítico de f no es aislado: {exc.message}"
            ) from exc
    n = f.nvars
    dims = {k: 0 for k in range(n)}
    dims[n] = algebra.mu
    ladder = tuple(ladder) if ladder else default_ladder(f)
    truncated = {dmax: fiber_cohomology_dims(build_truncated(f, 1, dmax), 0) for dmax in ladder}
    report = KoszulReport(algebra.mu, dims, truncated, _regular_sequence_certificate(algebra))
    if report.verified:
        logger.info(f"Koszul: dimensiones {list(dims.values())} verificadas por truncación")
    else:
        logger.warning(f"Koszul: la truncación Dmax={ladder[-1]} da {truncated[ladder[-1]]}, esperado {dims}")
    return report
