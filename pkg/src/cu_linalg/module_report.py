"""
Informe de módulos finitamente presentados sobre Q[u] y comprobación de la
equivalencia entre constancia de fibras y libertad.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Mapping, Optional, Tuple

from src.cu_linalg.smith_form import invariant_factors
from src.cu_linalg.upoly import UPoly, fraction_text
from src.cu_linalg.upoly_matrix import UPolyMatrix
from src.utils.logger import setup_logger

logger = setup_logger(__name__)


@dataclass(frozen=True)
class ModuleReport:
    """
    Conúcleo de una presentación Q[u]^c -> Q[u]^r.

    ``torsion`` lista los factores invariantes no unitarios (mónicos);
    ``u_torsion_orders`` sus valuaciones en u = 0 cuando son positivas.
    """

    ambient_rank: int
    free_rank: int
    torsion: Tuple[UPoly, ...]
    u_torsion_orders: Tuple[int, ...]
    localized_torsion: Tuple[UPoly, ...]

    @property
    def is_free(self) -> bool:
        return not self.torsion

    @property
    def generic_rank(self) -> int:
        """Rango tras localizar en u (coincide con el rango libre)."""
        return self.free_rank

    def fiber_dimension(self, point) -> int:
        """Dimensión de M / (u - point) M."""
        return self.free_rank + sum(1 for factor in self.torsion if factor.evaluate(point) == 0)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "ambient_rank": self.ambient_rank,
            "free_rank": self.free_rank,
            "is_free": self.is_free,
            "torsion": [factor.to_json() for factor in self.torsion],
            "u_torsion_orders": list(self.u_torsion_orders),
            "localized_torsion": [factor.to_json() for factor in self.localized_torsion],
        }


def module_report(presentation: UPolyMatrix, ambient_rank: int) -> ModuleReport:
    """
    Rango libre y torsión del conúcleo de la presentación.

    :param presentation: Matriz con ambient_rank filas
    :param ambient_rank: Rango del módulo libre ambiente
    :return: ModuleReport
    """
    if presentation.nrows != ambient_rank:
        raise ValueError("La presentación debe tener ambient_rank filas")
    if presentation.ncols == 0:
        factors: List[UPoly] = []
    else:
        factors = invariant_factors(presentation)
    torsion = tuple(f for f in factors if not f.is_unit())
    orders = tuple(f.valuation_at_zero() for f in torsion if f.valuation_at_zero() > 0)
    localized = tuple(f.strip_u_power().monic() for f in torsion if not f.strip_u_power().is_unit())
    report = ModuleReport(ambient_rank, ambient_rank - len(factors), torsion, orders, localized)
    logger.debug(f"Módulo: rango libre {report.free_rank}, torsión {[f.to_text() for f in torsion]}")
    return report


@dataclass(frozen=True)
class BasicuVerdict:
    """
    Veredicto cruzado: constancia de las dimensiones de fibra frente a libertad.
    """

    consistent: bool
    constant: bool
    free: bool
    discrepancies: Tuple[Dict[str, Any], ...] = field(default_factory=tuple)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "consistent": self.consistent,
            "constant_fiber_dimension": self.constant,
            "free": self.free,
            "discrepancies": list(self.discrepancies),
        }


def basicu_check(fiber_dims: Mapping[Fraction, int], report: ModuleReport) -> BasicuVerdict:
    """
    Compara constancia de fibras (criterio 1) con libertad vía Smith (criterio 2).

    :param fiber_dims: Dimensión de fibra por punto u_o muestreado
    :param report: Informe del módulo sobre la misma truncación
    :return: BasicuVerdict con testigos de discrepancia
    """
    values = set(fiber_dims.values())
    constant = len(values) <= 1
    free = report.is_free
    discrepancies: List[Dict[str, Any]] = []
    if constant and not free:
        for factor in report.torsion:
            missed = all(factor.evaluate(point) != 0 for point in fiber_dims)
            discrepancies.append(
                {
                    "kind": "constant-but-torsion",
                    "invariant_factor": factor.to_json(),
                    "sampling_missed_roots": missed,
                }
            )
    elif free and not constant:
        for point, dim in sorted(fiber_dims.items()):
            if dim != report.free_rank:
                discrepancies.append(
                    {"kind": "free-but-jumping", "u_o": fraction_text(point), "fiber_dim": dim, "free_rank": report.free_rank}
                )
    elif free and constant and values and values != {report.free_rank}:
        discrepancies.append(
            {"kind": "rank-mismatch", "fiber_dim": next(iter(values)), "free_rank": report.free_rank}
        )
    verdict = BasicuVerdict(not discrepancies, constant, free, tuple(discrepancies))
    logger.info(f"Comprobación constancia/libertad: {'consistente' if verdict.consistent else 'inconsistente'}")
    return verdict
