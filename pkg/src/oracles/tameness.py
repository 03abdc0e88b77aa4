"""
Proxy certificable de mansedumbre.

Solo emite "tame-certified" cuando se verifica una condición suficiente:
f conveniente y no degenerado en el infinito, o f casi homogéneo con pesos
positivos e ideal jacobiano cero-dimensional. Nunca afirma lo contrario.
"""
from dataclasses import dataclass, field
from typing import Any, Dict, Optional, Tuple

from src.domain.errors import InfiniteMilnorNumber
from src.groebner.milnor_algebra import MilnorAlgebra, milnor_algebra
from src.oracles.newton import NewtonData, newton_data
from src.polyalg.exact_poly import ExactPoly
from src.polyalg.weights import find_weights
from src.utils.logger import setup_logger

logger = setup_logger(__name__)

TAME_CERTIFIED = "tame-certified"
UNKNOWN = "unknown"


@dataclass(frozen=True)
class TamenessVerdict:
    verdict: str
    method: Optional[str] = None
    reasons: Tuple[str, ...] = field(default_factory=tuple)
    newton: Optional[NewtonData] = None

    @property
    def certified(self) -> bool:
        return self.verdict == TAME_CERTIFIED

    def to_dict(self) -> Dict[str, Any]:
        return {
            "verdict": self.verdict,
            "method": self.method,
            "reasons": list(self.reasons),
            "newton": self.newton.to_dict() if self.newton else None,
        }


def tameness_proxy(f: ExactPoly, algebra: Optional[MilnorAlgebra] = None) -> TamenessVerdict:
    """
    Certificado suficiente de mansedumbre.

    :param f: Polinomio
    :param algebra: Álgebra de Milnor ya calculada (opcional)
    :return: TamenessVerdict ("tame-certified" o "unknown")
    """
    reasons = []
    nd = newton_data(f)
    if nd.convenient and nd.nondegenerate:
        logger.info("Mansedumbre certificada: conveniente y no degenerado en el infinito")
        return TamenessVerdict(TAME_CERTIFIED, "newton-infinity", ("conveniente y no degenerado en el infinito",), nd)
    if not nd.convenient:
        reasons.append("no conveniente")
    else:
        reasons.append(f"cara degenerada {list(nd.degenerate_face or ())}")
    weights = find_weights(f)
    if weights is None:
        reasons.append("sin pesos de casi homogeneidad positivos")
        return TamenessVerdict(UNKNOWN, None, tuple(reasons), nd)
    try:
        algebra = algebra or milnor_algebra(f)
    except InfiniteMilnorNumber:
        reasons.append("ideal jacobiano no cero-dimensional")
        return TamenessVerdict(UNKNOWN, None, tuple(reasons), nd)
    logger.info(f"Mansedumbre certificada: casi homogéneo con pesos {[str(w) for w in weights]}")
    return TamenessVerdict(
        TAME_CERTIFIED, "quasi-homogeneous", (f"pesos positivos {[str(w) for w in weights]}", f"mu = {algebra.mu}"), nd
    )
