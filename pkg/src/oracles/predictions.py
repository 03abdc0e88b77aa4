"""
Predicciones de rango para la cohomología del complejo torcido.
"""
from dataclasses import dataclass
from typing import Any, Dict, Optional

from src.domain.errors import PreconditionError, TamenessUnverified
from src.groebner.milnor_algebra import MilnorAlgebra, milnor_algebra
from src.oracles.hypersurface import hypersurface_betti
from src.oracles.tameness import TamenessVerdict, tameness_proxy
from src.polyalg.exact_poly import ExactPoly

MILNOR_SUM = "milnor-sum"
HYPERSURFACE_BETTI = "hypersurface-betti"


@dataclass(frozen=True)
class RankPrediction:
    """Rangos previstos por grado, con su procedencia."""

    ranks: Dict[int, int]
    provenance: str

    def rank(self, k: int) -> int:
        return self.ranks.get(k, 0)

    @property
    def total(self) -> int:
        return sum(self.ranks.values())

    def to_dict(self) -> Dict[str, Any]:
        return {"provenance": self.provenance, "ranks": {str(k): v for k, v in sorted(self.ranks.items())}}


def predicted_ranks_hypersurface(n: int, d: int) -> RankPrediction:
    """
    rank H^k = b_{k-2}(V) para la hipersuperficie lisa V de grado d en P^n.

    :raises PreconditionError: si d < 2 o n < 2
    """
    if d < 2:
        raise PreconditionError(f"El grado d = {d} debe ser >= 2")
    if n < 2:
        raise PreconditionError(f"La dimensión n = {n} debe ser >= 2")
    betti = hypersurface_betti(n, d)
    return RankPrediction({j + 2: b for j, b in enumerate(betti)}, HYPERSURFACE_BETTI)


def predicted_rank_tame(
    f: ExactPoly,
    tameness: Optional[TamenessVerdict] = None,
    algebra: Optional[MilnorAlgebra] = None,
) -> RankPrediction:
    """
    Para f manso con puntos críticos aislados: rango mu en grado n y 0 en el resto.

    :raises TamenessUnverified: si el proxy no certifica mansedumbre
    """
    algebra = algebra or milnor_algebra(f)
    tameness = tameness or tameness_proxy(f, algebra)
    if not tameness.certified:
        raise TamenessUnverified(f"No se pudo certificar la mansedumbre: {', '.join(tameness.reasons)}")
    n = f.nvars
    ranks = {k: 0 for k in range(n)}
    ranks[n] = algebra.mu
    return RankPrediction(ranks, MILNOR_SUM)
