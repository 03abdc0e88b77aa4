"""
Paso predict: rangos previstos (suma de Milnor en el caso manso o Betti de
hipersuperficies) y sus comprobaciones independientes.
"""
from typing import Dict, Any

from src.domain.i_command_step import ICommandStep
from src.groebner.milnor_algebra import milnor_algebra
from src.infrastructure.command_steps.context import add_cross_check, ensure_tameness, record_payload, try_algebra
from src.oracles.hypersurface import (
    euler_characteristic_chern,
    euler_characteristic_recursive,
    primitive_middle_betti_from_milnor,
)
from src.oracles.predictions import predicted_rank_tame, predicted_ranks_hypersurface
from src.polyalg.exact_poly import ExactPoly, poly_sum
from src.utils.logger import setup_logger

logger = setup_logger(__name__)


def fermat_polynomial(nvars: int, d: int) -> ExactPoly:
    """x_0^d + ... + x_{nvars-1}^d."""
    return poly_sum(
        (ExactPoly.monomial(tuple(d if j == i else 0 for j in range(nvars))) for i in range(nvars)), nvars
    )


class PredictStep(ICommandStep):
    """
    Predicción de rangos por grado.
    """

    def execute(self, context: Dict[str, Any]) -> Dict[str, Any]:
        if context.get('hypersurface'):
            return self._hypersurface(context)
        f = context['poly']
        prediction = predicted_rank_tame(f, ensure_tameness(context), try_algebra(context))
        context['cache']['prediction'] = prediction
        return record_payload(context, self.get_step_name(), prediction.to_dict())

    def _hypersurface(self, context: Dict[str, Any]) -> Dict[str, Any]:
        n, d = context['hypersurface']
        prediction = predicted_ranks_hypersurface(n, d)
        betti = [prediction.rank(j + 2) for j in range(2 * (n - 1) + 1)]
        chi = sum((-1) ** j * b for j, b in enumerate(betti))
        add_cross_check(
            context, 'euler-characteristic', chi, euler_characteristic_recursive(n, d), self.get_step_name()
        )
        add_cross_check(
            context, 'euler-characteristic-chern', chi, euler_characteristic_chern(n, d), self.get_step_name()
        )
        middle = n - 1
        mu = milnor_algebra(fermat_polynomial(n + 1, d)).mu
        primitive = betti[middle] - (1 if middle % 2 == 0 else 0)
        add_cross_check(
            context,
            'fermat-primitive-betti',
            primitive,
            primitive_middle_betti_from_milnor(n, d, mu),
            self.get_step_name(),
        )
        payload = prediction.to_dict()
        payload['betti'] = betti
        payload['fermat_mu'] = mu
        logger.info(f"Predicción de hipersuperficie n={n}, d={d}: Betti {betti}")
        return record_payload(context, self.get_step_name(), payload)

    def get_step_name(self) -> str:
        return "predict"

    def get_step_description(self) -> str:
        return "Rangos previstos de H^k del complejo torcido"

    def can_execute(self, context: Dict[str, Any]) -> bool:
        if context.get('hypersurface'):
            return True
        return context.get('poly') is not None and ensure_tameness(context).certified
