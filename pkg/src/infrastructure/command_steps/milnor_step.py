"""
Paso milnor: álgebra de Milnor, base monomial, hessiano y número de
Kouchnirenko como oráculo independiente.
"""
from typing import Dict, Any

from src.domain.errors import DegenerateFace, NotConvenient
from src.domain.i_command_step import ICommandStep
from src.infrastructure.command_steps.context import add_cross_check, ensure_algebra, ensure_tameness, record_payload
from src.oracles.newton import kouchnirenko_mu
from src.utils.logger import setup_logger

logger = setup_logger(__name__)


class MilnorStep(ICommandStep):
    """
    Calcula mu y la base estándar; cruza mu con Kouchnirenko cuando f es
    conveniente y no degenerado.
    """

    def execute(self, context: Dict[str, Any]) -> Dict[str, Any]:
        f = context['poly']
        variables = context['variables']
        algebra = ensure_algebra(context)
        tameness = ensure_tameness(context)
        payload = {
            'mu': algebra.mu,
            'basis': [m.to_text(variables) for m in algebra.basis_polys()],
            'groebner_size': len(algebra.gb.generators),
            'hessian': algebra.hessian().to_text(variables),
            'socle_dimension': len(algebra.socle()),
            'tameness': tameness.to_dict(),
        }
        nd = tameness.newton
        if nd is not None:
            try:
                expected = kouchnirenko_mu(nd, f)
            except (NotConvenient, DegenerateFace) as exc:
                payload['kouchnirenko'] = exc.to_dict()
            else:
                payload['kouchnirenko'] = expected
                add_cross_check(context, 'kouchnirenko-mu', algebra.mu, expected, self.get_step_name())
        logger.info(f"Milnor: mu = {algebra.mu}")
        return record_payload(context, self.get_step_name(), payload)

    def get_step_name(self) -> str:
        return "milnor"

    def get_step_description(self) -> str:
        return "Álgebra de Milnor, base monomial y número de Kouchnirenko"

    def can_execute(self, context: Dict[str, Any]) -> bool:
        return context.get('poly') is not None
