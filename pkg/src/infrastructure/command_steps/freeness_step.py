"""
Paso freeness: forma de Smith de la presentación de H^n frente a la
constancia de las fibras.
"""
from typing import Dict, Any

from src.domain.i_command_step import ICommandStep
from src.infrastructure.command_steps.context import add_cross_check, ladder_for, record_payload, samples_for, try_algebra
from src.twisted_derham.presentation import freeness_verdict


class FreenessStep(ICommandStep):
    """
    Cruza los dos criterios de libertad sobre la misma truncación.
    """

    def execute(self, context: Dict[str, Any]) -> Dict[str, Any]:
        f = context['poly']
        config = context['config']
        dmax = ladder_for(context)[-1] if config.degree_ladder else None
        report = freeness_verdict(f, dmax, samples_for(context), config.sign)
        add_cross_check(
            context, 'basicu-consistency', report.basicu.consistent, True, self.get_step_name()
        )
        algebra = try_algebra(context)
        if algebra is not None:
            add_cross_check(context, 'presentation-free', report.module.is_free, True, self.get_step_name())
            add_cross_check(context, 'free-rank', report.module.free_rank, algebra.mu, self.get_step_name())
        return record_payload(context, self.get_step_name(), report.to_dict())

    def get_step_name(self) -> str:
        return "freeness"

    def get_step_description(self) -> str:
        return "Libertad del H^n truncado por forma normal de Smith"

    def can_execute(self, context: Dict[str, Any]) -> bool:
        return context.get('poly') is not None
