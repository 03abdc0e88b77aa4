"""
Paso consistency (solo en report): acuerdo a tres bandas entre la
predicción de rango, la fibra estabilizada y el rango del retículo.
"""
from typing import Dict, Any

from src.domain.i_command_step import ICommandStep
from src.infrastructure.command_steps.context import add_cross_check


class ConsistencyStep(ICommandStep):

    def execute(self, context: Dict[str, Any]) -> Dict[str, Any]:
        cache = context['cache']
        n = context['poly'].nvars
        predicted = cache['prediction'].rank(n)
        if 'fibers' in cache:
            report = cache['fibers'].report
            top = sorted({report.final(u_o, n) for u_o in report.samples})
            add_cross_check(context, 'rank-vs-fibers', top, [predicted], self.get_step_name())
        if 'lattice' in cache:
            add_cross_check(context, 'rank-vs-lattice', cache['lattice'].rank, predicted, self.get_step_name())
        context['step_results'][self.get_step_name()] = {'status': 'completed'}
        return context

    def get_step_name(self) -> str:
        return "consistency"

    def get_step_description(self) -> str:
        return "Predicción de rango frente a fibras y retículo"

    def can_execute(self, context: Dict[str, Any]) -> bool:
        return 'prediction' in context['cache']
