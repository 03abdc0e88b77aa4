"""
Paso koszul: H^k(Omega, df^) exacto y por truncación.
"""
from typing import Dict, Any

from src.domain.i_command_step import ICommandStep
from src.infrastructure.command_steps.context import (
    add_cross_check,
    ensure_tameness,
    ladder_for,
    record_payload,
    try_algebra,
)
from src.oracles.predictions import predicted_rank_tame
from src.twisted_derham.koszul import koszul_dims


class KoszulStep(ICommandStep):
    """
    Dimensiones del complejo de Koszul y su comparación con la predicción
    de rango del caso manso.
    """

    def execute(self, context: Dict[str, Any]) -> Dict[str, Any]:
        f = context['poly']
        report = koszul_dims(f, ladder_for(context), try_algebra(context))
        last = report.truncated_dims[max(report.truncated_dims)]
        add_cross_check(
            context,
            'koszul-truncation',
            [last[k] for k in sorted(last)],
            [report.dims[k] for k in sorted(report.dims)],
            self.get_step_name(),
        )
        tameness = ensure_tameness(context)
        if tameness.certified:
            prediction = predicted_rank_tame(f, tameness, try_algebra(context))
            add_cross_check(
                context,
                'koszul-milnor-sum',
                [report.dims[k] for k in sorted(report.dims)],
                [prediction.rank(k) for k in sorted(report.dims)],
                self.get_step_name(),
            )
        return record_payload(context, self.get_step_name(), report.to_dict())

    def get_step_name(self) -> str:
        return "koszul"

    def get_step_description(self) -> str:
        return "Cohomología de (Omega, df^) y certificado de sucesión regular"

    def can_execute(self, context: Dict[str, Any]) -> bool:
        return context.get('poly') is not None and try_algebra(context) is not None
