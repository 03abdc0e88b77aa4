"""
Paso fibers: escalera de dimensiones de fibra y veredicto de torsión.
"""
from typing import Dict, Any

import pandas as pd

from config.settings import DEFAULT_N_LADDER
from src.cu_linalg.upoly import fraction_text
from src.domain.i_command_step import ICommandStep
from src.infrastructure.command_steps.context import (
    add_cross_check,
    ladder_for,
    record_payload,
    samples_for,
    try_algebra,
)
from src.twisted_derham.fiber_cohomology import STABLE_FREE_LIKE, FiberDimReport, torsion_growth_verdict
from src.utils.logger import setup_logger

logger = setup_logger(__name__)


def ladder_table(report: FiberDimReport) -> str:
    """
    Tabla de texto Dmax x (u_o, k) con las dimensiones de fibra.

    :param report: Informe de fibras
    :return: Tabla renderizada con pandas
    """
    rows = []
    for dmax in report.ladder:
        row = {'Dmax': dmax}
        for u_o in report.samples:
            for k in range(report.nvars + 1):
                row[f"u={fraction_text(u_o)} H^{k}"] = report.dims[dmax][u_o][k]
        rows.append(row)
    return pd.DataFrame(rows).set_index('Dmax').to_string()


class FibersStep(ICommandStep):
    """
    Calcula las fibras en cada escalón y punto u_o; si mu es finito, exige
    constancia y dimensión superior igual a mu.
    """

    def execute(self, context: Dict[str, Any]) -> Dict[str, Any]:
        f = context['poly']
        config = context['config']
        verdict = torsion_growth_verdict(
            f,
            DEFAULT_N_LADDER,
            ladder_for(context),
            samples_for(context),
            config.sign,
            config.max_workers,
        )
        context['cache']['fibers'] = verdict
        payload = verdict.to_dict()
        payload['table'] = ladder_table(verdict.report)
        algebra = try_algebra(context)
        if algebra is not None:
            report = verdict.report
            add_cross_check(context, 'fiber-constancy', verdict.verdict, STABLE_FREE_LIKE, self.get_step_name())
            top = sorted({report.final(u_o, f.nvars) for u_o in report.samples})
            add_cross_check(context, 'fiber-top-dimension', top, [algebra.mu], self.get_step_name())
        logger.info(f"Fibras: veredicto {verdict.verdict}")
        return record_payload(context, self.get_step_name(), payload)

    def get_step_name(self) -> str:
        return "fibers"

    def get_step_description(self) -> str:
        return "Dimensiones de fibra H^k en u = u_o a lo largo de la escalera Dmax"

    def can_execute(self, context: Dict[str, Any]) -> bool:
        return context.get('poly') is not None
