from concurrent.futures import ThreadPoolExecutor, as_completed
from datetime import datetime, timezone
from typing import Any, Callable, Dict, List, Optional, Sequence

from config.settings import (
    CONNECTION_CONVENTION,
    MAX_WORKERS,
    REPORT_SCHEMA_VERSION,
    RESIDUE_NORMALIZATION,
    SPECTRUM_SHIFT_ANCHOR,
    TOOL_VERSION,
)
from src.brieskorn.lattice import spectrum_shift_anchor
from src.cli.models import Conventions, CrossCheck, JobSpec, Report
from src.cu_linalg.upoly import fraction_text
from src.domain.errors import LglabError
from src.domain.i_command_step import ICommandStep
from src.infrastructure.command_steps import (
    BrieskornStep,
    ConsistencyStep,
    FibersStep,
    FreenessStep,
    KoszulStep,
    MilnorStep,
    PairingStep,
    PredictStep,
    SpectrumStep,
)
from src.infrastructure.command_steps.context import new_context
from src.infrastructure.computation_config import ComputationConfig
from src.polyalg.parser import parse_poly
from src.utils.logger import setup_logger

logger = setup_logger(__name__)


def default_steps() -> Dict[str, List[ICommandStep]]:
    """
    Pasos por comando. ``report`` compone todos en orden.
    """
    milnor, koszul, fibers, freeness = MilnorStep(), KoszulStep(), FibersStep(), FreenessStep()
    brieskorn, pairing, spectrum, predict = BrieskornStep(), PairingStep(), SpectrumStep(), PredictStep()
    return {
        "milnor": [milnor],
        "koszul": [koszul],
        "fibers": [fibers],
        "freeness": [freeness],
        "brieskorn": [brieskorn],
        "pairing": [pairing],
        "spectrum": [spectrum],
        "predict": [predict],
        "report": [milnor, koszul, fibers, freeness, brieskorn, pairing, spectrum, predict, ConsistencyStep()],
    }


def conventions() -> Conventions:
    return Conventions(
        residue_normalization=RESIDUE_NORMALIZATION,
        connection_convention=CONNECTION_CONVENTION,
        spectrum_shift_anchor=SPECTRUM_SHIFT_ANCHOR,
        spectrum_shift=fraction_text(spectrum_shift_anchor(CONNECTION_CONVENTION)),
    )


def timestamp() -> str:
    return datetime.now(timezone.utc).isoformat(timespec="seconds")


def config_from_job(job: JobSpec) -> ComputationConfig:
    return ComputationConfig(
        u_truncation=job.u_truncation,
        degree_ladder=job.degree_ladder,
        u_samples=job.u_samples,
        seed=job.seed,
        assume_tame=job.assume_tame,
    )


class JobOrchestrator:
    """
    Orquestador de trabajos de lglab.
    Sigue el principio de responsabilidad única (SRP) - solo orquesta la ejecución.

    En un comando simple los pasos se ejecutan siempre (sus precondiciones se
    traducen en errores); en ``report`` los pasos cuyo ``can_execute`` falla se
    registran como omitidos.
    """

    def __init__(self, steps: Optional[Dict[str, List[ICommandStep]]] = None, max_workers: int = MAX_WORKERS):
        """
        Constructor con inyección de dependencias (DIP).

        :param steps: Pasos por comando (default_steps() si no se dan)
        :param max_workers: Número máximo de trabajos concurrentes en run_many
        """
        self.steps = steps or default_steps()
        self.max_workers = max_workers

    def _build_context(self, job: JobSpec) -> Dict[str, Any]:
        poly = parse_poly(job.polynomial, job.variables) if job.polynomial is not None else None
        return new_context(poly, job.variables, config_from_job(job), job.hypersurface)

    def _execute_steps(self, job: JobSpec, context: Dict[str, Any]) -> Dict[str, Any]:
        """
        Ejecuta los pasos del comando en secuencia.

        :param job: Trabajo
        :param context: Contexto inicial
        :return: Contexto final
        """
        steps = self.steps[job.command]
        optional = len(steps) > 1
        for i, step in enumerate(steps, 1):
            logger.debug(f"Paso {i}/{len(steps)}: {step.get_step_name()}")
            if optional and not step.can_execute(context):
                logger.info(f"Paso omitido: {step.get_step_name()}")
                context['step_results'][step.get_step_name()] = {
                    'status': 'skipped',
                    'reason': 'Precondiciones no satisfechas',
                }
                continue
            context = step.execute(context)
        return context

    def run(self, job: JobSpec) -> Report:
        """
        Ejecuta un trabajo y construye su informe.

        :param job: Trabajo validado
        :return: Report (passed es cierto si todas las comprobaciones pasan)
        :raises LglabError: errores de entrada, precondición o invariante
        """
        if job.command not in self.steps:
            raise ValueError(f"Comando sin pasos: {job.command}")
        logger.info(f"Trabajo {job.command}: {job.polynomial or job.hypersurface}")
        context = self._execute_steps(job, self._build_context(job))
        return self.build_report(job, context)

    def build_report(self, job: JobSpec, context: Dict[str, Any], error: Optional[LglabError] = None) -> Report:
        checks = [CrossCheck(**row) for row in context['cross_checks']] if context else []
        return Report(
            schema_version=REPORT_SCHEMA_VERSION,
            tool_version=TOOL_VERSION,
            generated_at=timestamp(),
            job=job,
            conventions=conventions(),
            payloads=context['payloads'] if context else {},
            step_results=context['step_results'] if context else {},
            cross_checks=checks,
            passed=error is None and all(check.passed for check in checks),
            error=error.to_dict() if error else None,
        )

    def run_safe(self, job: JobSpec) -> Report:
        """
        Como run, pero un LglabError queda registrado en el informe.
        """
        try:
            return self.run(job)
        except LglabError as exc:
            logger.warning(f"Trabajo {job.command} fallido: {exc.message}")
            return self.build_report(job, {}, exc)

    def run_many(self, jobs: Sequence[JobSpec], runner: Optional[Callable[[JobSpec], Report]] = None) -> List[Report]:
        """
        Ejecuta trabajos independientes en paralelo usando ThreadPoolExecutor.
        El resultado conserva el orden de entrada.

        :param jobs: Trabajos
        :param runner: Función de ejecución (run_safe por defecto)
        :return: Informes en el orden de jobs
        """
        runner = runner or self.run_safe
        results: Dict[int, Report] = {}
        with ThreadPoolExecutor(max_workers=self.max_workers) as executor:
            future_to_index = {executor.submit(runner, job): i for i, job in enumerate(jobs)}
            for future in as_completed(future_to_index):
                results[future_to_index[future]] = future.result()
        logger.info(f"Trabajos completados: {len(results)}")
        return [results[i] for i in range(len(jobs))]
