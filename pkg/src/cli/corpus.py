"""
Ejecución del corpus: una entrada por línea con el formato

    nombre | polinomio | vars | clave=valor clave=valor ...

Claves admitidas: mu, expect (torsion-growth / stable-free-like),
tame (tame-certified / unknown) y qh (yes / no).
"""
import os
from typing import Dict, List, Optional, Tuple

import pandas as pd

from config.settings import CORPUS_PATH, REPORT_SCHEMA_VERSION, TOOL_VERSION
from src.application.job_orchestrator import JobOrchestrator, conventions, timestamp
from src.cli.models import CorpusReport, CorpusRow, CrossCheck, JobSpec, Report
from src.domain.errors import CorpusFormatError, LglabError
from src.polyalg.parser import parse_poly, parse_variables
from src.polyalg.weights import find_weights
from src.twisted_derham.fiber_cohomology import TORSION_GROWTH
from src.utils.logger import get_corpus_logger

logger = get_corpus_logger()

COLUMNS = ["name", "polynomial", "vars", "expectations"]
EXPECTATION_KEYS = ("mu", "expect", "tame", "qh")
TEMPLATE_FIELDS = {"u_truncation", "degree_ladder", "u_samples", "seed", "assume_tame"}


def _data_line_numbers(path: str) -> List[int]:
    with open(path, encoding="utf-8") as handle:
        return [
            number
            for number, line in enumerate(handle, 1)
            if line.strip() and not line.lstrip().startswith("#")
        ]


def _parse_expectations(text: str, line_number: int) -> Dict[str, str]:
    expectations: Dict[str, str] = {}
    for item in text.split():
        key, separator, value = item.partition("=")
        if not separator or not value:
            raise CorpusFormatError(line_number, f"expectativa mal formada '{item}'")
        if key not in EXPECTATION_KEYS:
            raise CorpusFormatError(line_number, f"clave desconocida '{key}'")
        expectations[key] = value
    if "mu" in expectations and not expectations["mu"].isdigit():
        raise CorpusFormatError(line_number, "mu debe ser un entero no negativo")
    return expectations


def load_corpus(path: str) -> List[Tuple[str, str, List[str], Dict[str, str]]]:
    """
    Lee el fichero de corpus con pandas.

    :param path: Ruta del corpus
    :return: Entradas (nombre, polinomio, variables, expectativas) en orden
    :raises CorpusFormatError: si alguna línea no respeta el formato
    """
    if not os.path.exists(path):
        raise CorpusFormatError(0, f"no existe el fichero {path}")
    line_numbers = _data_line_numbers(path)
    if not line_numbers:
        return []
    try:
        frame = pd.read_csv(
            path,
            sep="|",
            comment="#",
            header=None,
            names=COLUMNS,
            dtype=str,
            skip_blank_lines=True,
            keep_default_na=False,
        ).fillna("")
    except pd.errors.ParserError as exc:
        raise CorpusFormatError(0, str(exc)) from exc
    entries = []
    for index, row in enumerate(frame.itertuples(index=False)):
        line_number = line_numbers[index] if index < len(line_numbers) else index + 1
        name, polynomial, variables = (str(row.name).strip(), str(row.polynomial).strip(), str(row.vars).strip())
        if not name or not polynomial or not variables:
            raise CorpusFormatError(line_number, "se esperan al menos nombre | polinomio | vars")
        entries.append(
            (name, polynomial, parse_variables(variables), _parse_expectations(str(row.expectations), line_number))
        )
    return entries


def _expectation_checks(
    report: Report, polynomial: str, variables: List[str], expectations: Dict[str, str]
) -> List[CrossCheck]:
    checks: List[CrossCheck] = []
    payloads = report.payloads

    def add(name: str, computed, predicted) -> None:
        computed_text = "ausente" if computed is None else str(computed)
        checks.append(
            CrossCheck(name=name, computed=computed_text, predicted=predicted, passed=computed_text == predicted, source="corpus")
        )

    if "mu" in expectations:
        add("expected-mu", payloads.get("milnor", {}).get("mu"), expectations["mu"])
    if "expect" in expectations:
        add("expected-fibers", payloads.get("fibers", {}).get("verdict"), expectations["expect"])
    if "tame" in expectations:
        add("expected-tameness", payloads.get("milnor", {}).get("tameness", {}).get("verdict"), expectations["tame"])
    if "qh" in expectations:
        weights = find_weights(parse_poly(polynomial, variables))
        add("expected-qh", "yes" if weights is not None else "no", expectations["qh"])
    return checks


def run_corpus(
    path: Optional[str] = None,
    template: Optional[JobSpec] = None,
    orchestrator: Optional[JobOrchestrator] = None,
) -> CorpusReport:
    """
    Ejecuta todas las entradas del corpus (en paralelo) y agrega los resultados.

    Las entradas con expect=torsion-growth ejecutan ``fibers``; el resto ``report``.

    :param path: Fichero de corpus (el corpus empaquetado por defecto)
    :param template: Trabajo plantilla con truncación, escalera, muestras y semilla
    :param orchestrator: Orquestador inyectado
    :return: CorpusReport con una fila por entrada, en el orden del fichero
    """
    path = path or CORPUS_PATH
    orchestrator = orchestrator or JobOrchestrator()
    entries = load_corpus(path)
    overrides = template.model_dump(include=TEMPLATE_FIELDS) if template else {}
    jobs = [
        JobSpec(
            command="fibers" if expectations.get("expect") == TORSION_GROWTH else "report",
            polynomial=polynomial,
            variables=variables,
            **overrides,
        )
        for _, polynomial, variables, expectations in entries
    ]
    logger.info(f"Corpus {path}: {len(jobs)} entradas")
    reports = orchestrator.run_many(jobs)
    rows: List[CorpusRow] = []
    for (name, polynomial, variables, expectations), job, report in zip(entries, jobs, reports):
        checks = list(report.cross_checks)
        if report.error is None:
            try:
                checks.extend(_expectation_checks(report, polynomial, variables, expectations))
            except LglabError as exc:
                report = report.model_copy(update={"error": exc.to_dict()})
        passed = report.error is None and all(check.passed for check in checks)
        rows.append(
            CorpusRow(
                name=name,
                polynomial=polynomial,
                variables=variables,
                expectations=expectations,
                command=job.command,
                checks=checks,
                passed=passed,
                error=report.error,
            )
        )
        logger.info(f"{name}: {'ok' if passed else 'FALLO'}")
    failures = [row.name for row in rows if not row.passed]
    return CorpusReport(
        schema_version=REPORT_SCHEMA_VERSION,
        tool_version=TOOL_VERSION,
        generated_at=timestamp(),
        path=path,
        conventions=conventions(),
        rows=rows,
        failures=failures,
        passed=not failures,
    )


def corpus_table(report: CorpusReport) -> str:
    """
    Tabla resumen del corpus.

    :param report: Informe agregado
    :return: Texto renderizado por pandas
    """
    if not report.rows:
        return "(corpus vacío)"
    frame = pd.DataFrame(
        [
            {
                "entrada": row.name,
                "polinomio": row.polynomial,
                "comando": row.command,
                "comprobaciones": f"{sum(c.passed for c in row.checks)}/{len(row.checks)}",
                "resultado": "ok" if row.passed else "FALLO",
                "error": row.error["type"] if row.error else "",
            }
            for row in report.rows
        ]
    )
    return frame.to_string(index=False)
