"""
Línea de comandos de lglab.

    lglab <comando> --poly <texto> --vars x,y,... [--trunc-u N] [--deg-ladder a,b,c]
          [--samples r1,r2,...] [--assume-tame] [--json <ruta>] [--seed <int>]
    lglab predict --hypersurface n,d
    lglab corpus [ruta]

Códigos de salida: 0 todo correcto, 1 alguna comprobación falla, 2 entrada
mal formada, 3 precondición no satisfecha, 4 invariante interno violado.
"""
import argparse
import json
import os
import sys
from fractions import Fraction
from typing import List, Optional, Sequence

import pandas as pd
from pydantic import BaseModel, ValidationError

from config.settings import DEFAULT_U_TRUNCATION, LGLAB_SEED, LOG_LEVEL
from src.application.job_orchestrator import JobOrchestrator, config_from_job
from src.cli.corpus import corpus_table, run_corpus
from src.cli.models import COMMANDS, JobSpec, Report
from src.domain.errors import InvariantBreach, LglabError
from src.polyalg.parser import parse_variables
from src.utils.logger import get_cli_logger, set_global_level

logger = get_cli_logger()

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_INPUT = 2


def _int_list(text: str) -> List[int]:
    try:
        return [int(item) for item in text.split(",") if item.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"lista de enteros inválida: {text!r}") from exc


def _rational_list(text: str) -> List[str]:
    items = [item.strip() for item in text.split(",") if item.strip()]
    for item in items:
        try:
            Fraction(item)
        except (ValueError, ZeroDivisionError) as exc:
            raise argparse.ArgumentTypeError(f"racional inválido: {item!r}") from exc
    return items


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lglab",
        description="Cohomología de de Rham torcida, retículos de Brieskorn y emparejamientos residuo",
    )
    parser.add_argument("command", choices=COMMANDS, help="Comando a ejecutar")
    parser.add_argument("path", nargs="?", help="Fichero de corpus (solo para 'corpus')")
    parser.add_argument("--poly", help="Polinomio f, p. ej. 'x^3 - y^2'")
    parser.add_argument("--vars", help="Variables separadas por comas, p. ej. 'x,y'")
    parser.add_argument("--trunc-u", type=int, default=DEFAULT_U_TRUNCATION, help="Truncación N en u")
    parser.add_argument("--deg-ladder", type=_int_list, help="Escalera Dmax, p. ej. '2,4,6'")
    parser.add_argument("--samples", type=_rational_list, help="Puntos u_o, p. ej. '0,1,-1,2'")
    parser.add_argument("--assume-tame", action="store_true", help="Omite el certificado de mansedumbre")
    parser.add_argument("--json", dest="json_path", help="Escribe el informe JSON en la ruta dada")
    parser.add_argument("--seed", type=int, default=LGLAB_SEED, help="Semilla del punto pseudoaleatorio")
    parser.add_argument("--hypersurface", type=_int_list, help="Par n,d para 'predict'")
    parser.add_argument("--log-level", default=LOG_LEVEL, help="Nivel de log (DEBUG, INFO, WARNING, ERROR)")
    return parser


def job_from_args(args: argparse.Namespace) -> JobSpec:
    """
    Construye el JobSpec a partir de los argumentos.

    :raises ValueError: si faltan argumentos obligatorios del comando
    :raises ValidationError: si pydantic rechaza algún campo
    """
    if args.command == "predict":
        if args.hypersurface is None and (args.poly is None or args.vars is None):
            raise ValueError("predict requiere --poly y --vars, o --hypersurface n,d")
    elif args.command != "corpus" and (args.poly is None or args.vars is None):
        raise ValueError(f"{args.command} requiere --poly y --vars")
    variables = parse_variables(args.vars) if args.vars else []
    job = JobSpec(
        command=args.command,
        polynomial=args.poly,
        variables=variables,
        u_truncation=args.trunc_u,
        degree_ladder=args.deg_ladder,
        u_samples=args.samples,
        seed=args.seed,
        assume_tame=args.assume_tame,
        hypersurface=args.hypersurface,
        corpus_path=args.path,
        output_path=args.json_path,
    )
    config_from_job(job)
    return job


def write_json(model: BaseModel, path: Optional[str]) -> None:
    if not path:
        return
    directory = os.path.dirname(path)
    if directory:
        os.makedirs(directory, exist_ok=True)
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(model.model_dump_json(indent=2))
        handle.write("\n")
    logger.info(f"Informe escrito en {path}")


def cross_check_table(report: Report) -> str:
    if not report.cross_checks:
        return "(sin comprobaciones cruzadas)"
    frame = pd.DataFrame(
        [
            {
                "comprobación": check.name,
                "calculado": check.computed,
                "previsto": check.predicted,
                "resultado": "ok" if check.passed else "FALLO",
            }
            for check in report.cross_checks
        ]
    )
    return frame.to_string(index=False)


def render_report(report: Report) -> str:
    lines = [f"lglab {report.job.command}  f = {report.job.polynomial or report.job.hypersurface}"]
    for name, payload in report.payloads.items():
        lines.append(f"\n[{name}]")
        body = dict(payload)
        table = body.pop("table", None)
        lines.append(json.dumps(body, indent=2, ensure_ascii=False))
        if table:
            lines.append(table)
    lines.append("\nComprobaciones cruzadas:")
    lines.append(cross_check_table(report))
    return "\n".join(lines)


def _fail(exc: LglabError) -> int:
    print(f"error: {exc.message}", file=sys.stderr)
    if isinstance(exc, InvariantBreach):
        print(json.dumps(exc.witness, indent=2, ensure_ascii=False), file=sys.stderr)
    return exc.exit_code


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Punto de entrada del CLI.

    :param argv: Argumentos (sys.argv[1:] por defecto)
    :return: Código de salida
    """
    args = build_parser().parse_args(argv)
    try:
        set_global_level(args.log_level)
        job = job_from_args(args)
    except LglabError as exc:
        return _fail(exc)
    except (ValueError, ValidationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT

    if job.command == "corpus":
        try:
            corpus = run_corpus(job.corpus_path, job)
        except LglabError as exc:
            return _fail(exc)
        print(corpus_table(corpus))
        write_json(corpus, job.output_path)
        return EXIT_OK if corpus.passed else EXIT_CHECK_FAILED

    orchestrator = JobOrchestrator()
    try:
        report = orchestrator.run(job)
    except LglabError as exc:
        write_json(orchestrator.build_report(job, {}, exc), job.output_path)
        return _fail(exc)
    print(render_report(report))
    write_json(report, job.output_path)
    return EXIT_OK if report.passed else EXIT_CHECK_FAILED


if __name__ == "__main__":
    sys.exit(main())
