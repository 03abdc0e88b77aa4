"""
Configuración de logging para lglab
Siguiendo principios SOLID y GRASP
"""
import logging
import os
from typing import Optional

from config.settings import LOG_FILE, LOG_FORMAT, LOG_LEVEL, CORPUS_LOG_FILE


def setup_logger(name: str, log_file: Optional[str] = None) -> logging.Logger:
    """
    Configurar logger para el módulo.
    Responsabilidad única: Configuración de logging.

    Args:
        name: Nombre del logger
        log_file: Ruta del archivo de log (opcional)

    Returns:
        Logger configurado
    """
    logger = logging.getLogger(name)

    # Evitar duplicar handlers
    if logger.handlers:
        return logger

    logger.setLevel(getattr(logging, LOG_LEVEL.upper(), logging.INFO))

    # Formato sin emojis
    formatter = logging.Formatter(LOG_FORMAT)

    console_handler = logging.StreamHandler()
    console_handler.setFormatter(formatter)
    logger.addHandler(console_handler)

    if log_file:
        directory = os.path.dirname(log_file)
        if directory:
            os.makedirs(directory, exist_ok=True)
        file_handler = logging.FileHandler(log_file, encoding='utf-8')
        file_handler.setFormatter(formatter)
        logger.addHandler(file_handler)

    return logger


def set_global_level(level: str) -> None:
    """
    Ajusta el nivel de todos los loggers del paquete (opción --log-level del CLI).

    :param level: Nombre del nivel (DEBUG, INFO, WARNING, ERROR)
    """
    numeric = getattr(logging, level.upper(), None)
    if not isinstance(numeric, int):
        raise ValueError(f"Nivel de log desconocido: {level}")
    for name, candidate in logging.Logger.manager.loggerDict.items():
        if isinstance(candidate, logging.Logger) and name.startswith(("src", "lglab")):
            candidate.setLevel(numeric)


def get_cli_logger() -> logging.Logger:
    """
    Obtener logger específico para el CLI.
    Responsabilidad única: Logger especializado para la línea de comandos.

    Returns:
        Logger configurado para el CLI
    """
    return setup_logger('lglab.cli', LOG_FILE)


def get_corpus_logger() -> logging.Logger:
    """
    Obtener logger específico para ejecuciones de corpus.

    Returns:
        Logger configurado para el corpus
    """
    return setup_logger('lglab.corpus', CORPUS_LOG_FILE)
