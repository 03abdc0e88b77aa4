#!/usr/bin/env python3
"""
Script de configuración inicial de lglab.

Responsable de preparar el entorno de desarrollo siguiendo
principios de responsabilidad única y manejo robusto de errores.
"""

import json
import subprocess
import sys
import logging
from typing import List
from pathlib import Path

logging.basicConfig(
    level=logging.INFO,
    format="%(asctime)s - %(name)s - %(levelname)s - %(message)s"
)
logger = logging.getLogger(__name__)


class SetupError(Exception):
    """Excepción personalizada para errores de configuración."""
    pass


class EnvironmentSetup:
    """Clase responsable de configurar el entorno de desarrollo."""

    def __init__(self) -> None:
        """Inicializar el configurador de entorno."""
        self.directories: List[str] = [
            "src/resources/corpus", "src/resources/schema",
            "tests/unit", "tests/integration", "tests/cli",
            "config", "logs", "reports"
        ]

    def create_directories(self) -> None:
        """Crear estructura de directorios del proyecto."""
        logger.info("Creando estructura de directorios")

        for directory in self.directories:
            try:
                Path(directory).mkdir(parents=True, exist_ok=True)
                logger.info(f"Directorio creado: {directory}")
            except OSError as e:
                error_msg = f"Error al crear directorio {directory}: {e}"
                logger.error(error_msg)
                raise SetupError(error_msg) from e

    def install_requirements(self) -> None:
        """Instalar dependencias del proyecto."""
        logger.info("Instalando dependencias del proyecto")

        try:
            subprocess.check_call([
                sys.executable, "-m", "pip", "install", "-r", "requirements.txt"
            ], stdout=subprocess.PIPE, stderr=subprocess.PIPE)
            logger.info("Dependencias instaladas correctamente")
        except subprocess.CalledProcessError as e:
            error_msg = f"Error al instalar dependencias: {e}"
            logger.error(error_msg)
            raise SetupError(error_msg) from e
        except FileNotFoundError:
            error_msg = "No se encontró el archivo requirements.txt"
            logger.error(error_msg)
            raise SetupError(error_msg)

    def validate_configuration(self) -> None:
        """Validar que la configuración y los recursos empaquetados existen."""
        logger.info("Validando configuración")

        try:
            from config.settings import CORPUS_PATH, REPORT_SCHEMA_PATH, TOOL_VERSION
        except ImportError as e:
            error_msg = f"Error al cargar configuración: {e}"
            logger.error(error_msg)
            raise SetupError(error_msg) from e

        for resource in (CORPUS_PATH, REPORT_SCHEMA_PATH):
            if not Path(resource).exists():
                raise SetupError(f"Falta el recurso empaquetado {resource}")
        logger.info(f"Configuración de lglab {TOOL_VERSION} cargada correctamente")

    def validate_resources(self) -> None:
        """Comprobar que el corpus se puede leer y que el esquema JSON es válido."""
        logger.info("Validando recursos empaquetados")

        try:
            from jsonschema import Draft202012Validator
            from jsonschema.exceptions import SchemaError

            from config.settings import CORPUS_PATH, REPORT_SCHEMA_PATH
            from src.cli.corpus import load_corpus
            from src.domain.errors import LglabError
        except ImportError as e:
            error_msg = f"Error al importar lglab: {e}"
            logger.error(error_msg)
            raise SetupError(error_msg) from e

        try:
            entries = load_corpus(CORPUS_PATH)
            with open(REPORT_SCHEMA_PATH, encoding="utf-8") as f:
                Draft202012Validator.check_schema(json.load(f))
        except (LglabError, SchemaError, ValueError) as e:
            error_msg = f"Recurso empaquetado inválido: {e}"
            logger.error(error_msg)
            raise SetupError(error_msg) from e
        logger.info(f"Corpus con {len(entries)} entradas y esquema de informe válidos")

    def create_env_template(self) -> None:
        """Crear plantilla de archivo .env si no existe."""
        env_path = Path(".env")
        if not env_path.exists():
            logger.info("Creando plantilla de archivo .env")
            try:
                with open(env_path, "w") as f:
                    f.write("LGLAB_SEED=0\n")
                    f.write("LGLAB_MAX_WORKERS=4\n")
                    f.write("LGLAB_LOG_LEVEL=INFO\n")
                logger.info("Plantilla .env creada")
            except IOError as e:
                error_msg = f"Error al crear archivo .env: {e}"
                logger.error(error_msg)
                raise SetupError(error_msg) from e

    def run(self) -> None:
        """Ejecutar configuración completa del entorno."""
        logger.info("Iniciando configuración del entorno de lglab")

        try:
            self.create_directories()
            self.install_requirements()
            self.validate_configuration()
            self.validate_resources()
            self.create_env_template()
            logger.info("Configuración completada exitosamente")
        except SetupError:
            logger.error("Configuración falló")
            sys.exit(1)


def main() -> None:
    """Función principal del script de configuración."""
    setup = EnvironmentSetup()
    setup.run()


def package_setup() -> None:
    """Metadatos de empaquetado para `pip install` (setuptools invoca este archivo con comandos)."""
    from setuptools import find_packages, setup

    setup(
        name="lglab",
        version="0.4.0",
        packages=find_packages(include=["src", "src.*"]) + ["config"],
        package_data={"src": ["resources/corpus/*", "resources/schema/*"]},
        python_requires=">=3.9",
        install_requires=[
            "pandas>=2.0.0",
            "numpy>=1.21.0",
            "python-dotenv>=1.0.0",
            "pydantic>=2.5.0",
            "scipy>=1.11.0",
            "jsonschema>=4.19.0",
        ],
        extras_require={"test": ["pytest", "sympy>=1.12"]},
    )


if __name__ == "__main__":
    if len(sys.argv) > 1:
        package_setup()
    else:
        main()
