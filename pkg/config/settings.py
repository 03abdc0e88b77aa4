"""
Configuración centralizada de lglab.

Este módulo contiene todas las constantes del motor algebraico y del CLI,
siguiendo principios de configuración centralizada y separación de responsabilidades.
"""

import os
from pathlib import Path
from typing import Final, Tuple
from dotenv import load_dotenv

# Cargar variables de entorno
load_dotenv()

# Versiones del informe
TOOL_VERSION: Final[str] = "0.4.0"
REPORT_SCHEMA_VERSION: Final[str] = "1.0.0"

# Semilla del punto pseudoaleatorio de u
LGLAB_SEED: Final[int] = int(os.getenv("LGLAB_SEED", "0"))

# Configuración de truncación en u
DEFAULT_U_TRUNCATION: Final[int] = 6
MAX_U_TRUNCATION: Final[int] = 24

# Puntos de especialización u_o (racionales exactos en texto)
DEFAULT_U_SAMPLES: Final[Tuple[str, ...]] = ("0", "1", "-1", "2", "7/3")

# Escalera de grados: deg f + 2i para i = 0..DEFAULT_LADDER_RUNGS-1
DEFAULT_LADDER_RUNGS: Final[int] = 3
MIN_LADDER_BASE: Final[int] = 2
STABILIZATION_AGREEMENTS: Final[int] = 2

# Escalera de truncaciones N para las capas H(Omega[u]/u^N)
DEFAULT_N_LADDER: Final[Tuple[int, ...]] = (1, 2, 3)

# Grados extra en las fuentes del diferencial entrante
DEGREE_SLACK: Final[int] = 2

# Convenciones registradas en cada informe
RESIDUE_NORMALIZATION: Final[str] = "lambda(hess f) = mu"
CONNECTION_CONVENTION: Final[str] = "rescaled"
SPECTRUM_SHIFT_ANCHOR: Final[str] = "x^2"

# Recursos empaquetados, relativos a la raíz del proyecto
PROJECT_ROOT: Final[Path] = Path(__file__).resolve().parent.parent
CORPUS_PATH: Final[str] = str(PROJECT_ROOT / "src" / "resources" / "corpus" / "bundled_corpus.txt")
REPORT_SCHEMA_PATH: Final[str] = str(PROJECT_ROOT / "src" / "resources" / "schema" / "report_schema.json")

# Configuración de concurrencia
MAX_WORKERS: Final[int] = int(os.getenv("LGLAB_MAX_WORKERS", "4"))

# Configuración de logging
LOG_LEVEL: Final[str] = os.getenv("LGLAB_LOG_LEVEL", "INFO")
LOG_FORMAT: Final[str] = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
LOG_FILE: Final[str] = os.getenv("LGLAB_LOG_FILE", "logs/lglab.log")
CORPUS_LOG_FILE: Final[str] = "logs/corpus.log"
