"""
Modelos pydantic de los trabajos y los informes de lglab.

Los racionales se serializan como texto "p/q", los polinomios en u como
listas de coeficientes y las matrices como listas anidadas.
"""
from typing import Any, Dict, List, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator

from config.settings import DEFAULT_U_TRUNCATION, LGLAB_SEED, MAX_U_TRUNCATION

COMMANDS = (
    "milnor",
    "koszul",
    "fibers",
    "freeness",
    "brieskorn",
    "pairing",
    "spectrum",
    "predict",
    "corpus",
    "report",
)

Command = Literal[
    "milnor", "koszul", "fibers", "freeness", "brieskorn", "pairing", "spectrum", "predict", "corpus", "report"
]


class JobSpec(BaseModel):
    """
    Trabajo de cálculo solicitado desde la línea de comandos o desde el corpus.
    """
    command: Command = Field(..., description="Comando a ejecutar")
    polynomial: Optional[str] = Field(
        None,
        description="Texto del polinomio f",
        json_schema_extra={"example": "x^3 - y^2"},
    )
    variables: List[str] = Field(default_factory=list, description="Variables en orden")
    u_truncation: int = Field(
        DEFAULT_U_TRUNCATION,
        description="Orden N de truncación en u",
        ge=2,
        le=MAX_U_TRUNCATION,
    )
    degree_ladder: Optional[List[int]] = Field(None, description="Escalera de ventanas de grado Dmax")
    u_samples: Optional[List[str]] = Field(None, description="Puntos de especialización u_o como racionales")
    seed: int = Field(LGLAB_SEED, description="Semilla del punto pseudoaleatorio")
    assume_tame: bool = Field(False, description="Omite la exigencia del certificado de mansedumbre")
    hypersurface: Optional[List[int]] = Field(
        None,
        description="Par (n, d) para la predicción de hipersuperficies",
        json_schema_extra={"example": [2, 3]},
    )
    corpus_path: Optional[str] = Field(None, description="Fichero de corpus")
    output_path: Optional[str] = Field(None, description="Ruta del informe JSON")

    model_config = ConfigDict(
        json_schema_extra={
            "example": {
                "command": "report",
                "polynomial": "x^3 - y^2",
                "variables": ["x", "y"],
                "u_truncation": 6,
                "seed": 0,
                "assume_tame": False,
            }
        }
    )

    @field_validator("hypersurface")
    @classmethod
    def _pair(cls, value: Optional[List[int]]) -> Optional[List[int]]:
        if value is not None and len(value) != 2:
            raise ValueError("hypersurface debe ser un par n,d")
        return value


class CrossCheck(BaseModel):
    """
    Fila de la tabla de comprobaciones cruzadas: valor calculado frente a previsto.
    """
    name: str = Field(..., description="Identificador de la comprobación")
    computed: str = Field(..., description="Valor calculado")
    predicted: str = Field(..., description="Valor previsto por el oráculo independiente")
    passed: bool = Field(..., description="Veredicto")
    source: str = Field("", description="Paso que produjo la fila")

    model_config = ConfigDict(
        json_schema_extra={
            "example": {
                "name": "kouchnirenko-mu",
                "computed": "2",
                "predicted": "2",
                "passed": True,
                "source": "milnor",
            }
        }
    )


class Conventions(BaseModel):
    """Constantes de convención registradas en cada informe."""
    residue_normalization: str = Field(..., description="Normalización del funcional residuo")
    connection_convention: str = Field(..., description="Convención de la conexión (rescaled/unrescaled)")
    spectrum_shift_anchor: str = Field(..., description="Polinomio que fija el desplazamiento global")
    spectrum_shift: str = Field(..., description="Desplazamiento global de los autovalores")


class Report(BaseModel):
    """
    Informe de un trabajo: eco del trabajo, cargas útiles por paso y tabla de
    comprobaciones cruzadas.
    """
    schema_version: str = Field(..., description="Versión del esquema JSON")
    tool_version: str = Field(..., description="Versión de lglab")
    generated_at: str = Field(..., description="Marca temporal ISO 8601 (único campo no determinista)")
    job: JobSpec = Field(..., description="Trabajo ejecutado")
    conventions: Conventions
    payloads: Dict[str, Any] = Field(default_factory=dict, description="Resultado de cada paso")
    step_results: Dict[str, Dict[str, Any]] = Field(default_factory=dict, description="Estado de cada paso")
    cross_checks: List[CrossCheck] = Field(default_factory=list)
    passed: bool = Field(..., description="Cierto si todas las comprobaciones pasan")
    error: Optional[Dict[str, Any]] = Field(None, description="Error de precondición o invariante")

    model_config = ConfigDict(
        json_schema_extra={
            "example": {
                "schema_version": "1.0.0",
                "tool_version": "0.4.0",
                "generated_at": "2026-01-01T00:00:00+00:00",
                "job": {"command": "milnor", "polynomial": "x^3 - y^2", "variables": ["x", "y"]},
                "conventions": {
                    "residue_normalization": "lambda(hess f) = mu",
                    "connection_convention": "rescaled",
                    "spectrum_shift_anchor": "x^2",
                    "spectrum_shift": "0",
                },
                "payloads": {"milnor": {"mu": 2, "basis": ["1", "x"]}},
                "cross_checks": [],
                "passed": True,
            }
        }
    )


class CorpusRow(BaseModel):
    """Resultado de una entrada del corpus."""
    name: str
    polynomial: str
    variables: List[str]
    expectations: Dict[str, str] = Field(default_factory=dict)
    command: str = Field(..., description="Comando ejecutado para la entrada")
    checks: List[CrossCheck] = Field(default_factory=list)
    passed: bool
    error: Optional[Dict[str, Any]] = None


class CorpusReport(BaseModel):
    """Informe agregado de un corpus, en el orden del fichero."""
    schema_version: str
    tool_version: str
    generated_at: str
    path: str
    conventions: Conventions
    rows: List[CorpusRow] = Field(default_factory=list)
    failures: List[str] = Field(default_factory=list, description="Nombres de las entradas fallidas")
    passed: bool
