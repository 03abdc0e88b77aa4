from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple

from config.settings import (
    DEFAULT_U_SAMPLES,
    DEFAULT_U_TRUNCATION,
    LGLAB_SEED,
    MAX_U_TRUNCATION,
    MAX_WORKERS,
)


@dataclass
class ComputationConfig:
    """
    Configuración de una computación de lglab.
    Sigue el principio de responsabilidad única (SRP) - solo maneja configuración.
    """

    # Truncación en u
    u_truncation: int = DEFAULT_U_TRUNCATION

    # Escalera de grados Dmax (None = deg f + 2i)
    degree_ladder: Optional[List[int]] = None

    # Puntos de especialización (None = muestras por defecto + punto con semilla)
    u_samples: Optional[List[str]] = None
    seed: int = LGLAB_SEED

    # Ejecución
    assume_tame: bool = False
    max_workers: int = MAX_WORKERS
    sign: int = 1

    def __post_init__(self):
        """
        Inicialización post-constructor para validar configuración.
        """
        if not 2 <= self.u_truncation <= MAX_U_TRUNCATION:
            raise ValueError(f"u_truncation debe estar entre 2 y {MAX_U_TRUNCATION}")

        if self.degree_ladder is not None:
            if len(self.degree_ladder) < 3:
                raise ValueError("degree_ladder necesita al menos tres peldaños")
            if any(b <= a for a, b in zip(self.degree_ladder, self.degree_ladder[1:])):
                raise ValueError("degree_ladder debe ser estrictamente creciente")
            if self.degree_ladder[0] < 0:
                raise ValueError("degree_ladder no admite grados negativos")

        if self.u_samples is not None:
            if not self.u_samples:
                raise ValueError("u_samples no puede estar vacío")
            for text in self.u_samples:
                try:
                    Fraction(text)
                except (ValueError, ZeroDivisionError) as exc:
                    raise ValueError(f"Muestra de u no racional: {text!r}") from exc

        if self.max_workers <= 0:
            raise ValueError("max_workers debe ser un número positivo")

        if self.sign not in (1, -1):
            raise ValueError("sign debe ser +1 o -1")

    def samples(self) -> Optional[Tuple[Fraction, ...]]:
        """
        Muestras de u como racionales exactos.

        :return: Tupla de Fraction o None si se usan las muestras por defecto
        """
        if self.u_samples is None:
            return None
        return tuple(Fraction(text) for text in self.u_samples)

    def ladder(self) -> Optional[Tuple[int, ...]]:
        return tuple(self.degree_ladder) if self.degree_ladder is not None else None

    def to_dict(self) -> Dict[str, Any]:
        """
        Convierte la configuración a diccionario.

        :return: Diccionario con la configuración
        """
        return {
            'u_truncation': self.u_truncation,
            'degree_ladder': self.degree_ladder,
            'u_samples': self.u_samples if self.u_samples is not None else list(DEFAULT_U_SAMPLES),
            'seed': self.seed,
            'assume_tame': self.assume_tame,
            'max_workers': self.max_workers,
            'sign': self.sign,
        }

    @classmethod
    def from_dict(cls, config_dict: Dict[str, Any]) -> 'ComputationConfig':
        """
        Crea una instancia de ComputationConfig desde un diccionario.
        Factory method que sigue el principio de responsabilidad única.

        :param config_dict: Diccionario con la configuración
        :return: Instancia de ComputationConfig
        """
        return cls(
            u_truncation=config_dict.get('u_truncation', DEFAULT_U_TRUNCATION),
            degree_ladder=config_dict.get('degree_ladder'),
            u_samples=config_dict.get('u_samples'),
            seed=config_dict.get('seed', LGLAB_SEED),
            assume_tame=config_dict.get('assume_tame', False),
            max_workers=config_dict.get('max_workers', MAX_WORKERS),
            sign=config_dict.get('sign', 1),
        )
