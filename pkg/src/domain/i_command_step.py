from abc import ABC, abstractmethod
from typing import Dict, Any


class ICommandStep(ABC):
    """
    Interfaz para los pasos de cálculo que componen un comando de lglab.
    Sigue el principio de inversión de dependencias (DIP) de SOLID.

    Cada paso lee el contexto compartido (polinomio, configuración, resultados
    de pasos anteriores) y añade su carga útil y sus comprobaciones cruzadas.
    """

    @abstractmethod
    def execute(self, context: Dict[str, Any]) -> Dict[str, Any]:
        """
        Ejecuta el paso.

        :param context: Contexto con los resultados de los pasos anteriores
        :return: Contexto enriquecido para el siguiente paso
        """
        pass

    @abstractmethod
    def get_step_name(self) -> str:
        """
        Retorna el nombre identificador del paso.

        :return: Nombre del paso
        """
        pass

    @abstractmethod
    def get_step_description(self) -> str:
        """
        Retorna la descripción del paso.

        :return: Descripción del paso
        """
        pass

    @abstractmethod
    def can_execute(self, context: Dict[str, Any]) -> bool:
        """
        Verifica si el paso puede ejecutarse con el contexto dado.

        :param context: Contexto a validar
        :return: True si el paso puede ejecutarse
        """
        pass
