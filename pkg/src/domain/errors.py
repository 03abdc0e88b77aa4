"""
Jerarquía de errores de lglab.

Las funciones de librería lanzan estas excepciones; solo el CLI las traduce
a códigos de salida (2 entrada, 3 precondición, 4 invariante interno).
"""
from typing import Any, Dict, Optional


class LglabError(Exception):
    """Error raíz del paquete."""

    exit_code: int = 1

    def __init__(self, message: str):
        super().__init__(message)
        self.message = message

    def to_dict(self) -> Dict[str, Any]:
        """
        Representación serializable del error para el informe.

        :return: Diccionario con tipo y mensaje
        """
        return {"type": type(self).__name__, "message": self.message}


# --- Errores de entrada (código 2) ---

class InputError(LglabError):
    """Entrada mal formada: polinomios, variables o ficheros de corpus."""

    exit_code = 2


class PolynomialSyntaxError(InputError):
    """Error de sintaxis en el texto de un polinomio, con posición."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (posición {position})")
        self.position = position

    def to_dict(self) -> Dict[str, Any]:
        data = super().to_dict()
        data["position"] = self.position
        return data


class UnknownVariableError(InputError):
    """Nombre de variable no declarado en la lista de variables."""

    def __init__(self, name: str, position: int):
        super().__init__(f"Variable desconocida '{name}' (posición {position})")
        self.name = name
        self.position = position

    def to_dict(self) -> Dict[str, Any]:
        data = super().to_dict()
        data.update({"name": self.name, "position": self.position})
        return data


class CorpusFormatError(InputError):
    """Línea de corpus que no respeta el formato `nombre | polinomio | vars | claves`."""

    def __init__(self, line_number: int, reason: str):
        super().__init__(f"Corpus mal formado en la línea {line_number}: {reason}")
        self.line_number = line_number


# --- Precondiciones (código 3) ---

class PreconditionError(LglabError):
    """La entrada es válida pero no cumple la precondición de la operación."""

    exit_code = 3


class InfiniteMilnorNumber(PreconditionError):
    """El ideal jacobiano no es cero-dimensional."""


class NonIsolatedCritical(PreconditionError):
    """El lugar crítico de f no es finito."""


class NotQuasiHomogeneous(PreconditionError):
    """No existen pesos positivos con f = sum w_i x_i df/dx_i."""


class NotConvenient(PreconditionError):
    """El soporte de f no contiene una potencia pura de cada variable."""


class DegenerateFace(PreconditionError):
    """Una cara del poliedro de Newton tiene puntos críticos en el toro."""

    def __init__(self, message: str, face: Optional[list] = None):
        super().__init__(message)
        self.face = face or []

    def to_dict(self) -> Dict[str, Any]:
        data = super().to_dict()
        data["face"] = [list(point) for point in self.face]
        return data


class TamenessUnverified(PreconditionError):
    """El certificado de mansedumbre no se pudo establecer y no hay override."""


class NoStabilization(PreconditionError):
    """Las coordenadas de la reducción no se estabilizan antes de la cota."""


class InvalidLadder(PreconditionError):
    """Escalera de truncaciones no estrictamente creciente o demasiado corta."""


# --- Invariantes internos (código 4) ---

class InvariantBreach(LglabError):
    """Violación de un invariante interno; lleva un testigo minimizado."""

    exit_code = 4

    def __init__(self, message: str, witness: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.witness = witness or {}

    def to_dict(self) -> Dict[str, Any]:
        data = super().to_dict()
        data["witness"] = self.witness
        return data


class SocleNotOneDimensional(InvariantBreach):
    """El zócalo del álgebra de Milnor no es de dimensión uno."""


class DifferentialSquareNonZero(InvariantBreach):
    """El cuadrado del diferencial truncado no es cero."""


class ResidueNormalizationError(InvariantBreach):
    """El funcional residuo no satisface lambda(hess * g) = traza(g)."""


class SmithFormError(InvariantBreach):
    """La descomposición de Smith no verifica U*M*V = S."""
