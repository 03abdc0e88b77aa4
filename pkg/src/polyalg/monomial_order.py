"""
Órdenes monomiales globales (1 es el menor monomio).
"""
from dataclasses import dataclass
from typing import Iterable, Optional, Tuple

Exponent = Tuple[int, ...]

DEGREVLEX = "degrevlex"
LEX = "lex"
WEIGHTED_DEGREVLEX = "weighted-degrevlex"

_KINDS = (DEGREVLEX, LEX, WEIGHTED_DEGREVLEX)


@dataclass(frozen=True)
class MonomialOrder:
    """
    Orden monomial multiplicativo y global.
    Responsabilidad única: producir claves de comparación de exponentes.

    La clave crece con el monomio: ``key(a) < key(b)`` si y solo si ``x^a < x^b``.
    """

    kind: str = DEGREVLEX
    weights: Optional[Tuple[int, ...]] = None

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ValueError(f"kind debe ser uno de {_KINDS}, no '{self.kind}'")
        if self.kind == WEIGHTED_DEGREVLEX:
            if not self.weights or any(int(w) != w or w <= 0 for w in self.weights):
                raise ValueError("weights debe ser una tupla de enteros positivos")
        elif self.weights is not None:
            raise ValueError("weights solo aplica al orden weighted-degrevlex")

    @classmethod
    def degrevlex(cls) -> "MonomialOrder":
        return cls(DEGREVLEX)

    @classmethod
    def lex(cls) -> "MonomialOrder":
        return cls(LEX)

    @classmethod
    def weighted(cls, weights: Iterable[int]) -> "MonomialOrder":
        return cls(WEIGHTED_DEGREVLEX, tuple(int(w) for w in weights))

    def key(self, exponent: Exponent) -> tuple:
        """
        Clave de comparación del monomio x^exponent.

        :param exponent: Vector de exponentes
        :return: Tupla comparable
        """
        if self.kind == LEX:
            return tuple(exponent)
        revlex = (sum(exponent), tuple(-a for a in reversed(exponent)))
        if self.kind == DEGREVLEX:
            return revlex
        if len(self.weights) != len(exponent):
            raise ValueError("El vector de pesos no coincide con el número de variables")
        return (sum(w * a for w, a in zip(self.weights, exponent)),) + revlex

    def doubled(self) -> "MonomialOrder":
        """
        Orden del mismo tipo sobre el doble de variables (x, y) usado por el bezoutiano.
        """
        if self.kind == WEIGHTED_DEGREVLEX:
            return MonomialOrder(WEIGHTED_DEGREVLEX, self.weights + self.weights)
        return self

    def max_exponent(self, exponents: Iterable[Exponent]) -> Exponent:
        return max(exponents, key=self.key)


def divides(a: Exponent, b: Exponent) -> bool:
    """x^a divide a x^b."""
    return all(x <= y for x, y in zip(a, b))


def exponent_lcm(a: Exponent, b: Exponent) -> Exponent:
    return tuple(max(x, y) for x, y in zip(a, b))


def exponent_sub(a: Exponent, b: Exponent) -> Exponent:
    return tuple(x - y for x, y in zip(a, b))


def exponent_add(a: Exponent, b: Exponent) -> Exponent:
    return tuple(x + y for x, y in zip(a, b))


def is_coprime(a: Exponent, b: Exponent) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))
