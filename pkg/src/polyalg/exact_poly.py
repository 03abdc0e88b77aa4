"""
Polinomios multivariados con coeficientes racionales exactos.
"""
from fractions import Fraction
from types import MappingProxyType
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from src.polyalg.monomial_order import Exponent, MonomialOrder, exponent_add

Scalar = Union[int, Fraction]

_DEFAULT_ORDER = MonomialOrder.degrevlex()


class ExactPoly:
    """
    Polinomio inmutable sobre Q en ``nvars`` variables.

    Los términos se guardan como diccionario exponente -> Fraction sin ceros.
    """

    __slots__ = ("_terms", "_nvars", "_hash")

    def __init__(self, terms: Mapping[Exponent, Scalar], nvars: int):
        if nvars < 1:
            raise ValueError("nvars debe ser un entero positivo")
        clean: Dict[Exponent, Fraction] = {}
        for exponent, coeff in terms.items():
            exponent = tuple(int(a) for a in exponent)
            if len(exponent) != nvars or any(a < 0 for a in exponent):
                raise ValueError(f"Exponente inválido {exponent} para {nvars} variables")
            value = Fraction(coeff)
            if value:
                clean[exponent] = clean.get(exponent, Fraction(0)) + value
                if not clean[exponent]:
                    del clean[exponent]
        self._terms = clean
        self._nvars = nvars
        self._hash = None

    @classmethod
    def _raw(cls, terms: Dict[Exponent, Fraction], nvars: int) -> "ExactPoly":
        # Construcción interna sin validar: terms ya está limpio.
        poly = cls.__new__(cls)
        poly._terms = terms
        poly._nvars = nvars
        poly._hash = None
        return poly

    # --- Constructores ---

    @classmethod
    def zero(cls, nvars: int) -> "ExactPoly":
        return cls._raw({}, nvars)

    @classmethod
    def constant(cls, value: Scalar, nvars: int) -> "ExactPoly":
        return cls({(0,) * nvars: value}, nvars)

    @classmethod
    def one(cls, nvars: int) -> "ExactPoly":
        return cls.constant(1, nvars)

    @classmethod
    def variable(cls, index: int, nvars: int) -> "ExactPoly":
        if not 0 <= index < nvars:
            raise ValueError(f"Índice de variable fuera de rango: {index}")
        exponent = tuple(1 if i == index else 0 for i in range(nvars))
        return cls._raw({exponent: Fraction(1)}, nvars)

    @classmethod
    def monomial(cls, exponent: Exponent, coeff: Scalar = 1) -> "ExactPoly":
        return cls({tuple(exponent): coeff}, len(exponent))

    # --- Acceso ---

    @property
    def nvars(self) -> int:
        return self._nvars

    @property
    def terms(self) -> Mapping[Exponent, Fraction]:
        return MappingProxyType(self._terms)

    def coefficient(self, exponent: Exponent) -> Fraction:
        return self._terms.get(tuple(exponent), Fraction(0))

    def support(self) -> List[Exponent]:
        return sorted(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(not any(e) for e in self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def total_degree(self) -> int:
        """Grado total; -1 para el polinomio cero."""
        return max((sum(e) for e in self._terms), default=-1)

    def weighted_degree(self, weights: Sequence[Scalar]) -> Fraction:
        if self.is_zero():
            raise ValueError("El polinomio cero no tiene grado ponderado")
        return max(sum(Fraction(w) * a for w, a in zip(weights, e)) for e in self._terms)

    def is_weighted_homogeneous(self, weights: Sequence[Scalar], degree: Scalar) -> bool:
        target = Fraction(degree)
        return all(sum(Fraction(w) * a for w, a in zip(weights, e)) == target for e in self._terms)

    def leading_term(self, order: MonomialOrder = _DEFAULT_ORDER) -> Tuple[Exponent, Fraction]:
        if not self._terms:
            raise ValueError("El polinomio cero no tiene término líder")
        exponent = max(self._terms, key=order.key)
        return exponent, self._terms[exponent]

    def leading_monomial(self, order: MonomialOrder = _DEFAULT_ORDER) -> Exponent:
        return self.leading_term(order)[0]

    def sorted_terms(self, order: MonomialOrder = _DEFAULT_ORDER) -> List[Tuple[Exponent, Fraction]]:
        """Términos de mayor a menor según el orden."""
        return sorted(self._terms.items(), key=lambda item: order.key(item[0]), reverse=True)

    def monic(self, order: MonomialOrder = _DEFAULT_ORDER) -> "ExactPoly":
        if not self._terms:
            return self
        return self.scale(1 / self.leading_term(order)[1])

    # --- Aritmética ---

    def _coerce(self, other) -> Optional["ExactPoly"]:
        if isinstance(other, ExactPoly):
            if other._nvars != self._nvars:
                raise ValueError("Polinomios con distinto número de variables")
            return other
        if isinstance(other, (int, Fraction)):
            return ExactPoly.constant(other, self._nvars)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        result = dict(self._terms)
        for exponent, coeff in other._terms.items():
            value = result.get(exponent, 0) + coeff
            if value:
                result[exponent] = value
            else:
                result.pop(exponent, None)
        return ExactPoly._raw(result, self._nvars)

    __radd__ = __add__

    def __neg__(self):
        return ExactPoly._raw({e: -c for e, c in self._terms.items()}, self._nvars)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def scale(self, factor: Scalar) -> "ExactPoly":
        factor = Fraction(factor)
        if not factor:
            return ExactPoly.zero(self._nvars)
        return ExactPoly._raw({e: c * factor for e, c in self._terms.items()}, self._nvars)

    def mul_term(self, exponent: Exponent, coeff: Scalar = 1) -> "ExactPoly":
        """Producto por el término coeff * x^exponent."""
        coeff = Fraction(coeff)
        if not coeff:
            return ExactPoly.zero(self._nvars)
        return ExactPoly._raw(
            {exponent_add(e, exponent): c * coeff for e, c in self._terms.items()}, self._nvars
        )

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        result: Dict[Exponent, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                exponent = exponent_add(e1, e2)
                value = result.get(exponent, 0) + c1 * c2
                if value:
                    result[exponent] = value
                else:
                    result.pop(exponent, None)
        return ExactPoly._raw(result, self._nvars)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("El exponente debe ser un entero no negativo")
        result = ExactPoly.one(self._nvars)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, ExactPoly):
            return self._nvars == other._nvars and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == ExactPoly.constant(other, self._nvars)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._nvars, frozenset(self._terms.items())))
        return self._hash

    # --- Cálculo ---

    def partial(self, index: int) -> "ExactPoly":
        """Derivada parcial respecto de x_index."""
        result: Dict[Exponent, Fraction] = {}
        for exponent, coeff in self._terms.items():
            a = exponent[index]
            if a:
                lowered = exponent[:index] + (a - 1,) + exponent[index + 1:]
                result[lowered] = coeff * a
        return ExactPoly._raw(result, self._nvars)

    def gradient(self) -> Tuple["ExactPoly", ...]:
        return tuple(self.partial(i) for i in range(self._nvars))

    def evaluate(self, point: Sequence[Scalar]) -> Fraction:
        total = Fraction(0)
        for exponent, coeff in self._terms.items():
            term = coeff
            for value, a in zip(point, exponent):
                term *= Fraction(value) ** a
            total += term
        return total

    def substitute_scale(self, factors: Sequence[Scalar]) -> "ExactPoly":
        """Sustitución x_i -> factors[i] * x_i."""
        result = {}
        for exponent, coeff in self._terms.items():
            value = coeff
            for factor, a in zip(factors, exponent):
                value *= Fraction(factor) ** a
            if value:
                result[exponent] = value
        return ExactPoly._raw(result, self._nvars)

    def embed(self, nvars: int, offset: int = 0) -> "ExactPoly":
        """Sumerge el polinomio en nvars variables, desplazando los índices."""
        if offset < 0 or offset + self._nvars > nvars:
            raise ValueError("Inmersión fuera de rango")
        result = {}
        for exponent, coeff in self._terms.items():
            result[(0,) * offset + exponent + (0,) * (nvars - offset - self._nvars)] = coeff
        return ExactPoly._raw(result, nvars)

    def to_text(self, variables: Sequence[str]) -> str:
        from src.polyalg.parser import format_poly
        return format_poly(self, variables)

    def __repr__(self) -> str:
        names = [f"x{i + 1}" for i in range(self._nvars)]
        return f"ExactPoly({self.to_text(names)!r}, nvars={self._nvars})"


def poly_sum(polys: Iterable[ExactPoly], nvars: int) -> ExactPoly:
    result: Dict[Exponent, Fraction] = {}
    for poly in polys:
        for exponent, coeff in poly.terms.items():
            value = result.get(exponent, 0) + coeff
            if value:
                result[exponent] = value
            else:
                result.pop(exponent, None)
    return ExactPoly._raw(result, nvars)
