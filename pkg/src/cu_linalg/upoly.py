"""
Polinomios univariados en u con coeficientes racionales exactos.
"""
from fractions import Fraction
from functools import reduce
from math import isqrt, lcm
from typing import Iterable, List, Sequence, Tuple, Union

Scalar = Union[int, Fraction]


class UPoly:
    """
    Elemento de Q[u]; coeficientes de menor a mayor grado, sin ceros finales.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        values = [Fraction(c) for c in coeffs]
        while values and not values[-1]:
            values.pop()
        self._coeffs: Tuple[Fraction, ...] = tuple(values)

    @classmethod
    def constant(cls, value: Scalar) -> "UPoly":
        return cls((value,))

    @classmethod
    def u(cls, power: int = 1) -> "UPoly":
        return cls([0] * power + [1])

    @classmethod
    def zero(cls) -> "UPoly":
        return cls()

    @classmethod
    def one(cls) -> "UPoly":
        return cls((1,))

    @classmethod
    def from_roots(cls, roots: Sequence[Scalar]) -> "UPoly":
        result = cls.one()
        for root in roots:
            result = result * cls((-Fraction(root), 1))
        return result

    @property
    def coeffs(self) -> Tuple[Fraction, ...]:
        return self._coeffs

    def degree(self) -> int:
        """Grado; -1 para el polinomio cero."""
        return len(self._coeffs) - 1

    def is_zero(self) -> bool:
        return not self._coeffs

    def is_unit(self) -> bool:
        return len(self._coeffs) == 1

    def leading_coefficient(self) -> Fraction:
        return self._coeffs[-1] if self._coeffs else Fraction(0)

    def coefficient(self, power: int) -> Fraction:
        return self._coeffs[power] if 0 <= power < len(self._coeffs) else Fraction(0)

    def monic(self) -> "UPoly":
        if not self._coeffs:
            return self
        lead = self._coeffs[-1]
        return UPoly(c / lead for c in self._coeffs)

    def valuation_at_zero(self) -> int:
        """Mayor k con u^k dividiendo al polinomio (el cero no tiene valuación finita)."""
        if not self._coeffs:
            raise ValueError("El polinomio cero no tiene valuación")
        return next(k for k, c in enumerate(self._coeffs) if c)

    def strip_u_power(self) -> "UPoly":
        """Divide por la mayor potencia de u que lo divide."""
        if not self._coeffs:
            return self
        return UPoly(self._coeffs[self.valuation_at_zero():])

    def evaluate(self, point: Scalar) -> Fraction:
        result = Fraction(0)
        for c in reversed(self._coeffs):
            result = result * point + c
        return result

    def truncate(self, order: int) -> "UPoly":
        """Reduce módulo u^order."""
        return UPoly(self._coeffs[:order])

    # --- Aritmética ---

    @staticmethod
    def _coerce(other) -> "UPoly":
        if isinstance(other, UPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return UPoly.constant(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        size = max(len(self._coeffs), len(other._coeffs))
        return UPoly(self.coefficient(k) + other.coefficient(k) for k in range(size))

    __radd__ = __add__

    def __neg__(self):
        return UPoly(-c for c in self._coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not self._coeffs or not other._coeffs:
            return UPoly()
        result = [Fraction(0)] * (len(self._coeffs) + len(other._coeffs) - 1)
        for i, a in enumerate(self._coeffs):
            if a:
                for j, b in enumerate(other._coeffs):
                    result[i + j] += a * b
        return UPoly(result)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        result = UPoly.one()
        for _ in range(exponent):
            result = result * self
        return result

    def __divmod__(self, other: "UPoly") -> Tuple["UPoly", "UPoly"]:
        other = self._coerce(other)
        if other is None or other.is_zero():
            raise ZeroDivisionError("División por el polinomio cero")
        remainder: List[Fraction] = list(self._coeffs)
        quotient = [Fraction(0)] * max(len(remainder) - len(other._coeffs) + 1, 0)
        lead = other._coeffs[-1]
        shift_degree = other.degree()
        while len(remainder) - 1 >= shift_degree and remainder:
            factor = remainder[-1] / lead
            power = len(remainder) - 1 - shift_degree
            quotient[power] = factor
            for k, c in enumerate(other._coeffs):
                remainder[power + k] -= factor * c
            remainder.pop()
            while remainder and not remainder[-1]:
                remainder.pop()
        return UPoly(quotient), UPoly(remainder)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exquo(self, other: "UPoly") -> "UPoly":
        """División exacta; lanza ValueError si hay resto."""
        quotient, remainder = divmod(self, other)
        if not remainder.is_zero():
            raise ValueError("La división no es exacta")
        return quotient

    def divides(self, other: "UPoly") -> bool:
        if self.is_zero():
            return other.is_zero()
        return (other % self).is_zero()

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(self._coeffs)

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def to_text(self, variable: str = "u") -> str:
        if not self._coeffs:
            return "0"
        pieces = []
        for power in range(len(self._coeffs) - 1, -1, -1):
            c = self._coeffs[power]
            if not c:
                continue
            magnitude = abs(c)
            number = str(magnitude.numerator) if magnitude.denominator == 1 else f"{magnitude.numerator}/{magnitude.denominator}"
            if power == 0:
                body = number
            else:
                monomial = variable if power == 1 else f"{variable}^{power}"
                body = monomial if magnitude == 1 else f"{number}*{monomial}"
            if not pieces:
                pieces.append(f"-{body}" if c < 0 else body)
            else:
                pieces.append(f"- {body}" if c < 0 else f"+ {body}")
        return " ".join(pieces)

    def to_json(self) -> List[str]:
        return [fraction_text(c) for c in self._coeffs]

    def __repr__(self) -> str:
        return f"UPoly({self.to_text()!r})"


def fraction_text(value: Scalar) -> str:
    """Racional en texto 'p/q' (o 'p' si es entero)."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def upoly_gcd(a: UPoly, b: UPoly) -> UPoly:
    """Máximo común divisor mónico."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def _divisors(value: int) -> List[int]:
    value = abs(value)
    small = [d for d in range(1, isqrt(value) + 1) if value % d == 0]
    return sorted(set(small + [value // d for d in small]))


def rational_roots(poly: UPoly) -> List[Fraction]:
    """
    Raíces racionales con multiplicidad (teorema de la raíz racional).

    :param poly: Polinomio no nulo
    :return: Lista ordenada de raíces, repetidas según multiplicidad
    """
    if poly.is_zero():
        raise ValueError("El polinomio cero no tiene raíces aisladas")
    roots: List[Fraction] = []
    zero_order = poly.valuation_at_zero()
    roots.extend([Fraction(0)] * zero_order)
    remaining = poly.strip_u_power()
    while remaining.degree() > 0:
        denominators = reduce(lcm, (c.denominator for c in remaining.coeffs), 1)
        integer = [int(c * denominators) for c in remaining.coeffs]
        found = None
        for q in _divisors(integer[-1]):
            for p in _divisors(integer[0]):
                for candidate in (Fraction(p, q), Fraction(-p, q)):
                    if remaining.evaluate(candidate) == 0:
                        found = candidate
                        break
                if found is not None:
                    break
            if found is not None:
                break
        if found is None:
            break
        roots.append(found)
        remaining = remaining.exquo(UPoly((-found, 1)))
    return sorted(roots)
