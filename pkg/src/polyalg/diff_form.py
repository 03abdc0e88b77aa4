"""
Formas diferenciales algebraicas sobre el espacio afín y diferenciales torcidos.

Una k-forma se guarda como diccionario índice creciente -> ExactPoly; el signo
de dx_i ^ dx_I se normaliza ordenando y contando transposiciones.
"""
from fractions import Fraction
from types import MappingProxyType
from typing import Dict, Mapping, Optional, Sequence, Tuple, Union

from src.polyalg.exact_poly import ExactPoly, Scalar

Index = Tuple[int, ...]


def merge_indices(left: Index, right: Index) -> Tuple[int, Optional[Index]]:
    """
    Signo de dx_left ^ dx_right respecto de la base ordenada.

    :return: (signo, índice ordenado) o (0, None) si se repite un índice
    """
    if set(left) & set(right):
        return 0, None
    inversions = sum(1 for a in left for b in right if a > b)
    return (-1 if inversions % 2 else 1), tuple(sorted(left + right))


class DiffForm:
    """
    k-forma diferencial con coeficientes ExactPoly.
    Responsabilidad única: aritmética exterior sobre Omega^k.
    """

    __slots__ = ("_degree", "_nvars", "_components")

    def __init__(self, degree: int, nvars: int, components: Mapping[Index, ExactPoly]):
        if not 0 <= degree <= nvars:
            raise ValueError(f"El grado {degree} debe estar entre 0 y {nvars}")
        clean: Dict[Index, ExactPoly] = {}
        for index, coeff in components.items():
            index = tuple(index)
            if len(index) != degree or any(b <= a for a, b in zip(index, index[1:])):
                raise ValueError(f"Índice {index} no es un subconjunto creciente de tamaño {degree}")
            if any(i < 0 or i >= nvars for i in index):
                raise ValueError(f"Índice {index} fuera de rango")
            if coeff.nvars != nvars:
                raise ValueError("Coeficiente con distinto número de variables")
            if not coeff.is_zero():
                clean[index] = clean[index] + coeff if index in clean else coeff
                if clean[index].is_zero():
                    del clean[index]
        self._degree = degree
        self._nvars = nvars
        self._components = clean

    # --- Constructores ---

    @classmethod
    def zero(cls, degree: int, nvars: int) -> "DiffForm":
        return cls(degree, nvars, {})

    @classmethod
    def function(cls, poly: ExactPoly) -> "DiffForm":
        """0-forma asociada a un polinomio."""
        return cls(0, poly.nvars, {(): poly})

    @classmethod
    def basis(cls, index: Index, nvars: int, coeff: Optional[ExactPoly] = None) -> "DiffForm":
        """La forma coeff * dx_index."""
        coeff = coeff if coeff is not None else ExactPoly.one(nvars)
        return cls(len(index), nvars, {tuple(index): coeff})

    @classmethod
    def top(cls, poly: ExactPoly) -> "DiffForm":
        """La n-forma poly * dx_1 ^ ... ^ dx_n."""
        return cls(poly.nvars, poly.nvars, {tuple(range(poly.nvars)): poly})

    # --- Acceso ---

    @property
    def degree(self) -> int:
        return self._degree

    @property
    def nvars(self) -> int:
        return self._nvars

    @property
    def components(self) -> Mapping[Index, ExactPoly]:
        return MappingProxyType(self._components)

    def coefficient(self, index: Index) -> ExactPoly:
        return self._components.get(tuple(index), ExactPoly.zero(self._nvars))

    def is_zero(self) -> bool:
        return not self._components

    def total_degree(self) -> int:
        """Grado polinomial máximo de los coeficientes (-1 si la forma es cero)."""
        return max((c.total_degree() for c in self._components.values()), default=-1)

    # --- Aritmética ---

    def _check(self, other: "DiffForm") -> None:
        if other._degree != self._degree or other._nvars != self._nvars:
            raise ValueError("Formas de distinto grado o dimensión")

    def __add__(self, other: "DiffForm") -> "DiffForm":
        self._check(other)
        result = dict(self._components)
        for index, coeff in other._components.items():
            result[index] = result[index] + coeff if index in result else coeff
        return DiffForm(self._degree, self._nvars, result)

    def __neg__(self) -> "DiffForm":
        return DiffForm(self._degree, self._nvars, {i: -c for i, c in self._components.items()})

    def __sub__(self, other: "DiffForm") -> "DiffForm":
        return self + (-other)

    def multiply(self, factor: Union[ExactPoly, Scalar]) -> "DiffForm":
        """Producto por una función o un escalar."""
        return DiffForm(self._degree, self._nvars, {i: c * factor for i, c in self._components.items()})

    def wedge(self, other: "DiffForm") -> "DiffForm":
        """Producto exterior self ^ other."""
        if other._nvars != self._nvars:
            raise ValueError("Formas sobre espacios distintos")
        degree = self._degree + other._degree
        if degree > self._nvars:
            raise ValueError(f"El producto exterior supera el grado máximo {self._nvars}")
        result: Dict[Index, ExactPoly] = {}
        for left, a in self._components.items():
            for right, b in other._components.items():
                sign, index = merge_indices(left, right)
                if sign:
                    term = a * b if sign > 0 else -(a * b)
                    result[index] = result[index] + term if index in result else term
        return DiffForm(degree, self._nvars, result)

    def contract_euler(self, weights: Sequence[Scalar]) -> "DiffForm":
        """
        Producto interior con el campo de Euler ponderado E = sum w_i x_i d/dx_i.

        :param weights: Pesos w_i
        :return: (k-1)-forma iota_E(self)
        """
        if self._degree == 0:
            raise ValueError("No hay contracción de una 0-forma")
        result: Dict[Index, ExactPoly] = {}
        for index, coeff in self._components.items():
            for position, i in enumerate(index):
                factor = Fraction(weights[i]) * (-1 if position % 2 else 1)
                term = coeff.mul_term(tuple(1 if j == i else 0 for j in range(self._nvars)), factor)
                reduced = index[:position] + index[position + 1:]
                result[reduced] = result[reduced] + term if reduced in result else term
        return DiffForm(self._degree - 1, self._nvars, result)

    def __eq__(self, other) -> bool:
        if not isinstance(other, DiffForm):
            return NotImplemented
        return (self._degree, self._nvars, self._components) == (other._degree, other._nvars, other._components)

    def __hash__(self):
        return hash((self._degree, self._nvars, frozenset(self._components.items())))

    def __repr__(self) -> str:
        return f"DiffForm(degree={self._degree}, components={dict(self._components)})"


def exterior_d(form: DiffForm) -> DiffForm:
    """
    Diferencial exterior d: Omega^k -> Omega^{k+1}.

    :param form: k-forma
    :return: dω (la forma cero de grado n si ω es de grado máximo)
    """
    n = form.nvars
    if form.degree == n:
        return DiffForm.zero(n, n)
    result: Dict[Index, ExactPoly] = {}
    for index, coeff in form.components.items():
        for i in range(n):
            sign, merged = merge_indices((i,), index)
            if not sign:
                continue
            derivative = coeff.partial(i)
            if derivative.is_zero():
                continue
            term = derivative if sign > 0 else -derivative
            result[merged] = result[merged] + term if merged in result else term
    return DiffForm(form.degree + 1, n, result)


def wedge_df(f: ExactPoly, form: DiffForm) -> DiffForm:
    """
    Producto df ^ ω.

    :param f: Función
    :param form: k-forma
    :return: (k+1)-forma df ^ ω
    """
    n = form.nvars
    if form.degree == n:
        return DiffForm.zero(n, n)
    return exterior_d(DiffForm.function(f)).wedge(form)


class UDiffForm:
    """
    Elemento de Omega^k[u]/u^N: tupla de N formas indexadas por potencia de u.
    """

    __slots__ = ("_coeffs", "_degree", "_nvars")

    def __init__(self, coeffs: Sequence[DiffForm], truncation: Optional[int] = None):
        coeffs = tuple(coeffs)
        if truncation is not None:
            if truncation < 1:
                raise ValueError("La truncación N debe ser >= 1")
            if len(coeffs) > truncation:
                coeffs = coeffs[:truncation]
            elif coeffs and len(coeffs) < truncation:
                coeffs = coeffs + tuple(DiffForm.zero(coeffs[0].degree, coeffs[0].nvars) for _ in range(truncation - len(coeffs)))
        if not coeffs:
            raise ValueError("Se requiere al menos un coeficiente")
        degree, nvars = coeffs[0].degree, coeffs[0].nvars
        if any(c.degree != degree or c.nvars != nvars for c in coeffs):
            raise ValueError("Todos los coeficientes deben compartir grado y dimensión")
        self._coeffs = coeffs
        self._degree = degree
        self._nvars = nvars

    @classmethod
    def constant(cls, form: DiffForm, truncation: int) -> "UDiffForm":
        return cls((form,), truncation)

    @classmethod
    def zero(cls, degree: int, nvars: int, truncation: int) -> "UDiffForm":
        return cls(tuple(DiffForm.zero(degree, nvars) for _ in range(truncation)))

    @property
    def coeffs(self) -> Tuple[DiffForm, ...]:
        return self._coeffs

    @property
    def truncation(self) -> int:
        return len(self._coeffs)

    @property
    def degree(self) -> int:
        return self._degree

    @property
    def nvars(self) -> int:
        return self._nvars

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self._coeffs)

    def __add__(self, other: "UDiffForm") -> "UDiffForm":
        if other.truncation != self.truncation:
            raise ValueError("Truncaciones distintas")
        return UDiffForm(tuple(a + b for a, b in zip(self._coeffs, other._coeffs)))

    def __neg__(self) -> "UDiffForm":
        return UDiffForm(tuple(-c for c in self._coeffs))

    def __sub__(self, other: "UDiffForm") -> "UDiffForm":
        return self + (-other)

    def scale_u(self, power: int = 1) -> "UDiffForm":
        """Multiplica por u^power dentro de la misma truncación."""
        zero = DiffForm.zero(self._degree, self._nvars)
        shifted = (zero,) * power + self._coeffs
        return UDiffForm(shifted[: self.truncation])

    def u_degree_truncate(self, truncation: int) -> "UDiffForm":
        return UDiffForm(self._coeffs, truncation)

    def __eq__(self, other) -> bool:
        if not isinstance(other, UDiffForm):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(self._coeffs)

    def __repr__(self) -> str:
        return f"UDiffForm(N={self.truncation}, coeffs={list(self._coeffs)})"


def twisted_differential(f: ExactPoly, form: UDiffForm, sign: int = 1) -> UDiffForm:
    """
    Aplica (u d + sign df^) módulo u^N.

    :param f: Función f
    :param form: Elemento de Omega^k[u]/u^N
    :param sign: +1 o -1
    :return: Elemento de Omega^{k+1}[u]/u^N
    """
    if sign not in (1, -1):
        raise ValueError("sign debe ser +1 o -1")
    n = form.nvars
    if form.degree == n:
        return UDiffForm.zero(n, n, form.truncation)
    result = []
    for j, coeff in enumerate(form.coeffs):
        term = wedge_df(f, coeff)
        if sign < 0:
            term = -term
        if j > 0:
            term = term + exterior_d(form.coeffs[j - 1])
        result.append(term)
    return UDiffForm(result)
