"""
Álgebra de Milnor Q[x]/Jac(f): base de monomios estándar, número de Milnor
y operaciones lineales (multiplicación, traza, zócalo, hessiano).
"""
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from src.cu_linalg.rational_matrix import RationalMatrix, rational_nullspace
from src.domain.errors import InfiniteMilnorNumber, SocleNotOneDimensional
from src.groebner.buchberger import GroebnerBasis, buchberger, division_record, normal_form
from src.polyalg.exact_poly import ExactPoly
from src.polyalg.monomial_order import Exponent, MonomialOrder, divides
from src.utils.logger import setup_logger

logger = setup_logger(__name__)


def is_zero_dimensional(gb: GroebnerBasis) -> bool:
    """
    Cero-dimensionalidad: cada variable tiene una potencia pura como monomio líder
    (o el ideal es el total).
    """
    if gb.is_unit_ideal():
        return True
    heads = gb.leading_monomials()
    for i in range(gb.nvars):
        if not any(head[i] > 0 and sum(head) == head[i] for head in heads):
            return False
    return True


def standard_monomials(gb: GroebnerBasis) -> List[Exponent]:
    """
    Monomios no divisibles por ningún monomio líder, en orden creciente.

    :param gb: Base de un ideal cero-dimensional
    :return: Lista de exponentes (1 primero)
    """
    if not is_zero_dimensional(gb):
        raise InfiniteMilnorNumber("El conjunto de monomios estándar es infinito")
    heads = gb.leading_monomials()
    origin = (0,) * gb.nvars
    if any(divides(head, origin) for head in heads):
        return []
    seen = {origin}
    queue = deque([origin])
    found: List[Exponent] = []
    while queue:
        exponent = queue.popleft()
        found.append(exponent)
        for i in range(gb.nvars):
            candidate = exponent[:i] + (exponent[i] + 1,) + exponent[i + 1:]
            if candidate in seen or any(divides(head, candidate) for head in heads):
                continue
            seen.add(candidate)
            queue.append(candidate)
    return sorted(found, key=gb.order.key)


@dataclass(frozen=True)
class MilnorAlgebra:
    """
    Álgebra de Milnor de f con su base de monomios estándar.

    El cociente se representa por formas normales respecto de ``gb``;
    ``coordinates`` lee una clase en la base.
    """

    f: ExactPoly
    basis: Tuple[Exponent, ...]
    gb: GroebnerBasis
    partials: Tuple[ExactPoly, ...]
    _positions: Dict[Exponent, int] = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self):
        self._positions.update({exponent: i for i, exponent in enumerate(self.basis)})

    @property
    def mu(self) -> int:
        return len(self.basis)

    @property
    def nvars(self) -> int:
        return self.f.nvars

    def basis_polys(self) -> List[ExactPoly]:
        return [ExactPoly.monomial(exponent) for exponent in self.basis]

    def normal_form(self, poly: ExactPoly) -> ExactPoly:
        return normal_form(poly, self.gb)

    def coordinates(self, poly: ExactPoly) -> List[Fraction]:
        """
        Coordenadas de la clase de poly en la base estándar.

        :param poly: Polinomio cualquiera
        :return: Vector de longitud mu
        """
        return self.coordinates_of_normal_form(self.normal_form(poly))

    def coordinates_of_normal_form(self, nf: ExactPoly) -> List[Fraction]:
        vector = [Fraction(0)] * self.mu
        for exponent, coeff in nf.terms.items():
            vector[self._positions[exponent]] = coeff
        return vector

    def from_coordinates(self, vector: Sequence[Fraction]) -> ExactPoly:
        return ExactPoly({e: c for e, c in zip(self.basis, vector)}, self.nvars)

    def jacobian_cofactors(self, poly: ExactPoly) -> Tuple[ExactPoly, Tuple[ExactPoly, ...]]:
        """
        Escribe poly = nf + sum h_i * df/dx_i usando el lift de la base.

        :param poly: Polinomio
        :return: (nf, cofactores sobre las derivadas parciales)
        """
        record = division_record(poly, self.gb, verify=False)
        n = self.nvars
        cofactors = []
        for i in range(n):
            total = ExactPoly.zero(n)
            for quotient, lift in zip(record.cofactors, self.gb.lift):
                if not quotient.is_zero() and not lift[i].is_zero():
                    total = total + quotient * lift[i]
            cofactors.append(total)
        return record.nf, tuple(cofactors)

    def multiplication_matrix(self, g: ExactPoly) -> RationalMatrix:
        """Matriz de la multiplicación por g (columnas = imágenes de la base)."""
        columns = [self.coordinates(g * m) for m in self.basis_polys()]
        return RationalMatrix.from_columns(columns, self.mu)

    def trace(self, g: ExactPoly) -> Fraction:
        return self.multiplication_matrix(g).trace()

    def hessian(self) -> ExactPoly:
        """Determinante hessiano de f."""
        n = self.nvars
        entries = [[self.partials[i].partial(j) for j in range(n)] for i in range(n)]
        return polynomial_determinant(entries, n)

    def socle(self) -> List[List[Fraction]]:
        """
        Base del zócalo: clases anuladas por todas las variables.

        :return: Lista de vectores de coordenadas
        """
        n = self.nvars
        rows: List[List[Fraction]] = []
        for i in range(n):
            rows.extend(self.multiplication_matrix(ExactPoly.variable(i, n)).rows())
        if not rows:
            return [[Fraction(1) if k == j else Fraction(0) for k in range(self.mu)] for j in range(self.mu)]
        return rational_nullspace(rows, self.mu)

    def socle_generator(self) -> List[Fraction]:
        vectors = self.socle()
        if len(vectors) != 1:
            raise SocleNotOneDimensional(
                "El zócalo del álgebra de Milnor no es de dimensión uno",
                {"socle_dimension": len(vectors)},
            )
        return vectors[0]


def polynomial_determinant(entries: Sequence[Sequence[ExactPoly]], nvars: int) -> ExactPoly:
    """Determinante por desarrollo de Laplace (tamaños pequeños)."""
    size = len(entries)
    if size == 0:
        return ExactPoly.one(nvars)
    if size == 1:
        return entries[0][0]
    total = ExactPoly.zero(nvars)
    for column in range(size):
        if entries[0][column].is_zero():
            continue
        minor = [row[:column] + row[column + 1:] for row in entries[1:]]
        term = entries[0][column] * polynomial_determinant(minor, nvars)
        total = total + term if column % 2 == 0 else total - term
    return total


def milnor_algebra(f: ExactPoly, order: Optional[MonomialOrder] = None) -> MilnorAlgebra:
    """
    Construye el álgebra de Milnor de f.

    :param f: Polinomio
    :param order: Orden monomial (degrevlex por defecto)
    :return: MilnorAlgebra finita
    """
    partials = f.gradient()
    gb = buchberger(list(partials), order, track_lift=True)
    if not is_zero_dimensional(gb):
        raise InfiniteMilnorNumber(
            "El ideal jacobiano no es cero-dimensional: número de Milnor infinito"
        )
    basis = standard_monomials(gb)
    logger.debug(f"Álgebra de Milnor: mu = {len(basis)}, base de Gröbner de {len(gb.generators)} elementos")
    return MilnorAlgebra(f, tuple(basis), gb, tuple(partials))
