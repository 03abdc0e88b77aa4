"""
Funcional residuo global del álgebra de Milnor a partir del bezoutiano.

El determinante de las diferencias divididas de las derivadas parciales,
reducido módulo Jac(x) + Jac(y), se escribe como sum_a x^a B_a(y); las clases
B_a forman la base dual de {x^a} para el residuo, lo que fija lambda sobre la
base mediante lambda(B_a) = delta(a, 0). Se comprueba lambda(hess * g) = traza(g).
"""
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from typing import Dict, List, Tuple

from src.cu_linalg.rational_matrix import solve_rational
from src.domain.errors import ResidueNormalizationError
from src.groebner.buchberger import GroebnerBasis, normal_form
from src.groebner.milnor_algebra import MilnorAlgebra
from src.infrastructure.utils import timing_decorator
from src.polyalg.exact_poly import ExactPoly
from src.polyalg.monomial_order import Exponent
from src.utils.logger import setup_logger

logger = setup_logger(__name__)


@dataclass(frozen=True)
class ResidueFunctional:
    """
    Funcional lineal lambda sobre Q[x]/Jac(f), dado por sus valores en la base.
    """

    algebra: MilnorAlgebra
    values: Tuple[Fraction, ...]

    def __call__(self, poly: ExactPoly) -> Fraction:
        coordinates = self.algebra.coordinates(poly)
        return sum((c * v for c, v in zip(coordinates, self.values)), Fraction(0))

    def value_on_basis(self) -> Dict[Exponent, Fraction]:
        return dict(zip(self.algebra.basis, self.values))


def _divided_difference(f_i: ExactPoly, j: int, n: int) -> ExactPoly:
    """
    (f_i(y_<j, x_j, x_>j) - f_i(y_<=j, x_>j)) / (x_j - y_j) en 2n variables.
    """
    terms: Dict[Exponent, Fraction] = {}
    for exponent, coeff in f_i.terms.items():
        a = exponent[j]
        if a == 0:
            continue
        for k in range(a):
            full = [0] * (2 * n)
            for v in range(n):
                if v < j:
                    full[n + v] = exponent[v]
                elif v > j:
                    full[v] = exponent[v]
            full[j] = k
            full[n + j] = a - 1 - k
            key = tuple(full)
            terms[key] = terms.get(key, 0) + coeff
    return ExactPoly(terms, 2 * n)


def _determinant(entries: List[List[ExactPoly]], nvars: int) -> ExactPoly:
    size = len(entries)
    total = ExactPoly.zero(nvars)
    for perm in permutations(range(size)):
        inversions = sum(1 for a in range(size) for b in range(a + 1, size) if perm[a] > perm[b])
        term = ExactPoly.one(nvars)
        for row, column in enumerate(perm):
            term = term * entries[row][column]
            if term.is_zero():
                break
        if not term.is_zero():
            total = total - term if inversions % 2 else total + term
    return total


def bezoutian(algebra: MilnorAlgebra) -> ExactPoly:
    """Determinante bezoutiano de las derivadas parciales en 2n variables."""
    n = algebra.nvars
    entries = [[_divided_difference(algebra.partials[i], j, n) for j in range(n)] for i in range(n)]
    return _determinant(entries, 2 * n)


def _doubled_basis(gb: GroebnerBasis) -> GroebnerBasis:
    """Unión de las bases en x y en y: sigue siendo base (variables disjuntas)."""
    n = gb.nvars
    generators = tuple(g.embed(2 * n, 0) for g in gb.generators) + tuple(g.embed(2 * n, n) for g in gb.generators)
    return GroebnerBasis(generators, gb.order.doubled(), True, 2 * n)


@timing_decorator
def residue_functional(algebra: MilnorAlgebra) -> ResidueFunctional:
    """
    Funcional residuo normalizado por lambda(hess f) = mu.

    :param algebra: Álgebra de Milnor finita
    :return: ResidueFunctional
    """
    mu = algebra.mu
    n = algebra.nvars
    if mu == 0:
        return ResidueFunctional(algebra, ())
    reduced = normal_form(bezoutian(algebra), _doubled_basis(algebra.gb))
    dual: Dict[Exponent, Dict[Exponent, Fraction]] = {}
    for exponent, coeff in reduced.terms.items():
        x_part, y_part = exponent[:n], exponent[n:]
        dual.setdefault(x_part, {})
        dual[x_part][y_part] = dual[x_part].get(y_part, 0) + coeff
    positions = {e: i for i, e in enumerate(algebra.basis)}
    rows = []
    rhs = []
    origin = (0,) * n
    for alpha in algebra.basis:
        row = [Fraction(0)] * mu
        for beta, coeff in dual.get(alpha, {}).items():
            row[positions[beta]] += coeff
        rows.append(row)
        rhs.append(Fraction(1) if alpha == origin else Fraction(0))
    try:
        values = solve_rational(rows, rhs)
    except ValueError as exc:
        raise ResidueNormalizationError(
            "El bezoutiano reducido no define una base dual",
            {"mu": mu},
        ) from exc
    functional = ResidueFunctional(algebra, tuple(values))
    _check_euler_jacobi(functional)
    logger.debug(f"Residuo: valores {[str(v) for v in values]}")
    return functional


def _check_euler_jacobi(functional: ResidueFunctional) -> None:
    algebra = functional.algebra
    hessian = algebra.hessian()
    for exponent, poly in zip(algebra.basis, algebra.basis_polys()):
        left = functional(hessian * poly)
        right = algebra.trace(poly)
        if left != right:
            raise ResidueNormalizationError(
                "lambda(hess * g) difiere de traza(g)",
                {"monomial": list(exponent), "lambda": str(left), "trace": str(right)},
            )
