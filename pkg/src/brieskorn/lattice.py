"""
Retículo de Brieskorn de f: reducción de n-formas en la base monomial sobre
Q[u]/u^N, matriz de la conexión u^2 d/du y emparejamiento residuo en u = 0.

Regla de reducción: si P = nf + sum h_i df/dx_i, entonces
u^j P dx = u^j nf dx - u^(j+1) div(h) dx + (u d + df^)(u^j eta),
con eta = sum (-1)^i h_i dx_(sin i).
"""
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple

from config.settings import CONNECTION_CONVENTION, DEFAULT_U_TRUNCATION, MAX_U_TRUNCATION, MAX_WORKERS
from src.cu_linalg.rational_matrix import RationalMatrix
from src.cu_linalg.upoly import UPoly, fraction_text, rational_roots
from src.cu_linalg.upoly_matrix import UPolyMatrix, characteristic_polynomial
from src.domain.errors import InvalidLadder, InvariantBreach, NoStabilization, TamenessUnverified
from src.groebner.milnor_algebra import MilnorAlgebra, milnor_algebra
from src.groebner.residue import ResidueFunctional, residue_functional
from src.infrastructure.utils import timing_decorator
from src.oracles.tameness import TamenessVerdict, tameness_proxy
from src.polyalg.diff_form import DiffForm, UDiffForm, twisted_differential
from src.polyalg.exact_poly import ExactPoly, poly_sum
from src.utils.logger import setup_logger

logger = setup_logger(__name__)

RESCALED = "rescaled"
UNRESCALED = "unrescaled"
CONVENTIONS = (RESCALED, UNRESCALED)


@dataclass(frozen=True)
class TopFormReduction:
    """
    Coordenadas de la clase de u^p g dx en la base {m_i dx} módulo u^N.

    ``residual`` es el polinomio que pasaría a la capa u^N; si es cero, las
    coordenadas no dependen de la truncación.
    """

    coordinates: Tuple[UPoly, ...]
    witness: UDiffForm
    residual: ExactPoly
    truncation: int

    @property
    def exact(self) -> bool:
        return self.residual.is_zero()

    def representative(self, algebra: MilnorAlgebra) -> UDiffForm:
        return UDiffForm(
            [
                DiffForm.top(algebra.from_coordinates([c.coefficient(j) for c in self.coordinates]))
                for j in range(self.truncation)
            ]
        )


def _divergence(cofactors: Sequence[ExactPoly], nvars: int) -> ExactPoly:
    return poly_sum((h.partial(i) for i, h in enumerate(cofactors)), nvars)


def _primitive_form(cofactors: Sequence[ExactPoly], nvars: int) -> DiffForm:
    """eta = sum (-1)^i h_i dx_0 ^ ... (sin dx_i) ^ ... dx_(n-1)."""
    components = {}
    for i, h in enumerate(cofactors):
        if h.is_zero():
            continue
        index = tuple(j for j in range(nvars) if j != i)
        components[index] = h if i % 2 == 0 else -h
    return DiffForm(nvars - 1, nvars, components)


def reduce_topform(
    algebra: MilnorAlgebra,
    g: ExactPoly,
    u_power: int = 0,
    truncation: int = DEFAULT_U_TRUNCATION,
    verify: bool = True,
    max_layers: Optional[int] = None,
) -> TopFormReduction:
    """
    Escribe u^p g dx en la base monomial módulo u^N y la imagen del diferencial.

    :param algebra: Álgebra de Milnor de f
    :param g: Polinomio
    :param u_power: Potencia p de u
    :param truncation: Orden N de truncación
    :param verify: Comprueba input - representante = (u d + df^)(testigo)
    :param max_layers: Cota de capas en u (por defecto 4 N deg f)
    :return: TopFormReduction
    :raises NoStabilization: si la cola por encima de u^N no se anula antes de la cota
    """
    if truncation < 1 or truncation > MAX_U_TRUNCATION:
        raise InvalidLadder(f"La truncación N = {truncation} debe estar entre 1 y {MAX_U_TRUNCATION}")
    n = algebra.nvars
    layers: List[ExactPoly] = [ExactPoly.zero(n) for _ in range(truncation + 1)]
    if u_power < truncation:
        layers[u_power] = g
    coordinates: List[List[Fraction]] = [[Fraction(0)] * truncation for _ in range(algebra.mu)]
    witness_layers: List[DiffForm] = []
    for j in range(truncation):
        if layers[j].is_zero():
            witness_layers.append(DiffForm.zero(max(n - 1, 0), n))
            continue
        nf, cofactors = algebra.jacobian_cofactors(layers[j])
        for i, value in enumerate(algebra.coordinates_of_normal_form(nf)):
            coordinates[i][j] = value
        witness_layers.append(_primitive_form(cofactors, n))
        layers[j + 1] = layers[j + 1] - _divergence(cofactors, n)
    _check_tail(algebra, layers[truncation], truncation, max_layers)
    reduction = TopFormReduction(
        tuple(UPoly(c) for c in coordinates), UDiffForm(witness_layers), layers[truncation], truncation
    )
    if verify:
        _verify_reduction(algebra, g, u_power, reduction)
    return reduction


def _check_tail(algebra: MilnorAlgebra, tail: ExactPoly, truncation: int, max_layers: Optional[int]) -> None:
    """Sigue reduciendo por encima de u^N hasta que la cola se anula o se agota la cota."""
    bound = max_layers if max_layers is not None else 4 * truncation * max(algebra.f.total_degree(), 1)
    if bound < truncation:
        raise ValueError(f"La cota de capas {bound} es menor que N = {truncation}")
    for _ in range(truncation, bound):
        if tail.is_zero():
            return
        _, cofactors = algebra.jacobian_cofactors(tail)
        tail = -_divergence(cofactors, algebra.nvars)
    if not tail.is_zero():
        raise NoStabilization(
            f"La reducción no se estabiliza en {bound} capas con N = {truncation} (¿f no manso?)"
        )


def _verify_reduction(algebra: MilnorAlgebra, g: ExactPoly, u_power: int, reduction: TopFormReduction) -> None:
    n = algebra.nvars
    N = reduction.truncation
    source = UDiffForm(
        [DiffForm.top(g) if j == u_power else DiffForm.zero(n, n) for j in range(N)]
    )
    image = twisted_differential(algebra.f, reduction.witness)
    if source - reduction.representative(algebra) != image:
        raise InvariantBreach(
            "La reducción no difiere del dato por un borde del complejo torcido",
            {"g": repr(g), "u_power": u_power, "truncation": N},
        )


@dataclass(frozen=True)
class ConnectionData:
    """
    Matriz A(u) de u^2 d/du en la base {m_i dx}: u^2 d/du e_j = sum_i A_ij(u) e_i.
    """

    matrix: UPolyMatrix
    truncation: int
    convention: str
    certificate: Dict[str, Any] = field(default_factory=dict)

    def linear_part(self) -> RationalMatrix:
        return self.matrix.coefficient_matrix(1)

    def constant_part(self) -> RationalMatrix:
        return self.matrix.coefficient_matrix(0)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "matrix": self.matrix.to_json(),
            "truncation": self.truncation,
            "convention": self.convention,
            "certificate": self.certificate,
        }


@timing_decorator
def connection_matrix(
    f: ExactPoly,
    truncation: int = DEFAULT_U_TRUNCATION,
    convention: str = CONNECTION_CONVENTION,
    algebra: Optional[MilnorAlgebra] = None,
    max_workers: int = MAX_WORKERS,
) -> ConnectionData:
    """
    Matriz de la conexión con certificado de estabilización.

    Columna j: reducción de -f m_j dx (convención reescalada); la convención sin
    reescalar suma n u en la diagonal.

    :param f: Polinomio con álgebra de Milnor finita
    :param truncation: Orden N
    :param convention: "rescaled" o "unrescaled"
    :raises NoStabilization: si alguna columna no se estabiliza antes de u^(N-1)
    """
    if convention not in CONVENTIONS:
        raise ValueError(f"convention debe ser uno de {CONVENTIONS}")
    if truncation < 2:
        raise InvalidLadder("La conexión necesita N >= 2 para certificar la estabilización")
    algebra = algebra or milnor_algebra(f)
    n = algebra.nvars
    sources = [-(f * m) for m in algebra.basis_polys()]
    with ThreadPoolExecutor(max_workers=max_workers) as executor:
        reductions = list(executor.map(lambda g: reduce_topform(algebra, g, 0, truncation), sources))
    columns = [list(r.coordinates) for r in reductions]
    if convention == UNRESCALED:
        for j in range(algebra.mu):
            columns[j][j] = columns[j][j] + UPoly.u(1) * n
    matrix = UPolyMatrix([[columns[j][i] for j in range(algebra.mu)] for i in range(algebra.mu)], algebra.mu)
    unstable = [j for j, r in enumerate(reductions) if not r.exact]
    degree = matrix.max_degree()
    if unstable or degree > truncation - 2:
        raise NoStabilization(
            f"La conexión no se estabiliza con N = {truncation}: columnas {unstable}, grado {degree}"
        )
    certificate = {
        "truncation": truncation,
        "max_u_degree": degree,
        "residuals_zero": True,
    }
    logger.info(f"Conexión ({convention}) estabilizada con N={truncation}: grado en u {degree}")
    return ConnectionData(matrix, truncation, convention, certificate)


def residue_pairing(algebra: MilnorAlgebra, functional: Optional[ResidueFunctional] = None) -> RationalMatrix:
    """
    Gram G_ij = lambda(m_i m_j) en la base monomial.

    :raises InvariantBreach: si G no es simétrica o es degenerada
    """
    functional = functional or residue_functional(algebra)
    polys = algebra.basis_polys()
    gram = RationalMatrix([[functional(a * b) for b in polys] for a in polys], algebra.mu)
    if not gram.is_symmetric():
        raise InvariantBreach("La matriz de Gram del residuo no es simétrica", {"mu": algebra.mu})
    if algebra.mu and gram.determinant() == 0:
        raise InvariantBreach("El emparejamiento residuo es degenerado", {"mu": algebra.mu})
    return gram


def connection_residue_eigenvalues(connection: ConnectionData) -> Tuple[List[Fraction], bool]:
    """
    Autovalores racionales de la parte lineal en u de A(u).

    :return: (autovalores con multiplicidad, True si todos son racionales)
    """
    linear = connection.linear_part()
    if linear.nrows == 0:
        return [], True
    roots = rational_roots(characteristic_polynomial(linear))
    return roots, len(roots) == linear.nrows


@lru_cache(maxsize=None)
def spectrum_shift_anchor(convention: str = CONNECTION_CONVENTION) -> Fraction:
    """
    Constante global: autovalor de la parte lineal para x^2 menos alpha(1) = 1/2.
    """
    anchor = ExactPoly({(2,): 1}, 1)
    eigenvalues, _ = connection_residue_eigenvalues(connection_matrix(anchor, 3, convention, max_workers=1))
    return eigenvalues[0] - Fraction(1, 2)


def eigenvalues_match_spectrum(
    connection: ConnectionData, values: Sequence[Fraction], convention: str = CONNECTION_CONVENTION
) -> bool:
    """
    Los autovalores de la parte lineal coinciden con alpha(m) + desplazamiento
    como multiconjunto.
    """
    eigenvalues, complete = connection_residue_eigenvalues(connection)
    if not complete:
        return False
    shift = spectrum_shift_anchor(convention)
    return sorted(eigenvalues) == sorted(Fraction(v) + shift for v in values)


@dataclass(frozen=True)
class BrieskornLattice:
    """
    Retículo de Brieskorn truncado: base {m_i dx}, conexión y Gram en u = 0.
    """

    algebra: MilnorAlgebra
    truncation: int
    connection: ConnectionData
    gram: RationalMatrix
    residue: ResidueFunctional
    tameness: TamenessVerdict

    @property
    def rank(self) -> int:
        return self.algebra.mu

    def basis_forms(self) -> List[DiffForm]:
        return [DiffForm.top(m) for m in self.algebra.basis_polys()]

    def to_dict(self, variables: Sequence[str]) -> Dict[str, Any]:
        return {
            "rank": self.rank,
            "basis": [m.to_text(variables) for m in self.algebra.basis_polys()],
            "connection": self.connection.to_dict(),
            "gram": [[fraction_text(v) for v in row] for row in self.gram.rows()],
            "gram_determinant": fraction_text(self.gram.determinant()) if self.rank else "1",
            "tameness": self.tameness.to_dict(),
        }


@timing_decorator
def build_lattice(
    f: ExactPoly,
    truncation: int = DEFAULT_U_TRUNCATION,
    assume_tame: bool = False,
    convention: str = CONNECTION_CONVENTION,
    max_workers: int = MAX_WORKERS,
) -> BrieskornLattice:
    """
    Construye el retículo de Brieskorn de f.

    :param f: Polinomio
    :param truncation: Orden N
    :param assume_tame: Omite la exigencia del certificado de mansedumbre
    :raises TamenessUnverified: si no hay certificado ni override
    """
    algebra = milnor_algebra(f)
    tameness = tameness_proxy(f, algebra)
    if not tameness.certified and not assume_tame:
        raise TamenessUnverified(
            f"Mansedumbre no certificada ({', '.join(tameness.reasons)}); use --assume-tame para forzar"
        )
    connection = connection_matrix(f, truncation, convention, algebra, max_workers)
    functional = residue_functional(algebra)
    gram = residue_pairing(algebra, functional)
    logger.info(f"Retículo de Brieskorn: rango {algebra.mu}, N={truncation}")
    return BrieskornLattice(algebra, truncation, connection, gram, functional, tameness)
