"""
Poliedro de Newton en el infinito, conveniencia, no degeneración y número de
Kouchnirenko.

El poliedro es conv({0} ∪ supp f). Las caras se obtienen de las facetas de
scipy.spatial.ConvexHull, recalculando cada hiperplano de forma exacta y
cerrando por intersección; las caras en el infinito son las que no contienen 0.
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from itertools import combinations
from math import factorial, gcd
from typing import Any, Dict, FrozenSet, List, Optional, Sequence, Set, Tuple

import numpy as np
from scipy.spatial import ConvexHull, QhullError

from src.cu_linalg.rational_matrix import bareiss_determinant, bareiss_rank, rational_nullspace
from src.domain.errors import DegenerateFace, NotConvenient
from src.groebner.buchberger import is_unit_ideal
from src.infrastructure.utils import timing_decorator
from src.polyalg.exact_poly import ExactPoly
from src.polyalg.monomial_order import Exponent
from src.utils.logger import setup_logger

logger = setup_logger(__name__)

Face = FrozenSet[Exponent]


@dataclass(frozen=True)
class NewtonData:
    """
    Datos combinatorios de f para el oráculo de Kouchnirenko y la mansedumbre.
    """

    support: Tuple[Exponent, ...]
    nvars: int
    convenient: bool
    faces_at_infinity: Tuple[Tuple[Exponent, ...], ...]
    nondegenerate: Optional[bool]
    degenerate_face: Optional[Tuple[Exponent, ...]] = None
    method: str = "groebner-torus"

    def to_dict(self) -> Dict[str, Any]:
        return {
            "convenient": self.convenient,
            "faces_at_infinity": len(self.faces_at_infinity),
            "nondegenerate": self.nondegenerate,
            "degenerate_face": [list(p) for p in self.degenerate_face] if self.degenerate_face else None,
            "method": self.method,
        }


def is_convenient(f: ExactPoly) -> bool:
    """El soporte contiene una potencia pura x_i^a (a > 0) de cada variable."""
    support = f.support()
    return all(any(e[i] > 0 and sum(e) == e[i] for e in support) for i in range(f.nvars))


def _exact_hyperplane(vertices: Sequence[Exponent]) -> Optional[Tuple[Tuple[int, ...], int]]:
    """
    Hiperplano normal . x = offset por los vértices, con normal entera primitiva;
    None si el símplice es degenerado.
    """
    base = vertices[0]
    rows = [[Fraction(a - b) for a, b in zip(v, base)] for v in vertices[1:]]
    kernel = rational_nullspace(rows, len(base))
    if len(kernel) != 1:
        return None
    vector = kernel[0]
    scale = reduce(lambda acc, value: acc * value.denominator // gcd(acc, value.denominator), vector, 1)
    normal = [int(v * scale) for v in vector]
    content = reduce(gcd, normal)
    normal = tuple(v // content for v in normal)
    offset = sum(a * b for a, b in zip(normal, base))
    if offset < 0 or (offset == 0 and next(v for v in normal if v) < 0):
        normal = tuple(-v for v in normal)
        offset = -offset
    return normal, offset


def _hull_facets(points: List[Exponent]) -> List[Face]:
    """Conjuntos de puntos de cada faceta de la envolvente (exacto)."""
    n = len(points[0])
    if n == 1:
        values = [p[0] for p in points]
        return [frozenset(p for p in points if p[0] == min(values)), frozenset(p for p in points if p[0] == max(values))]
    hull = ConvexHull(np.array(points, dtype=float))
    facets: Dict[Tuple[Tuple[int, ...], int], Face] = {}
    for simplex in hull.simplices:
        vertices = [points[i] for i in simplex]
        key = _exact_hyperplane(vertices)
        if key is None or key in facets:
            continue
        normal, offset = key
        facets[key] = frozenset(p for p in points if sum(a * b for a, b in zip(normal, p)) == offset)
    return list(facets.values())


def _close_under_intersection(facets: List[Face]) -> Set[Face]:
    faces: Set[Face] = set(facets)
    frontier = set(facets)
    while frontier:
        new: Set[Face] = set()
        for a in frontier:
            for b in facets:
                meet = a & b
                if meet and meet not in faces:
                    new.add(meet)
        faces |= new
        frontier = new
    return faces


def faces_at_infinity(f: ExactPoly) -> List[Tuple[Exponent, ...]]:
    """
    Caras de conv({0} ∪ supp f) que no contienen el origen, ordenadas.

    :param f: Polinomio cuyo soporte genera un poliedro de dimensión completa
    """
    origin = (0,) * f.nvars
    points = sorted(set(f.support()) | {origin})
    if bareiss_rank([[Fraction(a) for a in p] for p in points if p != origin]) < f.nvars:
        return []
    faces = _close_under_intersection(_hull_facets(points))
    selected = [tuple(sorted(face)) for face in faces if origin not in face]
    return sorted(selected, key=lambda face: (len(face), face))


def face_polynomial(f: ExactPoly, face: Sequence[Exponent]) -> ExactPoly:
    return ExactPoly({e: f.coefficient(e) for e in face if f.coefficient(e)}, f.nvars)


def face_is_nondegenerate(f: ExactPoly, face: Sequence[Exponent]) -> bool:
    """
    Sin puntos críticos en el toro: (x_i df_σ/dx_i, 1 - t prod x_i) genera el ideal unidad.
    """
    n = f.nvars
    f_face = face_polynomial(f, face).embed(n + 1)
    generators = [
        f_face.partial(i).mul_term(tuple(int(j == i) for j in range(n + 1))) for i in range(n)
    ]
    torus = ExactPoly({(0,) * (n + 1): 1, (1,) * (n + 1): -1}, n + 1)
    return is_unit_ideal([g for g in generators if not g.is_zero()] + [torus])


@timing_decorator
def newton_data(f: ExactPoly) -> NewtonData:
    """
    Calcula conveniencia, caras en el infinito y no degeneración.

    :param f: Polinomio
    :return: NewtonData (nondegenerate es None si f no es conveniente)
    """
    support = tuple(sorted(f.support()))
    convenient = is_convenient(f)
    if not convenient:
        return NewtonData(support, f.nvars, False, (), None)
    faces = tuple(faces_at_infinity(f))
    for face in faces:
        if not face_is_nondegenerate(f, face):
            logger.info(f"Cara degenerada en el infinito: {list(face)}")
            return NewtonData(support, f.nvars, True, faces, False, face)
    logger.debug(f"Newton: {len(faces)} caras en el infinito, todas no degeneradas")
    return NewtonData(support, f.nvars, True, faces, True)


def _simplex_volume_times_factorial(vertices: Sequence[Sequence[int]]) -> Fraction:
    return abs(bareiss_determinant([[Fraction(a) for a in v] for v in vertices]))


def polytope_volume(points: Sequence[Sequence[int]], dimension: int) -> Fraction:
    """
    Volumen exacto de conv(points ∪ {0}) en R^dimension.

    Se suma |det|/k! sobre las facetas trianguladas (cono desde el origen).
    """
    origin = (0,) * dimension
    cloud = sorted({tuple(p) for p in points} | {origin})
    if dimension == 1:
        return Fraction(max(p[0] for p in cloud))
    if bareiss_rank([[Fraction(a) for a in p] for p in cloud if p != origin]) < dimension:
        return Fraction(0)
    try:
        hull = ConvexHull(np.array(cloud, dtype=float))
    except QhullError:
        return Fraction(0)
    total = sum(
        (_simplex_volume_times_factorial([cloud[i] for i in simplex]) for simplex in hull.simplices), Fraction(0)
    )
    return total / factorial(dimension)


def newton_volumes(f: ExactPoly) -> Dict[int, Fraction]:
    """
    V_k = suma de volúmenes k-dimensionales sobre los subespacios coordenados
    de dimensión k (V_0 = 1).
    """
    n = f.nvars
    support = f.support()
    volumes: Dict[int, Fraction] = {0: Fraction(1)}
    for k in range(1, n + 1):
        total = Fraction(0)
        for coordinates in combinations(range(n), k):
            others = [i for i in range(n) if i not in coordinates]
            points = [tuple(e[i] for i in coordinates) for e in support if all(e[j] == 0 for j in others)]
            if points:
                total += polytope_volume(points, k)
        volumes[k] = total
    return volumes


def kouchnirenko_mu(nd: NewtonData, f: ExactPoly) -> int:
    """
    Número de Kouchnirenko: sum_k (-1)^(n-k) k! V_k.

    :param nd: Datos de Newton de f
    :param f: Polinomio
    :raises NotConvenient: si f no es conveniente
    :raises DegenerateFace: si alguna cara en el infinito es degenerada
    """
    if not nd.convenient:
        raise NotConvenient("f no es conveniente: falta una potencia pura de alguna variable")
    if not nd.nondegenerate:
        raise DegenerateFace("f es degenerado en el infinito", list(nd.degenerate_face or ()))
    n = nd.nvars
    volumes = newton_volumes(f)
    value = sum(((-1) ** (n - k) * factorial(k) * volumes[k] for k in range(n + 1)), Fraction(0))
    if value.denominator != 1 or value < 0:
        raise ValueError(f"Número de Kouchnirenko no entero: {value}")
    return int(value)
