"""
Forma normal de Smith sobre Q[u] y núcleo polinomial por columnas.
"""
from dataclasses import dataclass
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from src.cu_linalg.upoly import UPoly
from src.cu_linalg.upoly_matrix import UPolyMatrix
from src.domain.errors import SmithFormError
from src.infrastructure.utils import timing_decorator
from src.utils.logger import setup_logger

logger = setup_logger(__name__)


@dataclass(frozen=True)
class SmithDecomposition:
    """U * M * V = S con U, V unimodulares y S diagonal con divisibilidad sucesiva."""

    U: Optional[UPolyMatrix]
    S: UPolyMatrix
    V: Optional[UPolyMatrix]

    def invariant_factors(self) -> List[UPoly]:
        """Entradas diagonales no nulas (mónicas)."""
        return [entry for entry in (self.S[i, i] for i in range(min(self.S.shape))) if not entry.is_zero()]


class _SmithWorkspace:
    """Estado mutable de la eliminación; solo vive dentro de smith_normal_form."""

    def __init__(self, matrix: UPolyMatrix, with_transforms: bool):
        self.A = matrix.rows()
        self.m, self.n = matrix.shape
        self.track = with_transforms
        self.U = UPolyMatrix.identity(self.m).rows() if with_transforms else None
        self.V = UPolyMatrix.identity(self.n).rows() if with_transforms else None

    def swap_rows(self, i: int, k: int) -> None:
        if i == k:
            return
        self.A[i], self.A[k] = self.A[k], self.A[i]
        if self.track:
            self.U[i], self.U[k] = self.U[k], self.U[i]

    def swap_columns(self, j: int, k: int) -> None:
        if j == k:
            return
        for row in self.A:
            row[j], row[k] = row[k], row[j]
        if self.track:
            for row in self.V:
                row[j], row[k] = row[k], row[j]

    def add_row(self, target: int, source: int, factor: UPoly) -> None:
        """fila target += factor * fila source."""
        self.A[target] = [a + factor * b if b else a for a, b in zip(self.A[target], self.A[source])]
        if self.track:
            self.U[target] = [a + factor * b if b else a for a, b in zip(self.U[target], self.U[source])]

    def add_column(self, target: int, source: int, factor: UPoly) -> None:
        """columna target += factor * columna source."""
        for row in self.A:
            if row[source]:
                row[target] = row[target] + factor * row[source]
        if self.track:
            for row in self.V:
                if row[source]:
                    row[target] = row[target] + factor * row[source]

    def scale_row(self, index: int, factor) -> None:
        self.A[index] = [a * factor for a in self.A[index]]
        if self.track:
            self.U[index] = [a * factor for a in self.U[index]]

    def min_degree_position(self, t: int) -> Optional[Tuple[int, int]]:
        best = None
        for i in range(t, self.m):
            for j in range(t, self.n):
                entry = self.A[i][j]
                if entry and (best is None or (entry.degree(), i, j) < best[0]):
                    best = ((entry.degree(), i, j), (i, j))
        return best[1] if best else None

    def min_degree_in_cross(self, t: int) -> Tuple[int, int]:
        candidates = [((self.A[i][t].degree(), i, t), (i, t)) for i in range(t, self.m) if self.A[i][t]]
        candidates += [((self.A[t][j].degree(), t, j), (t, j)) for j in range(t + 1, self.n) if self.A[t][j]]
        return min(candidates)[1]


@timing_decorator
def smith_normal_form(matrix: UPolyMatrix, with_transforms: bool = True) -> SmithDecomposition:
    """
    Forma normal de Smith con pivote de grado mínimo (desempate por posición).

    :param matrix: Matriz sobre Q[u]
    :param with_transforms: Si False, solo calcula S
    :return: SmithDecomposition con U * M * V = S
    """
    work = _SmithWorkspace(matrix, with_transforms)
    logger.debug(f"Smith: matriz {work.m}x{work.n}")
    for t in range(min(work.m, work.n)):
        position = work.min_degree_position(t)
        if position is None:
            break
        work.swap_rows(t, position[0])
        work.swap_columns(t, position[1])
        while True:
            remainder_found = False
            pivot = work.A[t][t]
            for i in range(t + 1, work.m):
                if work.A[i][t]:
                    quotient, remainder = divmod(work.A[i][t], pivot)
                    work.add_row(i, t, -quotient)
                    remainder_found = remainder_found or not remainder.is_zero()
            for j in range(t + 1, work.n):
                if work.A[t][j]:
                    quotient, remainder = divmod(work.A[t][j], pivot)
                    work.add_column(j, t, -quotient)
                    remainder_found = remainder_found or not remainder.is_zero()
            if remainder_found:
                i, j = work.min_degree_in_cross(t)
                work.swap_rows(t, i)
                work.swap_columns(t, j)
                continue
            offender = next(
                (
                    i
                    for i in range(t + 1, work.m)
                    for j in range(t + 1, work.n)
                    if work.A[i][j] and not pivot.divides(work.A[i][j])
                ),
                None,
            )
            if offender is None:
                break
            work.add_row(t, offender, UPoly.one())
    for t in range(min(work.m, work.n)):
        entry = work.A[t][t]
        if entry and entry.leading_coefficient() != 1:
            work.scale_row(t, 1 / entry.leading_coefficient())
    S = UPolyMatrix(work.A, work.n)
    if not with_transforms:
        return SmithDecomposition(None, S, None)
    U = UPolyMatrix(work.U, work.m)
    V = UPolyMatrix(work.V, work.n)
    if U @ matrix @ V != S:
        raise SmithFormError("U * M * V difiere de S", {"shape": list(matrix.shape)})
    return SmithDecomposition(U, S, V)


def invariant_factors(matrix: UPolyMatrix) -> List[UPoly]:
    return smith_normal_form(matrix, with_transforms=False).invariant_factors()


def _axpy(target: Dict[int, UPoly], factor: UPoly, source: Mapping[int, UPoly]) -> Dict[int, UPoly]:
    """target - factor * source, sin entradas nulas."""
    result = dict(target)
    for key, value in source.items():
        updated = result.get(key, UPoly()) - factor * value
        if updated:
            result[key] = updated
        else:
            result.pop(key, None)
    return result


@timing_decorator
def column_kernel(columns: Sequence[Mapping[int, UPoly]], row_indices: Sequence[int]) -> List[Dict[int, UPoly]]:
    """
    Base del núcleo {v : M v = 0} sobre Q[u] por reducción euclídea de columnas.

    :param columns: Columnas dispersas de M (fila -> entrada)
    :param row_indices: Todas las filas con entradas, en el orden de eliminación
    :return: Combinaciones de columnas (índice de columna -> coeficiente)
    """
    vectors: Dict[int, Dict[int, UPoly]] = {c: {k: v for k, v in column.items() if v} for c, column in enumerate(columns)}
    combos: Dict[int, Dict[int, UPoly]] = {c: {c: UPoly.one()} for c in range(len(columns))}
    active = set(vectors)
    for row in row_indices:
        holders = sorted(c for c in active if row in vectors[c])
        while len(holders) > 1:
            pivot = min(holders, key=lambda c: (vectors[c][row].degree(), c))
            for c in holders:
                if c == pivot:
                    continue
                quotient = vectors[c][row] // vectors[pivot][row]
                vectors[c] = _axpy(vectors[c], quotient, vectors[pivot])
                combos[c] = _axpy(combos[c], quotient, combos[pivot])
            holders = [c for c in holders if row in vectors[c]]
        if holders:
            active.discard(holders[0])
    leftover = [c for c in active if vectors[c]]
    if leftover:
        raise SmithFormError("El núcleo por columnas dejó columnas no nulas", {"columns": leftover[:5]})
    return [combos[c] for c in sorted(active)]
