"""
Álgebra lineal exacta sobre Q.

- Eliminación de Bareiss (libre de fracciones) sobre arrays numpy de enteros
  Python para rangos y determinantes densos.
- Escalonamiento disperso libre de fracciones (filas enteras primitivas) para
  los rangos de los complejos truncados, donde las matrices son muy dispersas.
- Núcleo y sistemas lineales por reducción de Gauss-Jordan con Fraction.
"""
from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

import numpy as np

SparseVector = Mapping[int, Fraction]


def _integer_rows(rows: Sequence[Sequence[Fraction]]) -> Tuple[np.ndarray, int]:
    """
    Escala cada fila por el mcm de sus denominadores.

    :return: (array de objetos con enteros, producto de los factores de escala)
    """
    scaled = []
    product = 1
    for row in rows:
        values = [Fraction(v) for v in row]
        factor = reduce(lcm, (v.denominator for v in values), 1)
        product *= factor
        scaled.append([int(v * factor) for v in values])
    return np.array(scaled, dtype=object).reshape(len(rows), len(rows[0]) if rows else 0), product


def _bareiss_echelon(matrix: np.ndarray) -> Tuple[np.ndarray, int, int]:
    """
    Escalonamiento de Bareiss in situ.

    :return: (matriz escalonada, rango, signo de las permutaciones de filas)
    """
    nrows, ncols = matrix.shape
    previous = 1
    rank = 0
    sign = 1
    for column in range(ncols):
        if rank == nrows:
            break
        pivot_row = next((i for i in range(rank, nrows) if matrix[i, column] != 0), None)
        if pivot_row is None:
            continue
        if pivot_row != rank:
            matrix[[rank, pivot_row]] = matrix[[pivot_row, rank]]
            sign = -sign
        pivot = matrix[rank, column]
        for i in range(rank + 1, nrows):
            factor = matrix[i, column]
            matrix[i, column + 1:] = (pivot * matrix[i, column + 1:] - factor * matrix[rank, column + 1:]) // previous
            matrix[i, column] = 0
        previous = pivot
        rank += 1
    return matrix, rank, sign


def bareiss_rank(rows: Sequence[Sequence[Fraction]]) -> int:
    """
    Rango exacto por eliminación de Bareiss.

    :param rows: Filas de la matriz
    :return: Rango sobre Q
    """
    if not rows or not len(rows[0]):
        return 0
    matrix, _ = _integer_rows(rows)
    return _bareiss_echelon(matrix)[1]


def bareiss_determinant(rows: Sequence[Sequence[Fraction]]) -> Fraction:
    """
    Determinante exacto por eliminación de Bareiss.

    :param rows: Matriz cuadrada
    :return: Determinante racional
    """
    size = len(rows)
    if size == 0:
        return Fraction(1)
    if any(len(row) != size for row in rows):
        raise ValueError("El determinante requiere una matriz cuadrada")
    matrix, scale = _integer_rows(rows)
    echelon, rank, sign = _bareiss_echelon(matrix)
    if rank < size:
        return Fraction(0)
    return Fraction(sign * int(echelon[size - 1, size - 1]), scale)


def rational_rank(rows: Sequence[Sequence[Fraction]]) -> int:
    return bareiss_rank(rows)


def _rref(rows: Sequence[Sequence[Fraction]], ncols: int) -> Tuple[List[List[Fraction]], List[int]]:
    matrix = [[Fraction(v) for v in row] for row in rows]
    pivots: List[int] = []
    rank = 0
    for column in range(ncols):
        pivot_row = next((i for i in range(rank, len(matrix)) if matrix[i][column]), None)
        if pivot_row is None:
            continue
        matrix[rank], matrix[pivot_row] = matrix[pivot_row], matrix[rank]
        pivot = matrix[rank][column]
        matrix[rank] = [v / pivot for v in matrix[rank]]
        for i in range(len(matrix)):
            if i != rank and matrix[i][column]:
                factor = matrix[i][column]
                matrix[i] = [a - factor * b for a, b in zip(matrix[i], matrix[rank])]
        pivots.append(column)
        rank += 1
        if rank == len(matrix):
            break
    return matrix[:rank], pivots


def rational_nullspace(rows: Sequence[Sequence[Fraction]], ncols: int) -> List[List[Fraction]]:
    """
    Base del núcleo {v : A v = 0}.

    :param rows: Filas de A
    :param ncols: Número de columnas de A
    :return: Vectores de la base del núcleo
    """
    reduced, pivots = _rref(rows, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for free_column in free:
        vector = [Fraction(0)] * ncols
        vector[free_column] = Fraction(1)
        for row, pivot_column in zip(reduced, pivots):
            vector[pivot_column] = -row[free_column]
        basis.append(vector)
    return basis


def solve_rational(rows: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]) -> List[Fraction]:
    """
    Resuelve A x = b con A cuadrada invertible.

    :raises ValueError: si A es singular
    """
    size = len(rows)
    augmented = [list(row) + [Fraction(b)] for row, b in zip(rows, rhs)]
    reduced, pivots = _rref(augmented, size + 1)
    if pivots[:size] != list(range(size)) or len(pivots) > size:
        raise ValueError("Sistema singular o incompatible")
    return [reduced[i][size] for i in range(size)]


def solve_affine(
    rows: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction], ncols: int, free_value: Fraction = Fraction(0)
) -> Optional[List[Fraction]]:
    """
    Una solución de A x = b con las variables libres fijadas a free_value.

    :return: Vector solución o None si el sistema es incompatible
    """
    augmented = [list(row) + [Fraction(b)] for row, b in zip(rows, rhs)]
    reduced, pivots = _rref(augmented, ncols + 1)
    if ncols in pivots:
        return None
    solution = [Fraction(free_value)] * ncols
    for row, pivot_column in zip(reduced, pivots):
        solution[pivot_column] = row[ncols] - sum(
            (row[c] * solution[c] for c in range(ncols) if c not in pivots), Fraction(0)
        )
    return solution


class RationalMatrix:
    """
    Matriz densa inmutable de Fraction.
    """

    __slots__ = ("_rows", "nrows", "ncols")

    def __init__(self, rows: Sequence[Sequence[Fraction]], ncols: Optional[int] = None):
        self._rows = tuple(tuple(Fraction(v) for v in row) for row in rows)
        self.nrows = len(self._rows)
        self.ncols = len(self._rows[0]) if self._rows else (ncols or 0)
        if any(len(row) != self.ncols for row in self._rows):
            raise ValueError("Matriz no rectangular")

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[Fraction]], nrows: int) -> "RationalMatrix":
        return cls([[column[i] for column in columns] for i in range(nrows)], len(columns))

    @classmethod
    def identity(cls, size: int) -> "RationalMatrix":
        return cls([[Fraction(int(i == j)) for j in range(size)] for i in range(size)], size)

    def rows(self) -> List[List[Fraction]]:
        return [list(row) for row in self._rows]

    def __getitem__(self, position: Tuple[int, int]) -> Fraction:
        i, j = position
        return self._rows[i][j]

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix([[self._rows[i][j] for i in range(self.nrows)] for j in range(self.ncols)], self.nrows)

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.ncols != other.nrows:
            raise ValueError("Dimensiones incompatibles")
        columns = list(zip(*other._rows)) if other._rows else []
        return RationalMatrix(
            [[sum((a * b for a, b in zip(row, column)), Fraction(0)) for column in columns] for row in self._rows],
            other.ncols,
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return self._rows == other._rows and self.ncols == other.ncols

    def __hash__(self):
        return hash(self._rows)

    def trace(self) -> Fraction:
        return sum((self._rows[i][i] for i in range(min(self.nrows, self.ncols))), Fraction(0))

    def determinant(self) -> Fraction:
        return bareiss_determinant(self._rows)

    def rank(self) -> int:
        return bareiss_rank(self._rows)

    def is_symmetric(self) -> bool:
        return self.nrows == self.ncols and all(
            self._rows[i][j] == self._rows[j][i] for i in range(self.nrows) for j in range(i)
        )

    def is_diagonal(self) -> bool:
        return all(self._rows[i][j] == 0 for i in range(self.nrows) for j in range(self.ncols) if i != j)

    def diagonal(self) -> List[Fraction]:
        return [self._rows[i][i] for i in range(min(self.nrows, self.ncols))]

    def __repr__(self) -> str:
        return f"RationalMatrix({[[str(v) for v in row] for row in self._rows]})"


class SparseEchelon:
    """
    Forma escalonada dispersa libre de fracciones.
    Responsabilidad única: rango y pertenencia al subespacio generado.

    Cada vector se escala a una fila entera primitiva; la reducción combina
    filas enteras y divide por el contenido. La columna pivote de una fila es
    su menor índice.
    """

    def __init__(self):
        self._pivots: Dict[int, Dict[int, int]] = {}

    @property
    def rank(self) -> int:
        return len(self._pivots)

    @staticmethod
    def _integerize(vector: SparseVector) -> Dict[int, int]:
        values = {k: Fraction(v) for k, v in vector.items() if v}
        if not values:
            return {}
        factor = reduce(lcm, (v.denominator for v in values.values()), 1)
        row = {k: int(v * factor) for k, v in values.items()}
        return _primitive(row)

    def _reduce(self, row: Dict[int, int]) -> Dict[int, int]:
        while row:
            column = min(row)
            pivot = self._pivots.get(column)
            if pivot is None:
                return row
            a = row[column]
            b = pivot[column]
            g = gcd(a, b)
            row_factor, pivot_factor = b // g, a // g
            combined = {k: row_factor * v for k, v in row.items()}
            for k, v in pivot.items():
                value = combined.get(k, 0) - pivot_factor * v
                if value:
                    combined[k] = value
                else:
                    combined.pop(k, None)
            row = _primitive(combined)
        return row

    def add(self, vector: SparseVector) -> bool:
        """
        Inserta el vector; devuelve True si aumenta el rango.
        """
        row = self._reduce(self._integerize(vector))
        if not row:
            return False
        self._pivots[min(row)] = row
        return True

    def contains(self, vector: SparseVector) -> bool:
        return not self._reduce(self._integerize(vector))

    def extend(self, vectors: Iterable[SparseVector]) -> int:
        for vector in vectors:
            self.add(vector)
        return self.rank


def _primitive(row: Dict[int, int]) -> Dict[int, int]:
    if not row:
        return row
    content = reduce(gcd, row.values())
    if row[min(row)] < 0:
        content = -content
    if content == 1:
        return row
    return {k: v // content for k, v in row.items()}


def sparse_rank(vectors: Iterable[SparseVector]) -> int:
    """
    Rango del conjunto de vectores dispersos.

    :param vectors: Vectores como diccionarios índice -> valor
    :return: Dimensión del subespacio generado
    """
    echelon = SparseEchelon()
    return echelon.extend(vectors)


def restrict_vector(vector: SparseVector, keep) -> Dict[int, Fraction]:
    """Proyección sobre las coordenadas cuyo índice satisface keep."""
    return {k: v for k, v in vector.items() if keep(k)}
