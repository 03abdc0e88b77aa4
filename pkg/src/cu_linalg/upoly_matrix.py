"""
Matrices sobre Q[u].
"""
from fractions import Fraction
from typing import Dict, List, Mapping, Sequence, Tuple

from src.cu_linalg.rational_matrix import RationalMatrix
from src.cu_linalg.upoly import Scalar, UPoly


class UPolyMatrix:
    """
    Matriz rectangular inmutable con entradas UPoly.
    """

    __slots__ = ("_rows", "nrows", "ncols")

    def __init__(self, rows: Sequence[Sequence], ncols: int = None):
        self._rows: Tuple[Tuple[UPoly, ...], ...] = tuple(
            tuple(entry if isinstance(entry, UPoly) else UPoly.constant(entry) for entry in row) for row in rows
        )
        self.nrows = len(self._rows)
        self.ncols = len(self._rows[0]) if self._rows else (ncols or 0)
        if any(len(row) != self.ncols for row in self._rows):
            raise ValueError("Matriz no rectangular")

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "UPolyMatrix":
        return cls([[UPoly() for _ in range(ncols)] for _ in range(nrows)], ncols)

    @classmethod
    def identity(cls, size: int) -> "UPolyMatrix":
        return cls([[UPoly.one() if i == j else UPoly() for j in range(size)] for i in range(size)], size)

    @classmethod
    def diagonal(cls, entries: Sequence[UPoly], nrows: int = None, ncols: int = None) -> "UPolyMatrix":
        nrows = nrows if nrows is not None else len(entries)
        ncols = ncols if ncols is not None else len(entries)
        rows = [[UPoly() for _ in range(ncols)] for _ in range(nrows)]
        for i, entry in enumerate(entries):
            rows[i][i] = entry
        return cls(rows, ncols)

    @classmethod
    def from_rational_pair(cls, constant: RationalMatrix, linear: RationalMatrix) -> "UPolyMatrix":
        """La matriz constant + u * linear."""
        if (constant.nrows, constant.ncols) != (linear.nrows, linear.ncols):
            raise ValueError("Dimensiones incompatibles")
        return cls(
            [[UPoly((constant[i, j], linear[i, j])) for j in range(constant.ncols)] for i in range(constant.nrows)],
            constant.ncols,
        )

    @classmethod
    def from_sparse_columns(cls, columns: Sequence[Mapping[int, UPoly]], nrows: int) -> "UPolyMatrix":
        rows = [[UPoly() for _ in columns] for _ in range(nrows)]
        for j, column in enumerate(columns):
            for i, entry in column.items():
                rows[i][j] = entry
        return cls(rows, len(columns))

    @property
    def shape(self) -> Tuple[int, int]:
        return self.nrows, self.ncols

    def __getitem__(self, position: Tuple[int, int]) -> UPoly:
        i, j = position
        return self._rows[i][j]

    def rows(self) -> List[List[UPoly]]:
        return [list(row) for row in self._rows]

    def transpose(self) -> "UPolyMatrix":
        return UPolyMatrix([[self._rows[i][j] for i in range(self.nrows)] for j in range(self.ncols)], self.nrows)

    def __matmul__(self, other: "UPolyMatrix") -> "UPolyMatrix":
        if self.ncols != other.nrows:
            raise ValueError("Dimensiones incompatibles")
        result = []
        for row in self._rows:
            new_row = []
            for j in range(other.ncols):
                total = UPoly()
                for k, entry in enumerate(row):
                    if entry and other._rows[k][j]:
                        total = total + entry * other._rows[k][j]
                new_row.append(total)
            result.append(new_row)
        return UPolyMatrix(result, other.ncols)

    def permuted(self, row_order: Sequence[int], column_order: Sequence[int]) -> "UPolyMatrix":
        return UPolyMatrix([[self._rows[i][j] for j in column_order] for i in row_order], len(column_order))

    def determinant(self) -> UPoly:
        """
        Determinante por Bareiss sobre Q[u] (divisiones exactas).
        """
        if self.nrows != self.ncols:
            raise ValueError("El determinante requiere una matriz cuadrada")
        size = self.nrows
        if size == 0:
            return UPoly.one()
        matrix = self.rows()
        sign = 1
        previous = UPoly.one()
        for k in range(size - 1):
            if matrix[k][k].is_zero():
                swap = next((i for i in range(k + 1, size) if not matrix[i][k].is_zero()), None)
                if swap is None:
                    return UPoly()
                matrix[k], matrix[swap] = matrix[swap], matrix[k]
                sign = -sign
            for i in range(k + 1, size):
                for j in range(k + 1, size):
                    matrix[i][j] = (matrix[k][k] * matrix[i][j] - matrix[i][k] * matrix[k][j]).exquo(previous)
            previous = matrix[k][k]
        result = matrix[size - 1][size - 1]
        return -result if sign < 0 else result

    def evaluate(self, point: Scalar) -> RationalMatrix:
        return RationalMatrix([[entry.evaluate(point) for entry in row] for row in self._rows], self.ncols)

    def coefficient_matrix(self, power: int) -> RationalMatrix:
        """Coeficiente de u^power como matriz racional."""
        return RationalMatrix([[entry.coefficient(power) for entry in row] for row in self._rows], self.ncols)

    def max_degree(self) -> int:
        return max((entry.degree() for row in self._rows for entry in row), default=-1)

    def is_diagonal(self) -> bool:
        return all(self._rows[i][j].is_zero() for i in range(self.nrows) for j in range(self.ncols) if i != j)

    def truncate(self, order: int) -> "UPolyMatrix":
        return UPolyMatrix([[entry.truncate(order) for entry in row] for row in self._rows], self.ncols)

    def __eq__(self, other) -> bool:
        if not isinstance(other, UPolyMatrix):
            return NotImplemented
        return self._rows == other._rows and self.shape == other.shape

    def __hash__(self):
        return hash(self._rows)

    def to_json(self) -> List[List[List[str]]]:
        return [[entry.to_json() for entry in row] for row in self._rows]

    def __repr__(self) -> str:
        return f"UPolyMatrix({[[entry.to_text() for entry in row] for row in self._rows]})"


def characteristic_polynomial(matrix: RationalMatrix) -> UPoly:
    """det(u I - A) en la variable u."""
    size = matrix.nrows
    rows = [
        [UPoly((-matrix[i, j], 1)) if i == j else UPoly.constant(-matrix[i, j]) for j in range(size)]
        for i in range(size)
    ]
    return UPolyMatrix(rows, size).determinant()
