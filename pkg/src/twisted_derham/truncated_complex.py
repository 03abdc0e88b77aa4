"""
Modelo matricial finito del complejo (Omega[u]/u^N, u d + sign df^).

Las k-formas de la base tienen coeficientes monomiales de grado total <= B_k
con B_k = Dmax + slack + k * e, e = max(deg f - 1, 0); así df^ y d envían la
base de grado k dentro de la de grado k + 1 y la truncación es un subcomplejo.
Las matrices se guardan por columnas dispersas: la parte constante DF (sign df^)
y la parte lineal en u, D (diferencial exterior).
"""
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Dict, Iterator, List, Optional, Sequence, Tuple, Union

from config.settings import DEGREE_SLACK
from src.cu_linalg.rational_matrix import RationalMatrix, SparseEchelon
from src.domain.errors import DifferentialSquareNonZero, InvalidLadder
from src.infrastructure.utils import timing_decorator
from src.polyalg.diff_form import DiffForm, Index, UDiffForm, merge_indices
from src.polyalg.exact_poly import ExactPoly
from src.polyalg.monomial_order import Exponent
from src.utils.logger import setup_logger

logger = setup_logger(__name__)

Column = Dict[int, Fraction]


def monomials_up_to(nvars: int, bound: int) -> Iterator[Exponent]:
    """Exponentes de grado total <= bound, de mayor a menor grado."""
    def compositions(total: int, parts: int) -> Iterator[Exponent]:
        if parts == 1:
            yield (total,)
            return
        for first in range(total, -1, -1):
            for rest in compositions(total - first, parts - 1):
                yield (first,) + rest

    for total in range(bound, -1, -1):
        yield from compositions(total, nvars)


class FormBasis:
    """
    Base monomial de k-formas x^a dx_I con |a| <= bound.
    Responsabilidad única: indexar elementos de la base.
    """

    def __init__(self, degree: int, nvars: int, bound: int):
        self.degree = degree
        self.nvars = nvars
        self.bound = bound
        monomials = list(monomials_up_to(nvars, bound)) if bound >= 0 else []
        subsets = list(combinations(range(nvars), degree))
        self.elements: Tuple[Tuple[Index, Exponent], ...] = tuple(
            (index, exponent) for exponent in monomials for index in subsets
        )
        self.positions: Dict[Tuple[Index, Exponent], int] = {element: i for i, element in enumerate(self.elements)}
        self.poly_degrees: Tuple[int, ...] = tuple(sum(exponent) for _, exponent in self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def window(self, dmax: int) -> List[int]:
        """Posiciones con grado polinomial <= dmax."""
        return [i for i, degree in enumerate(self.poly_degrees) if degree <= dmax]

    def expected_size(self) -> int:
        return comb(self.nvars, self.degree) * (comb(self.bound + self.nvars, self.nvars) if self.bound >= 0 else 0)


class TruncatedComplex:
    """
    Complejo torcido truncado en grado polinomial y en u.

    :param f: Polinomio f
    :param truncation: Orden N de truncación en u
    :param dmax: Ventana de grado Dmax
    :param sign: +1 para u d + df^, -1 para u d - df^
    :param slack: Grados extra en las fuentes (por defecto DEGREE_SLACK + e)
    """

    def __init__(self, f: ExactPoly, truncation: int, dmax: int, sign: int = 1, slack: Optional[int] = None, _columns=None):
        if truncation < 1:
            raise InvalidLadder("La truncación N debe ser >= 1")
        if dmax < max(f.total_degree(), 0):
            raise InvalidLadder(f"Dmax = {dmax} debe ser >= deg f = {f.total_degree()}")
        if sign not in (1, -1):
            raise ValueError("sign debe ser +1 o -1")
        self.f = f
        self.nvars = f.nvars
        self.truncation = truncation
        self.dmax = dmax
        self.sign = sign
        self.step = max(f.total_degree() - 1, 0)
        self.slack = slack if slack is not None else DEGREE_SLACK + self.step
        n = self.nvars
        self.bounds = tuple(dmax + self.slack + k * self.step for k in range(n + 1))
        self.bases = tuple(FormBasis(k, n, self.bounds[k]) for k in range(n + 1))
        if _columns is None:
            self.df_columns, self.d_columns = self._build_columns()
            self.verify_square_zero()
        else:
            self.df_columns, self.d_columns = _columns
        logger.debug(
            f"Complejo truncado n={n} N={truncation} Dmax={dmax} sign={sign}: tamaños {[len(b) for b in self.bases]}"
        )

    # --- Construcción ---

    def _build_columns(self) -> Tuple[Tuple[List[Column], ...], Tuple[List[Column], ...]]:
        n = self.nvars
        partials = [list(self.f.partial(i).terms.items()) for i in range(n)]
        df_all, d_all = [], []
        for k in range(n):
            source, target = self.bases[k], self.bases[k + 1]
            df_cols: List[Column] = []
            d_cols: List[Column] = []
            for index, exponent in source.elements:
                df_col: Column = {}
                d_col: Column = {}
                for i in range(n):
                    sign, merged = merge_indices((i,), index)
                    if not sign:
                        continue
                    for shift, coeff in partials[i]:
                        row = target.positions[(merged, tuple(a + b for a, b in zip(exponent, shift)))]
                        value = df_col.get(row, 0) + self.sign * sign * coeff
                        if value:
                            df_col[row] = value
                        else:
                            df_col.pop(row, None)
                    if exponent[i]:
                        lowered = exponent[:i] + (exponent[i] - 1,) + exponent[i + 1:]
                        row = target.positions[(merged, lowered)]
                        d_col[row] = d_col.get(row, 0) + sign * exponent[i]
                df_cols.append(df_col)
                d_cols.append(d_col)
            df_all.append(df_cols)
            d_all.append(d_cols)
        return tuple(df_all), tuple(d_all)

    @staticmethod
    def _apply(columns: List[Column], vector: Column) -> Column:
        result: Column = {}
        for position, value in vector.items():
            for row, entry in columns[position].items():
                updated = result.get(row, 0) + value * entry
                if updated:
                    result[row] = updated
                else:
                    result.pop(row, None)
        return result

    @timing_decorator
    def verify_square_zero(self) -> None:
        """
        Comprueba DF.DF = 0, DF.D + D.DF = 0 y D.D = 0 exactamente.

        :raises DifferentialSquareNonZero: con el testigo (grado, columna)
        """
        for k in range(self.nvars - 1):
            for position in range(len(self.bases[k])):
                df_first = self.df_columns[k][position]
                d_first = self.d_columns[k][position]
                checks = {
                    "df.df": self._apply(self.df_columns[k + 1], df_first),
                    "d.d": self._apply(self.d_columns[k + 1], d_first),
                }
                cross = self._apply(self.df_columns[k + 1], d_first)
                for row, value in self._apply(self.d_columns[k + 1], df_first).items():
                    updated = cross.get(row, 0) + value
                    if updated:
                        cross[row] = updated
                    else:
                        cross.pop(row, None)
                checks["df.d+d.df"] = cross
                for name, residue in checks.items():
                    if residue:
                        raise DifferentialSquareNonZero(
                            "El cuadrado del diferencial truncado no es cero",
                            {"degree": k, "column": position, "component": name},
                        )

    def flipped(self) -> "TruncatedComplex":
        """El mismo complejo con el signo de df cambiado."""
        negated = tuple([{row: -value for row, value in column.items()} for column in columns] for columns in self.df_columns)
        return TruncatedComplex(
            self.f, self.truncation, self.dmax, -self.sign, self.slack, _columns=(negated, self.d_columns)
        )

    # --- Acceso a matrices ---

    def basis_size(self, k: int, layered: bool = True) -> int:
        return len(self.bases[k]) * (self.truncation if layered else 1)

    def column_at(self, k: int, position: int, u_o: Fraction) -> Column:
        """Columna de M_k(u_o) = DF + u_o D."""
        column = dict(self.df_columns[k][position])
        if u_o:
            for row, value in self.d_columns[k][position].items():
                updated = column.get(row, 0) + u_o * value
                if updated:
                    column[row] = updated
                else:
                    column.pop(row, None)
        return column

    def columns_at(self, k: int, u_o: Fraction, positions: Optional[Sequence[int]] = None) -> List[Column]:
        if k >= self.nvars:
            return []
        positions = range(len(self.bases[k])) if positions is None else positions
        return [self.column_at(k, p, u_o) for p in positions]

    def matrix_at(self, k: int, u_o: Fraction) -> RationalMatrix:
        """Matriz densa de M_k(u_o); pensada para complejos pequeños."""
        rows = len(self.bases[k + 1])
        columns = self.columns_at(k, Fraction(u_o))
        return RationalMatrix.from_columns([[c.get(i, Fraction(0)) for i in range(rows)] for c in columns], rows)

    def layered_columns(self, k: int) -> List[Column]:
        """
        Columnas de u d + sign df^ sobre Omega^k[u]/u^N.

        El elemento (posición p, potencia j) se indexa como j * |base_k| + p.
        """
        source, target = len(self.bases[k]), len(self.bases[k + 1])
        columns: List[Column] = []
        for j in range(self.truncation):
            for position in range(source):
                column = {j * target + row: value for row, value in self.df_columns[k][position].items()}
                if j + 1 < self.truncation:
                    for row, value in self.d_columns[k][position].items():
                        column[(j + 1) * target + row] = value
                columns.append(column)
        return columns

    def layered_matrix(self, k: int) -> RationalMatrix:
        rows = self.basis_size(k + 1)
        columns = self.layered_columns(k)
        return RationalMatrix.from_columns([[c.get(i, Fraction(0)) for i in range(rows)] for c in columns], rows)

    # --- Conversión de formas ---

    def vector_of(self, form: Union[DiffForm, UDiffForm]) -> Column:
        """
        Coordenadas de una forma (o forma con u) en la base escalonada.

        :raises ValueError: si la forma excede la truncación
        """
        layers = form.coeffs if isinstance(form, UDiffForm) else (form,)
        if len(layers) > self.truncation:
            raise ValueError("La forma excede la truncación en u")
        basis = self.bases[layers[0].degree]
        vector: Column = {}
        for j, layer in enumerate(layers):
            for index, coeff in layer.components.items():
                for exponent, value in coeff.terms.items():
                    key = (index, exponent)
                    if key not in basis.positions:
                        raise ValueError(f"El monomio {exponent} excede la cota de grado {basis.bound}")
                    vector[j * len(basis) + basis.positions[key]] = value
        return vector

    def form_of(self, k: int, vector: Column) -> UDiffForm:
        basis = self.bases[k]
        layers = [dict() for _ in range(self.truncation)]
        for key, value in vector.items():
            j, position = divmod(key, len(basis))
            index, exponent = basis.elements[position]
            layers[j].setdefault(index, {})[exponent] = value
        return UDiffForm(
            [DiffForm(k, self.nvars, {index: ExactPoly(terms, self.nvars) for index, terms in layer.items()}) for layer in layers]
        )

    def is_boundary(self, k: int, vector: Column) -> bool:
        """
        Pertenencia del vector (grado k, escalonado en u) a la imagen de M_{k-1}.
        """
        if k == 0:
            return not any(vector.values())
        echelon = SparseEchelon()
        echelon.extend(self.layered_columns(k - 1))
        return echelon.contains(vector)


@timing_decorator
def build_truncated(f: ExactPoly, N: int, Dmax: int, sign: int = 1, slack: Optional[int] = None) -> TruncatedComplex:
    """
    Construye el complejo truncado y verifica d^2 = 0.

    :param f: Polinomio
    :param N: Truncación en u (>= 1)
    :param Dmax: Ventana de grado (>= deg f)
    :param sign: Signo de df
    :param slack: Grados extra de las fuentes
    :return: TruncatedComplex
    """
    return TruncatedComplex(f, N, Dmax, sign, slack)
