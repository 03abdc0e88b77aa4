"""
Tests unitarios para la forma normal de Smith sobre Q[u].
"""
import random

import pytest

from src.cu_linalg.smith_form import invariant_factors, smith_normal_form
from src.cu_linalg.upoly import UPoly
from src.cu_linalg.upoly_matrix import UPolyMatrix

U = UPoly.u(1)
ONE = UPoly.one()


def random_upoly(rng: random.Random, degree: int = 2) -> UPoly:
    if rng.random() < 0.25:
        return UPoly()
    return UPoly(rng.randint(-3, 3) for _ in range(rng.randint(1, degree + 1)))


def random_matrix(rng: random.Random) -> UPolyMatrix:
    nrows, ncols = rng.randint(1, 4), rng.randint(1, 4)
    return UPolyMatrix([[random_upoly(rng) for _ in range(ncols)] for _ in range(nrows)], ncols)


def assert_smith_properties(matrix: UPolyMatrix) -> None:
    decomposition = smith_normal_form(matrix)
    U_, S, V = decomposition.U, decomposition.S, decomposition.V
    assert U_ @ matrix @ V == S
    assert U_.determinant().is_unit()
    assert V.determinant().is_unit()
    for i in range(S.nrows):
        for j in range(S.ncols):
            if i != j:
                assert S[i, j].is_zero()
    factors = decomposition.invariant_factors()
    for a, b in zip(factors, factors[1:]):
        assert a.divides(b)
    for factor in factors:
        assert factor.leading_coefficient() == 1
    diagonal = [S[i, i] for i in range(min(S.shape))]
    nonzero = [entry for entry in diagonal if not entry.is_zero()]
    assert diagonal[: len(nonzero)] == nonzero


class TestSmithNormalForm:
    """Tests para smith_normal_form"""

    def test_identity(self):
        """Test de la identidad 2x2"""
        decomposition = smith_normal_form(UPolyMatrix.identity(2))
        assert decomposition.S == UPolyMatrix.identity(2)

    def test_already_diagonal(self):
        """Test de diag(u, u^2)"""
        matrix = UPolyMatrix.diagonal([U, UPoly.u(2)])
        assert smith_normal_form(matrix).S == matrix

    def test_jordan_block(self):
        """Test de [[u, 1], [0, u]] -> diag(1, u^2)"""
        matrix = UPolyMatrix([[U, ONE], [UPoly(), U]], 2)
        assert invariant_factors(matrix) == [ONE, UPoly.u(2)]
        assert_smith_properties(matrix)

    def test_non_divisible_diagonal(self):
        """Test de diag(u, u - 1) -> diag(1, u(u - 1))"""
        matrix = UPolyMatrix.diagonal([U, U - 1])
        assert invariant_factors(matrix) == [ONE, U * (U - 1)]

    def test_zero_matrix(self):
        """Test de la matriz nula"""
        assert invariant_factors(UPolyMatrix.zeros(2, 3)) == []

    def test_randomized(self):
        """Test de 100 matrices aleatorias: U M V = S, unimodulares y divisibilidad"""
        rng = random.Random(2024)
        for _ in range(100):
            assert_smith_properties(random_matrix(rng))

    def test_without_transforms(self):
        """Test de que sin transformaciones se obtiene la misma S"""
        rng = random.Random(7)
        for _ in range(10):
            matrix = random_matrix(rng)
            assert smith_normal_form(matrix, with_transforms=False).S == smith_normal_form(matrix).S

    @pytest.mark.parametrize("seed", range(60))
    def test_permutation_invariance(self, seed):
        """Test de que los factores invariantes no cambian al permutar filas y columnas"""
        rng = random.Random(500 + seed)
        matrix = random_matrix(rng)
        row_order, column_order = list(range(matrix.nrows)), list(range(matrix.ncols))
        rng.shuffle(row_order)
        rng.shuffle(column_order)
        shuffled = matrix.permuted(row_order, column_order)
        assert invariant_factors(shuffled) == invariant_factors(matrix)
