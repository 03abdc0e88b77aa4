"""
Tests unitarios para el álgebra lineal exacta sobre Q y Q[u] y el informe de
módulos.
"""
import random
from fractions import Fraction

import pytest
import sympy

from src.cu_linalg.module_report import basicu_check, module_report
from src.cu_linalg.rational_matrix import (
    RationalMatrix,
    bareiss_determinant,
    bareiss_rank,
    rational_nullspace,
    rational_rank,
    solve_rational,
    sparse_rank,
)
from src.cu_linalg.upoly import UPoly, fraction_text, rational_roots, upoly_gcd
from src.cu_linalg.upoly_matrix import UPolyMatrix, characteristic_polynomial

U = UPoly.u(1)


def random_rows(rng: random.Random, nrows: int, ncols: int):
    return [
        [Fraction(rng.choice([0, 0, rng.randint(-4, 4)]), rng.randint(1, 3)) for _ in range(ncols)]
        for _ in range(nrows)
    ]


def sympy_matrix(rows):
    return sympy.Matrix([[sympy.Rational(v.numerator, v.denominator) for v in row] for row in rows])


class TestRationalMatrix:
    """Tests de rango, determinante y núcleo contra sympy"""

    def setup_method(self):
        """Configurar antes de cada test"""
        self.rng = random.Random(17)

    def test_rank_matches_sympy(self):
        """Test del rango de Bareiss"""
        for _ in range(20):
            rows = random_rows(self.rng, self.rng.randint(1, 5), self.rng.randint(1, 5))
            assert bareiss_rank(rows) == sympy_matrix(rows).rank()

    def test_determinant_matches_sympy(self):
        """Test del determinante de Bareiss"""
        for _ in range(20):
            size = self.rng.randint(1, 4)
            rows = random_rows(self.rng, size, size)
            expected = sympy_matrix(rows).det()
            assert bareiss_determinant(rows) == Fraction(int(expected.p), int(expected.q))

    def test_sparse_rank_matches_dense(self):
        """Test del escalonamiento disperso"""
        for _ in range(20):
            rows = random_rows(self.rng, self.rng.randint(1, 6), 5)
            vectors = [{j: v for j, v in enumerate(row) if v} for row in rows]
            assert sparse_rank(vectors) == bareiss_rank(rows)

    def test_nullspace(self):
        """Test de que el núcleo anula la matriz y tiene la dimensión correcta"""
        for _ in range(10):
            rows = random_rows(self.rng, 3, 5)
            basis = rational_nullspace(rows, 5)
            assert len(basis) == 5 - bareiss_rank(rows)
            for vector in basis:
                assert all(sum(a * b for a, b in zip(row, vector)) == 0 for row in rows)

    def test_solve(self):
        """Test de un sistema cuadrado invertible"""
        rows = [[Fraction(2), Fraction(1)], [Fraction(1), Fraction(3)]]
        assert solve_rational(rows, [Fraction(3), Fraction(5)]) == [Fraction(4, 5), Fraction(7, 5)]
        with pytest.raises(ValueError):
            solve_rational([[Fraction(1), Fraction(2)], [Fraction(2), Fraction(4)]], [Fraction(1), Fraction(2)])

    def test_rational_rank(self):
        """Test de rational_rank frente a bareiss_rank"""
        rows = [[Fraction(1), Fraction(2)], [Fraction(2), Fraction(4)], [Fraction(0), Fraction(1, 3)]]
        assert rational_rank(rows) == bareiss_rank(rows) == 2

    def test_symmetry(self):
        """Test de simetría y producto"""
        matrix = RationalMatrix([[Fraction(0), Fraction(-1, 6)], [Fraction(-1, 6), Fraction(0)]])
        assert matrix.is_symmetric()
        assert matrix.determinant() == Fraction(-1, 36)
        assert matrix @ RationalMatrix.identity(2) == matrix


class TestUPoly:
    """Tests para Q[u]"""

    def test_division(self):
        """Test de la división euclídea"""
        a = UPoly([1, 0, 3, 2])
        b = UPoly([1, 1])
        quotient, remainder = divmod(a, b)
        assert quotient * b + remainder == a
        assert remainder.degree() < b.degree()

    def test_gcd(self):
        """Test del mcd mónico"""
        a = UPoly.from_roots([1, 2, 2])
        b = UPoly.from_roots([2, 3]) * 5
        assert upoly_gcd(a, b) == UPoly.from_roots([2])

    def test_rational_roots(self):
        """Test de raíces racionales con multiplicidad"""
        poly = UPoly.from_roots([Fraction(5, 6), Fraction(7, 6), 0, Fraction(5, 6)])
        assert rational_roots(poly) == sorted([Fraction(5, 6), Fraction(7, 6), Fraction(0), Fraction(5, 6)])

    def test_irrational_roots_skipped(self):
        """Test de u^2 - 2: sin raíces racionales"""
        assert rational_roots(UPoly([-2, 0, 1])) == []

    def test_characteristic_polynomial(self):
        """Test del polinomio característico de una matriz diagonal"""
        matrix = RationalMatrix([[Fraction(1, 2), Fraction(0)], [Fraction(0), Fraction(3)]])
        assert characteristic_polynomial(matrix) == UPoly.from_roots([Fraction(1, 2), 3])

    def test_valuation_at_zero(self):
        """Test de la valuación en u = 0"""
        assert UPoly([0, 0, 3, 1]).valuation_at_zero() == 2
        assert UPoly.one().valuation_at_zero() == 0
        with pytest.raises(ValueError):
            UPoly().valuation_at_zero()

    def test_from_rational_pair(self):
        """Test de la matriz constant + u * linear"""
        constant = RationalMatrix([[1, 0], [0, 2]], 2)
        linear = RationalMatrix([[Fraction(1, 2), 3], [0, 0]], 2)
        matrix = UPolyMatrix.from_rational_pair(constant, linear)
        assert matrix[0, 0] == UPoly([1, Fraction(1, 2)])
        assert matrix[0, 1] == UPoly([0, 3])
        assert matrix.coefficient_matrix(1).rows() == linear.rows()
        with pytest.raises(ValueError):
            UPolyMatrix.from_rational_pair(constant, RationalMatrix.identity(3))

    def test_fraction_text(self):
        """Test del formato de racionales"""
        assert fraction_text(Fraction(-7, 3)) == "-7/3"
        assert fraction_text(4) == "4"


class TestModuleReport:
    """Tests para el informe de módulos y la comprobación cruzada de libertad"""

    def test_zero_presentation(self):
        """Test de presentación nula con r = 3: libre de rango 3"""
        report = module_report(UPolyMatrix.zeros(3, 0), 3)
        assert report.is_free
        assert report.free_rank == 3

    def test_u_torsion(self):
        """Test de diag(u) con r = 1: torsión u"""
        report = module_report(UPolyMatrix.diagonal([U]), 1)
        assert report.free_rank == 0
        assert report.torsion == (U,)
        assert report.u_torsion_orders == (1,)

    def test_torsion_away_from_zero(self):
        """Test de [[u - 1]]: torsión soportada fuera de u = 0"""
        report = module_report(UPolyMatrix([[U - 1]], 1), 1)
        assert report.free_rank == 0
        assert report.torsion == (U - 1,)
        assert report.u_torsion_orders == ()
        assert report.localized_torsion == (U - 1,)
        assert report.fiber_dimension(1) == 1
        assert report.fiber_dimension(0) == 0

    def test_generic_rank(self):
        """Test del rango tras localizar en u"""
        report = module_report(UPolyMatrix([[U], [U - 1]], 1), 2)
        assert report.generic_rank == report.free_rank == 1
        assert report.is_free

    def test_basicu_free_constant(self):
        """Test de datos de x^2: dimensiones constantes y módulo libre"""
        report = module_report(UPolyMatrix.zeros(1, 0), 1)
        verdict = basicu_check({Fraction(0): 1, Fraction(1): 1, Fraction(-1): 1}, report)
        assert verdict.consistent and verdict.constant and verdict.free

    def test_basicu_torsion_jumping(self):
        """Test de datos de f = 0: dimensiones no constantes con torsión en u"""
        report = module_report(UPolyMatrix.diagonal([U, U]), 2)
        verdict = basicu_check({Fraction(0): 2, Fraction(1): 0, Fraction(2): 0}, report)
        assert verdict.consistent
        assert not verdict.constant and not verdict.free

    def test_basicu_sampling_miss(self):
        """Test de diag(u - 1) muestreado fuera de u = 1: inconsistencia señalada"""
        report = module_report(UPolyMatrix.diagonal([U - 1]), 1)
        samples = {Fraction(0): 0, Fraction(-1): 0, Fraction(2): 0}
        verdict = basicu_check(samples, report)
        assert not verdict.consistent
        assert verdict.discrepancies[0]["kind"] == "constant-but-torsion"
        assert verdict.discrepancies[0]["sampling_missed_roots"] is True
