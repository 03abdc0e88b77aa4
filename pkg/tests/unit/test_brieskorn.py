"""
Tests unitarios para el retículo de Brieskorn: reducción de n-formas, matriz de
la conexión, emparejamiento residuo y espectro.
"""
from fractions import Fraction

import pytest

from src.brieskorn.lattice import (
    RESCALED,
    UNRESCALED,
    build_lattice,
    connection_matrix,
    connection_residue_eigenvalues,
    eigenvalues_match_spectrum,
    reduce_topform,
    residue_pairing,
    spectrum_shift_anchor,
)
from src.brieskorn.spectrum import spectrum_pairing_check, spectrum_qh
from src.cu_linalg.rational_matrix import RationalMatrix
from src.cu_linalg.upoly import UPoly
from src.domain.errors import InvalidLadder, NoStabilization, NotQuasiHomogeneous, TamenessUnverified
from src.groebner.milnor_algebra import milnor_algebra
from src.polyalg.parser import parse_poly

XY = ["x", "y"]

SPECTRUM_CORPUS = [
    ("x^2", ["x"]),
    ("x^3", ["x"]),
    ("x^4", ["x"]),
    ("x^5", ["x"]),
    ("x^6", ["x"]),
    ("x^2*y + y^3", XY),
    ("x^3 + y^4", XY),
    ("x^3 + x*y^3", XY),
    ("x^3 + y^5", XY),
]


def P(text: str, variables=XY):
    return parse_poly(text, variables)


class TestReduceTopform:
    """Tests para la reducción de u^p g dx en la base monomial"""

    def test_basis_monomial(self):
        """Test de un monomio de la base: sin corrección en u"""
        algebra = milnor_algebra(P("x^3 - y^2"))
        reduction = reduce_topform(algebra, P("x"), truncation=3)
        assert reduction.coordinates == (UPoly(), UPoly.one())
        assert reduction.exact

    def test_f_times_one(self):
        """Test de f dx = -(5/6) u dx para x^3 - y^2"""
        algebra = milnor_algebra(P("x^3 - y^2"))
        reduction = reduce_topform(algebra, algebra.f, truncation=3)
        assert reduction.coordinates[0] == UPoly([0, Fraction(-5, 6)])
        assert reduction.coordinates[1].is_zero()

    def test_a2_cube(self):
        """Test de x^3 dx = -(1/3) u dx para f = x^3"""
        algebra = milnor_algebra(P("x^3", ["x"]))
        reduction = reduce_topform(algebra, P("x^3", ["x"]), truncation=4)
        assert reduction.coordinates == (UPoly([0, Fraction(-1, 3)]), UPoly())

    def test_u_power_shift(self):
        """Test de que u^p desplaza las coordenadas"""
        algebra = milnor_algebra(P("x^2", ["x"]))
        reduction = reduce_topform(algebra, P("x^2", ["x"]), u_power=2, truncation=5)
        assert reduction.coordinates[0] == UPoly([0, 0, 0, Fraction(-1, 2)])

    def test_tail_above_truncation(self):
        """Test de x^4 dx para f = x^2 con N = 1: la cola -3/2 x^2 se anula en la capa 3"""
        algebra = milnor_algebra(P("x^2", ["x"]))
        reduction = reduce_topform(algebra, P("x^4", ["x"]), truncation=1)
        assert reduction.coordinates == (UPoly(),)
        assert reduction.residual == P("-3/2*x^2", ["x"])
        assert not reduction.exact
        assert reduce_topform(algebra, P("x^4", ["x"]), truncation=1, max_layers=3).residual == reduction.residual
        with pytest.raises(NoStabilization):
            reduce_topform(algebra, P("x^4", ["x"]), truncation=1, max_layers=2)
        with pytest.raises(ValueError):
            reduce_topform(algebra, P("x", ["x"]), truncation=3, max_layers=2)

    def test_beyond_truncation(self):
        """Test de u^p con p >= N: la clase es cero"""
        algebra = milnor_algebra(P("x^2", ["x"]))
        reduction = reduce_topform(algebra, P("1", ["x"]), u_power=3, truncation=3)
        assert all(c.is_zero() for c in reduction.coordinates)

    @pytest.mark.parametrize("truncation", [0, 100])
    def test_invalid_truncation(self, truncation):
        """Test de truncaciones fuera de rango"""
        algebra = milnor_algebra(P("x^2", ["x"]))
        with pytest.raises(InvalidLadder):
            reduce_topform(algebra, P("x", ["x"]), truncation=truncation)


class TestConnectionMatrix:
    """Tests para la matriz de u^2 d/du"""

    def test_a1_rescaled(self):
        """Test de x^2: A(u) = u/2"""
        connection = connection_matrix(P("x^2", ["x"]), 3)
        assert connection.matrix[0, 0] == UPoly([0, Fraction(1, 2)])
        assert connection.certificate["residuals_zero"]

    def test_a1_unrescaled(self):
        """Test de x^2 sin reescalar: A(u) = 3u/2"""
        connection = connection_matrix(P("x^2", ["x"]), 3, UNRESCALED)
        assert connection.matrix[0, 0] == UPoly([0, Fraction(3, 2)])

    @pytest.mark.parametrize("d", [1, 2, 3, 4])
    def test_a_d_diagonal(self, d):
        """Test de x^(d+1): diagonal con coeficientes (a+1)/(d+1)"""
        connection = connection_matrix(P(f"x^{d + 1}", ["x"]))
        assert connection.matrix.is_diagonal()
        linear = connection.linear_part().diagonal()
        assert linear == [Fraction(a + 1, d + 1) for a in range(d)]

    def test_cusp(self):
        """Test de x^3 - y^2: diag(5/6, 7/6) u"""
        connection = connection_matrix(P("x^3 - y^2"))
        assert connection.matrix.is_diagonal()
        assert connection.linear_part().diagonal() == [Fraction(5, 6), Fraction(7, 6)]
        assert connection.constant_part().diagonal() == [0, 0]

    @pytest.mark.parametrize("text, variables", SPECTRUM_CORPUS)
    def test_polynomial_entries(self, text, variables):
        """Test de polo de orden <= 2: entradas polinomiales certificadas con N = 6"""
        connection = connection_matrix(P(text, variables), 6)
        assert connection.certificate["truncation"] == 6
        assert connection.certificate["max_u_degree"] <= 4

    def test_no_stabilization(self):
        """Test de N = 2: no queda capa libre para certificar"""
        with pytest.raises(NoStabilization):
            connection_matrix(P("x^2", ["x"]), 2)

    def test_truncation_too_small(self):
        """Test de N = 1"""
        with pytest.raises(InvalidLadder):
            connection_matrix(P("x^2", ["x"]), 1)

    def test_unknown_convention(self):
        """Test de convención desconocida"""
        with pytest.raises(ValueError):
            connection_matrix(P("x^2", ["x"]), 3, "scaled")

    def test_shift_anchor(self):
        """Test del desplazamiento global fijado con x^2"""
        assert spectrum_shift_anchor(RESCALED) == 0
        assert spectrum_shift_anchor(UNRESCALED) == 1


class TestSpectrum:
    """Tests para el espectro casi homogéneo"""

    def test_a1(self):
        """Test de x^2 con w = 1/2"""
        assert spectrum_qh(P("x^2", ["x"]), [Fraction(1, 2)]).multiset == [Fraction(1, 2)]

    def test_cusp(self):
        """Test de x^3 - y^2 con w = (1/3, 1/2)"""
        spectrum = spectrum_qh(P("x^3 - y^2"), [Fraction(1, 3), Fraction(1, 2)])
        assert spectrum.multiset == [Fraction(5, 6), Fraction(7, 6)]

    def test_e6(self):
        """Test de E6 = x^3 + y^4"""
        spectrum = spectrum_qh(P("x^3 + y^4"))
        assert spectrum.multiset == [Fraction(k, 12) for k in (7, 10, 11, 13, 14, 17)]
        assert spectrum.is_symmetric()
        assert spectrum.in_open_range()

    def test_not_quasi_homogeneous(self):
        """Test de pesos que no certifican f"""
        with pytest.raises(NotQuasiHomogeneous):
            spectrum_qh(P("x^3 - y^2"), [Fraction(1, 2), Fraction(1, 2)])

    @pytest.mark.parametrize("text, variables", SPECTRUM_CORPUS)
    def test_eigenvalues_match_spectrum(self, text, variables):
        """Test de autovalores de la parte lineal = espectro + desplazamiento global"""
        f = P(text, variables)
        spectrum = spectrum_qh(f)
        connection = connection_matrix(f)
        eigenvalues, complete = connection_residue_eigenvalues(connection)
        assert complete
        assert eigenvalues_match_spectrum(connection, spectrum.values)
        assert sum(eigenvalues) == Fraction(len(eigenvalues) * f.nvars, 2)


class TestResiduePairing:
    """Tests para la matriz de Gram del residuo"""

    def test_cusp_gram(self):
        """Test de la Gram de x^3 - y^2"""
        gram = residue_pairing(milnor_algebra(P("x^3 - y^2")))
        assert gram.rows() == [[0, Fraction(-1, 6)], [Fraction(-1, 6), 0]]

    @pytest.mark.parametrize("text, variables", SPECTRUM_CORPUS + [("x^2 + y^2 + z^2", ["x", "y", "z"]), ("x*y", XY)])
    def test_perfect_and_graded(self, text, variables):
        """Test de det G != 0, G simétrica y G_ij != 0 => alpha_i + alpha_j = n"""
        f = P(text, variables)
        algebra = milnor_algebra(f)
        gram = residue_pairing(algebra)
        assert gram.is_symmetric()
        assert gram.determinant() != 0
        assert spectrum_pairing_check(gram, spectrum_qh(f, algebra=algebra)).passed

    def test_pairing_violation(self):
        """Test de una Gram que empareja grados incompatibles"""
        spectrum = spectrum_qh(P("x^3 - y^2"))
        check = spectrum_pairing_check(RationalMatrix.identity(2), spectrum)
        assert not check.passed
        assert (0, 0) in check.violations


class TestBuildLattice:
    """Tests para el ensamblado del retículo"""

    def test_cusp_lattice(self):
        """Test del retículo de x^3 - y^2"""
        lattice = build_lattice(P("x^3 - y^2"))
        assert lattice.rank == 2
        payload = lattice.to_dict(XY)
        assert payload["basis"] == ["1", "x"]
        assert payload["gram_determinant"] == "-1/36"
        assert payload["tameness"]["verdict"] == "tame-certified"

    def test_tameness_required(self):
        """Test de mansedumbre no certificada sin override"""
        with pytest.raises(TamenessUnverified):
            build_lattice(P("x^2*y + x"))
