"""
Tests unitarios de los oráculos independientes: Newton/Kouchnirenko,
mansedumbre, Betti de hipersuperficies y predicciones de rango.
"""
from fractions import Fraction

import pytest

from src.domain.errors import DegenerateFace, NotConvenient, PreconditionError, TamenessUnverified
from src.groebner.milnor_algebra import milnor_algebra
from src.oracles.hypersurface import (
    euler_characteristic_chern,
    euler_characteristic_recursive,
    hypersurface_betti,
    primitive_middle_betti_from_milnor,
)
from src.oracles.newton import is_convenient, kouchnirenko_mu, newton_data, polytope_volume
from src.oracles.predictions import (
    HYPERSURFACE_BETTI,
    MILNOR_SUM,
    predicted_rank_tame,
    predicted_ranks_hypersurface,
)
from src.oracles.tameness import TAME_CERTIFIED, UNKNOWN, tameness_proxy
from src.polyalg.parser import parse_poly

XY = ["x", "y"]
XYZ = ["x", "y", "z"]


class TestNewton:
    """Tests para el poliedro de Newton y el número de Kouchnirenko"""

    def test_convenience(self):
        """Test de conveniencia"""
        assert is_convenient(parse_poly("x^3 + y^4", XY))
        assert not is_convenient(parse_poly("x*y", XY))
        assert not is_convenient(parse_poly("x^2*y + x", XY))

    def test_polytope_volume(self):
        """Test del volumen del triángulo (0,0), (3,0), (0,4)"""
        assert polytope_volume([(3, 0), (0, 4)], 2) == Fraction(6)
        assert polytope_volume([(5,)], 1) == Fraction(5)
        assert polytope_volume([(2, 0), (4, 0)], 2) == Fraction(0)

    @pytest.mark.parametrize("a, b", [(2, 2), (2, 5), (3, 4), (3, 5), (4, 4)])
    def test_brieskorn_pham_plane(self, a, b):
        """Test de Kouchnirenko = Milnor = (a-1)(b-1) para x^a + y^b"""
        f = parse_poly(f"x^{a} + y^{b}", XY)
        nd = newton_data(f)
        assert nd.convenient and nd.nondegenerate
        assert kouchnirenko_mu(nd, f) == (a - 1) * (b - 1) == milnor_algebra(f).mu

    def test_three_variables(self):
        """Test de x^2 + y^2 + z^2 y x^2 + y^3 + z^4"""
        for text, mu in [("x^2 + y^2 + z^2", 1), ("x^2 + y^3 + z^4", 6)]:
            f = parse_poly(text, XYZ)
            assert kouchnirenko_mu(newton_data(f), f) == mu

    def test_convenient_non_homogeneous(self):
        """Test de un polinomio conveniente con término interior"""
        f = parse_poly("x^3 + y^3 + x*y", XY)
        nd = newton_data(f)
        assert nd.nondegenerate
        assert kouchnirenko_mu(nd, f) == milnor_algebra(f).mu == 4

    def test_not_convenient(self):
        """Test de f = xy: sin potencias puras"""
        f = parse_poly("x*y", XY)
        with pytest.raises(NotConvenient):
            kouchnirenko_mu(newton_data(f), f)

    def test_degenerate_face(self):
        """Test de la cara (x - y)^2, degenerada en el toro"""
        f = parse_poly("x^2 - 2*x*y + y^2 + x", XY)
        nd = newton_data(f)
        assert nd.convenient and nd.nondegenerate is False
        assert set(nd.degenerate_face) == {(2, 0), (1, 1), (0, 2)}
        with pytest.raises(DegenerateFace):
            kouchnirenko_mu(nd, f)


class TestTameness:
    """Tests para el proxy de mansedumbre"""

    def test_newton_certificate(self):
        """Test de certificado por no degeneración en el infinito"""
        verdict = tameness_proxy(parse_poly("x^3 + y^4", XY))
        assert verdict.verdict == TAME_CERTIFIED
        assert verdict.method == "newton-infinity"

    def test_quasi_homogeneous_certificate(self):
        """Test de f = xy: no conveniente pero casi homogéneo con mu finito"""
        verdict = tameness_proxy(parse_poly("x*y", XY))
        assert verdict.certified
        assert verdict.method == "quasi-homogeneous"

    @pytest.mark.parametrize("text, variables", [
        ("x^2*y + x", XY),
        ("x*y*z", XYZ),
        ("x^2 - 2*x*y + y^2 + x", XY),
    ])
    def test_unknown(self, text, variables):
        """Test de polinomios sin certificado"""
        verdict = tameness_proxy(parse_poly(text, variables))
        assert verdict.verdict == UNKNOWN
        assert not verdict.certified
        assert verdict.reasons

    def test_to_dict(self):
        """Test de la serialización del veredicto"""
        payload = tameness_proxy(parse_poly("x^2", ["x"])).to_dict()
        assert payload["verdict"] == TAME_CERTIFIED
        assert payload["newton"]["convenient"] is True


class TestHypersurface:
    """Tests para los Betti de hipersuperficies lisas"""

    @pytest.mark.parametrize("n, d, chi", [(2, 1, 2), (2, 2, 2), (2, 3, 0), (2, 4, -4), (3, 4, 24), (4, 5, -200)])
    def test_euler_characteristic(self, n, d, chi):
        """Test de las dos características de Euler"""
        assert euler_characteristic_recursive(n, d) == chi
        assert euler_characteristic_chern(n, d) == chi

    @pytest.mark.parametrize("n, d, betti", [
        (2, 2, [1, 0, 1]),
        (2, 3, [1, 2, 1]),
        (3, 4, [1, 0, 22, 0, 1]),
        (4, 5, [1, 0, 1, 204, 1, 0, 1]),
    ])
    def test_betti(self, n, d, betti):
        """Test de cónica, cúbica plana, K3 y quíntica"""
        assert hypersurface_betti(n, d) == betti

    @pytest.mark.parametrize("n, d, mu, primitive", [(2, 3, 8, 2), (3, 4, 81, 21), (2, 2, 1, 0)])
    def test_primitive_from_fermat(self, n, d, mu, primitive):
        """Test del Betti primitivo a partir del mu de Fermat en n+1 variables"""
        assert primitive_middle_betti_from_milnor(n, d, mu) == primitive

    def test_fermat_mu_matches(self):
        """Test de mu(x^3 + y^3 + z^3) = 8 frente al Betti de la cúbica plana"""
        mu = milnor_algebra(parse_poly("x^3 + y^3 + z^3", XYZ)).mu
        assert mu == 8
        assert primitive_middle_betti_from_milnor(2, 3, mu) == hypersurface_betti(2, 3)[1]

    def test_incompatible_mu(self):
        """Test de un mu incompatible con el grado"""
        with pytest.raises(ValueError):
            primitive_middle_betti_from_milnor(2, 3, 7)


class TestPredictions:
    """Tests para las predicciones de rango"""

    def test_plane_cubic(self):
        """Test de (n, d) = (2, 3): rangos en grados 2, 3, 4"""
        prediction = predicted_ranks_hypersurface(2, 3)
        assert prediction.ranks == {2: 1, 3: 2, 4: 1}
        assert prediction.provenance == HYPERSURFACE_BETTI
        assert prediction.rank(0) == 0

    def test_quartic_surface(self):
        """Test de (n, d) = (3, 4): rango 22 en grado 4"""
        prediction = predicted_ranks_hypersurface(3, 4)
        assert prediction.rank(4) == 22
        assert prediction.total == 24

    def test_quadric_surface(self):
        """Test de (n, d) = (3, 2): rangos 1, 0, 2, 0, 1 en grados 2..6"""
        prediction = predicted_ranks_hypersurface(3, 2)
        assert prediction.ranks == {2: 1, 3: 0, 4: 2, 5: 0, 6: 1}

    @pytest.mark.parametrize("n, d", [(2, 1), (1, 3), (2, 0)])
    def test_invalid_hypersurface(self, n, d):
        """Test de precondiciones d >= 2 y n >= 2"""
        with pytest.raises(PreconditionError):
            predicted_ranks_hypersurface(n, d)

    def test_tame(self):
        """Test de f manso: mu en grado n"""
        prediction = predicted_rank_tame(parse_poly("x^3 + y^4", XY))
        assert prediction.ranks == {0: 0, 1: 0, 2: 6}
        assert prediction.provenance == MILNOR_SUM
        assert prediction.to_dict()["ranks"] == {"0": 0, "1": 0, "2": 6}

    def test_untamed(self):
        """Test de f sin certificado"""
        with pytest.raises(TamenessUnverified):
            predicted_rank_tame(parse_poly("x^2*y + x", XY))
