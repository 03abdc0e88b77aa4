"""
Tests unitarios para Buchberger, el álgebra de Milnor y el funcional residuo.
"""
import random
from fractions import Fraction

import pytest

from src.domain.errors import InfiniteMilnorNumber
from src.groebner.buchberger import (
    buchberger,
    division_record,
    ideal_contains,
    is_groebner_basis,
    is_reduced,
    normal_form,
)
from src.groebner.milnor_algebra import is_zero_dimensional, milnor_algebra
from src.groebner.residue import residue_functional
from src.polyalg.exact_poly import ExactPoly, poly_sum
from src.polyalg.parser import parse_poly

XY = ["x", "y"]


def P(text: str, variables=XY) -> ExactPoly:
    return parse_poly(text, variables)


def random_poly(rng: random.Random, terms: int = 3, degree: int = 2) -> ExactPoly:
    return ExactPoly(
        {
            (rng.randint(0, degree), rng.randint(0, degree)): Fraction(rng.randint(-4, 4), rng.randint(1, 3))
            for _ in range(terms)
        },
        2,
    )


class TestBuchberger:
    """Tests para la base de Gröbner reducida"""

    def test_already_reduced(self):
        """Test de {x^2, y}"""
        gb = buchberger([P("x^2"), P("y")])
        assert set(gb.generators) == {P("x^2"), P("y")}

    def test_linear_elimination(self):
        """Test de {x + y, x - y} -> {x, y}"""
        gb = buchberger([P("x + y"), P("x - y")])
        assert set(gb.generators) == {P("x"), P("y")}

    def test_monic_jacobian(self):
        """Test del jacobiano de x^3 - y^2"""
        gb = buchberger([P("3*x^2"), P("-2*y")])
        assert set(gb.generators) == {P("x^2"), P("y")}

    def test_criteria_hold(self):
        """Test de que la salida es base de Gröbner reducida"""
        gb = buchberger([P("x^2*y - y^3 + x"), P("x*y^2 - x"), P("y^4 - 1")])
        assert is_groebner_basis(gb)
        assert is_reduced(gb)

    def test_lift_reproduces_generators(self):
        """Test del lift respecto de los generadores de entrada"""
        gens = [P("x^3 + x*y"), P("y^2 - x")]
        gb = buchberger(gens, track_lift=True)
        for generator, lift in zip(gb.generators, gb.lift):
            assert poly_sum([c * g for c, g in zip(lift, gens)], 2) == generator

    def test_empty_input(self):
        """Test de entrada vacía"""
        with pytest.raises(ValueError):
            buchberger([])


class TestNormalForm:
    """Tests para la división y la forma normal"""

    def setup_method(self):
        """Configurar antes de cada test"""
        self.gb = buchberger([P("x^2"), P("y")])

    @pytest.mark.parametrize(
        "text, expected",
        [("x^3", "0"), ("x*y + x", "x"), ("(x + y)^2", "0"), ("3*x + 2", "3*x + 2")],
    )
    def test_normal_forms(self, text, expected):
        """Test de formas normales módulo {x^2, y}"""
        assert normal_form(P(text), self.gb) == P(expected)

    def test_division_cofactors(self):
        """Test de cofactores con recombinación exacta"""
        for text in ("x^2", "x^2*y", "x^5 + x*y^3 - 2*y"):
            poly = P(text)
            record = division_record(poly, self.gb)
            recombined = poly_sum(
                [record.nf] + [h * g for h, g in zip(record.cofactors, self.gb.generators)], 2
            )
            assert recombined == poly

    @pytest.mark.parametrize("seed", range(100))
    def test_random_division_properties(self, seed):
        """Test de recombinación, idempotencia y linealidad de la forma normal"""
        rng = random.Random(seed)
        gb = buchberger([random_poly(rng), random_poly(rng)])
        p, q = random_poly(rng, terms=4, degree=4), random_poly(rng, terms=4, degree=4)
        record = division_record(p, gb)
        recombined = poly_sum([record.nf] + [h * g for h, g in zip(record.cofactors, gb.generators)], 2)
        assert recombined == p
        assert normal_form(record.nf, gb) == record.nf
        assert normal_form(p + q * 3, gb) == record.nf + normal_form(q, gb) * 3

    def test_division_x_squared(self):
        """Test de x^2 contra {x^2, y}: nf 0 y cofactor 1 sobre x^2"""
        record = division_record(P("x^2"), self.gb)
        assert record.nf.is_zero()
        cofactor = dict(zip(self.gb.generators, record.cofactors))
        assert cofactor[P("x^2")] == P("1")
        assert cofactor[P("y")].is_zero()

    def test_ideal_contains(self):
        """Test de pertenencia al ideal (x^2, y)"""
        gens = [P("x^2"), P("y")]
        assert ideal_contains(gens, P("x^3*y + y - x^2"))
        assert not ideal_contains(gens, P("x + y"))

    def test_unit_ideal(self):
        """Test de la base del ideal total"""
        gb = buchberger([P("x + 1"), P("x")])
        assert gb.is_unit_ideal()
        record = division_record(P("x^2*y + 3"), gb)
        assert record.nf.is_zero()


class TestMilnorAlgebra:
    """Tests para el álgebra de Milnor"""

    def test_cusp(self):
        """Test de x^3 - y^2: mu = 2, base {1, x}"""
        algebra = milnor_algebra(P("x^3 - y^2"))
        assert algebra.mu == 2
        assert list(algebra.basis) == [(0, 0), (1, 0)]

    @pytest.mark.parametrize("a", range(2, 7))
    @pytest.mark.parametrize("b", range(2, 7))
    def test_brieskorn_pham(self, a, b):
        """Test de mu(x^a + y^b) = (a - 1)(b - 1)"""
        assert milnor_algebra(P(f"x^{a} + y^{b}")).mu == (a - 1) * (b - 1)

    def test_xy(self):
        """Test de x*y: mu = 1, base {1}"""
        algebra = milnor_algebra(P("x*y"))
        assert algebra.mu == 1
        assert list(algebra.basis) == [(0, 0)]

    def test_no_critical_points(self):
        """Test de f = x: mu = 0"""
        assert milnor_algebra(P("x", ["x"])).mu == 0

    def test_non_isolated(self):
        """Test de x*y*z: lugar crítico no aislado"""
        with pytest.raises(InfiniteMilnorNumber):
            milnor_algebra(P("x*y*z", ["x", "y", "z"]))

    def test_zero_polynomial(self):
        """Test de f = 0: ideal jacobiano nulo"""
        with pytest.raises(InfiniteMilnorNumber):
            milnor_algebra(ExactPoly.zero(1))

    def test_zero_dimensional(self):
        """Test de cero-dimensionalidad sobre la base de Gröbner"""
        assert is_zero_dimensional(buchberger([P("x^2"), P("y")]))
        assert is_zero_dimensional(buchberger([P("x + 1"), P("x")]))
        assert not is_zero_dimensional(buchberger([P("x*y")]))

    def test_multiplication_and_trace(self):
        """Test de la multiplicación por x en C[x, y]/(x^2, y)"""
        algebra = milnor_algebra(P("x^3 - y^2"))
        assert algebra.multiplication_matrix(P("x")).rows() == [[0, 0], [1, 0]]
        assert algebra.trace(P("1")) == 2
        assert algebra.trace(P("x")) == 0

    @pytest.mark.parametrize("g", ["1", "x", "y", "x + 3", "x^2*y - y + 2"])
    def test_euler_jacobi(self, g):
        """Test de lambda(hess g) = traza(g)"""
        algebra = milnor_algebra(P("x^3 + y^4"))
        functional = residue_functional(algebra)
        assert functional(algebra.hessian() * P(g)) == algebra.trace(P(g))

    def test_socle_and_hessian(self):
        """Test del zócalo de x^3 - y^2: generado por x"""
        algebra = milnor_algebra(P("x^3 - y^2"))
        assert algebra.hessian() == P("-12*x")
        generator = algebra.socle_generator()
        assert generator[0] == 0 and generator[1] != 0

    def test_jacobian_cofactors(self):
        """Test de p = nf + sum h_i df/dx_i"""
        algebra = milnor_algebra(P("x^3 + x*y^3"))
        poly = P("x^4*y + 7*y^5 - x*y")
        nf, cofactors = algebra.jacobian_cofactors(poly)
        assert poly_sum([nf] + [h * p for h, p in zip(cofactors, algebra.partials)], 2) == poly
        assert nf == algebra.normal_form(poly)


class TestResidue:
    """Tests para el funcional residuo"""

    def test_a1(self):
        """Test de x^2: lambda(1) = 1/2"""
        functional = residue_functional(milnor_algebra(P("x^2", ["x"])))
        assert functional(P("1", ["x"])) == Fraction(1, 2)

    def test_cusp_values(self):
        """Test de x^3 - y^2: lambda(1) = 0 y lambda(x) = -1/6"""
        functional = residue_functional(milnor_algebra(P("x^3 - y^2")))
        assert functional(P("1")) == 0
        assert functional(P("x")) == Fraction(-1, 6)

    @pytest.mark.parametrize("text", ["x^3 + y^4", "x^2*y + y^3", "x^3 + x*y^3", "x^4 + y^4 + x^2*y^2"])
    def test_hessian_normalization(self, text):
        """Test de lambda(hess f) = mu"""
        algebra = milnor_algebra(P(text))
        functional = residue_functional(algebra)
        assert functional(algebra.hessian()) == algebra.mu

    def test_vanishes_on_jacobian_ideal(self):
        """Test de que lambda se anula sobre el ideal jacobiano"""
        algebra = milnor_algebra(P("x^3 + y^4"))
        functional = residue_functional(algebra)
        for partial in algebra.partials:
            assert functional(partial * P("x*y + 1")) == 0

    def test_empty_functional(self):
        """Test de mu = 0"""
        functional = residue_functional(milnor_algebra(P("x", ["x"])))
        assert functional.values == ()
