"""
Tests unitarios para la aritmética polinomial exacta, el parser y las formas
diferenciales.
"""
import random
from fractions import Fraction
from itertools import combinations

import pytest
import sympy

from src.domain.errors import NotQuasiHomogeneous, PolynomialSyntaxError, UnknownVariableError
from src.polyalg.diff_form import (
    DiffForm,
    UDiffForm,
    exterior_d,
    twisted_differential,
    wedge_df,
)
from src.polyalg.exact_poly import ExactPoly
from src.polyalg.parser import format_poly, parse_poly, parse_variables
from src.polyalg.weights import find_weights, quasi_homogeneous_weights

XY = ["x", "y"]


def random_poly(rng: random.Random, nvars: int, terms: int = 4, degree: int = 3) -> ExactPoly:
    return ExactPoly(
        {
            tuple(rng.randint(0, degree) for _ in range(nvars)): Fraction(rng.randint(-5, 5), rng.randint(1, 4))
            for _ in range(terms)
        },
        nvars,
    )


def random_form(rng: random.Random, degree: int, nvars: int) -> DiffForm:
    indices = list(combinations(range(nvars), degree))
    chosen = rng.sample(indices, rng.randint(1, len(indices)))
    return DiffForm(degree, nvars, {index: random_poly(rng, nvars, terms=3, degree=2) for index in chosen})


def to_sympy(poly: ExactPoly, symbols):
    return sum(
        (sympy.Rational(c.numerator, c.denominator) * sympy.prod([s ** a for s, a in zip(symbols, e)])
         for e, c in poly.terms.items()),
        sympy.Integer(0),
    )


class TestParser:
    """Tests para parse_poly y parse_variables"""

    def test_parse_simple(self):
        """Test de lectura directa de x^3 - y^2"""
        poly = parse_poly("x^3 - y^2", XY)
        assert dict(poly.terms) == {(3, 0): 1, (0, 2): -1}

    def test_parse_zero(self):
        """Test del polinomio cero"""
        poly = parse_poly("0", XY)
        assert poly.is_zero()
        assert dict(poly.terms) == {}

    def test_parse_cancellation(self):
        """Test de una identidad algebraica que se anula"""
        assert parse_poly("x*(x+1) - x^2 - x", XY).is_zero()

    def test_parse_rational_coefficients(self):
        """Test de coeficientes racionales y paréntesis"""
        poly = parse_poly("1/2*x^2 + (x - y)^2", XY)
        assert poly.coefficient((2, 0)) == Fraction(3, 2)
        assert poly.coefficient((1, 1)) == -2
        assert poly.coefficient((0, 2)) == 1

    def test_unknown_variable(self):
        """Test de variable no declarada"""
        with pytest.raises(UnknownVariableError) as info:
            parse_poly("x + z", XY)
        assert info.value.name == "z"
        assert info.value.position == 4

    @pytest.mark.parametrize("text", ["x^", "(x + y", "x + * y", "", "x^2^3"])
    def test_syntax_errors(self, text):
        """Test de entradas mal formadas"""
        with pytest.raises(PolynomialSyntaxError):
            parse_poly(text, XY)

    def test_parse_variables(self):
        """Test de la lista de variables"""
        assert parse_variables("x, y,z") == ["x", "y", "z"]
        with pytest.raises(PolynomialSyntaxError):
            parse_variables("x,x")
        with pytest.raises(PolynomialSyntaxError):
            parse_variables("x,2y")

    def test_format_reparses(self):
        """Test de que la impresión usa la gramática del parser"""
        poly = parse_poly("-3/4*x^2*y + y - 7", XY)
        assert parse_poly(format_poly(poly, XY), XY) == poly


class TestExactPoly:
    """Tests para la aritmética de ExactPoly contra sympy"""

    def setup_method(self):
        """Configurar antes de cada test"""
        self.rng = random.Random(11)
        self.symbols = sympy.symbols("x y")

    def test_product_matches_sympy(self):
        """Test del producto frente a la expansión de sympy"""
        for _ in range(10):
            a, b = random_poly(self.rng, 2), random_poly(self.rng, 2)
            expected = sympy.expand(to_sympy(a, self.symbols) * to_sympy(b, self.symbols))
            assert sympy.expand(to_sympy(a * b, self.symbols) - expected) == 0

    def test_partial_matches_sympy(self):
        """Test de las derivadas parciales"""
        for _ in range(10):
            p = random_poly(self.rng, 2)
            for i, symbol in enumerate(self.symbols):
                expected = sympy.diff(to_sympy(p, self.symbols), symbol)
                assert sympy.expand(to_sympy(p.partial(i), self.symbols) - expected) == 0

    def test_constants(self):
        """Test de los constructores de constantes"""
        assert ExactPoly.zero(2).is_zero()
        assert ExactPoly.one(2).total_degree() == 0

    def test_invalid_exponent(self):
        """Test de exponentes inválidos"""
        with pytest.raises(ValueError):
            ExactPoly({(1,): 1}, 2)

    def test_weighted_degree(self):
        """Test de grado ponderado y homogeneidad ponderada"""
        f = parse_poly("x^3 - y^2", XY)
        weights = (Fraction(1, 3), Fraction(1, 2))
        assert f.weighted_degree(weights) == 1
        assert f.is_weighted_homogeneous(weights, 1)
        assert not parse_poly("x^3 + y", XY).is_weighted_homogeneous(weights, 1)
        with pytest.raises(ValueError):
            ExactPoly.zero(2).weighted_degree(weights)

    def test_substitute_scale(self):
        """Test de x_i -> c_i x_i"""
        f = parse_poly("x^2*y - y", XY)
        assert f.substitute_scale([2, 3]) == parse_poly("12*x^2*y - 3*y", XY)

    def test_embed(self):
        """Test de inmersión con desplazamiento de índices"""
        x = ExactPoly.variable(0, 1)
        assert x.embed(3, offset=2) == ExactPoly.variable(2, 3)
        with pytest.raises(ValueError):
            x.embed(2, offset=2)


class TestDiffForm:
    """Tests para d, df^ y el diferencial torcido"""

    def setup_method(self):
        """Configurar antes de cada test"""
        self.x = ExactPoly.variable(0, 2)
        self.y = ExactPoly.variable(1, 2)

    def test_d_of_function(self):
        """Test de Leibniz: d(xy) = y dx + x dy"""
        form = exterior_d(DiffForm.function(self.x * self.y))
        assert form.coefficient((0,)) == self.y
        assert form.coefficient((1,)) == self.x

    def test_sign_rule(self):
        """Test de d(y dx) = -dx^dy"""
        form = exterior_d(DiffForm.basis((0,), 2, self.y))
        assert form.coefficient((0, 1)) == ExactPoly.constant(-1, 2)

    def test_d_of_top_form(self):
        """Test de d de una forma de grado máximo"""
        assert exterior_d(DiffForm.top(self.x ** 3)).is_zero()

    @pytest.mark.parametrize("seed", range(100))
    def test_d_squared_zero(self, seed):
        """Test de d^2 = 0 sobre formas aleatorias de cualquier grado"""
        rng = random.Random(seed)
        nvars = rng.choice([2, 3])
        form = random_form(rng, rng.randint(0, nvars), nvars)
        assert exterior_d(exterior_d(form)).is_zero()

    @pytest.mark.parametrize("seed", range(100))
    def test_anticommutation(self, seed):
        """Test de d(df^w) = -df^dw"""
        rng = random.Random(1000 + seed)
        nvars = rng.choice([2, 3])
        f = random_poly(rng, nvars, terms=3)
        form = random_form(rng, rng.randint(0, nvars), nvars)
        lhs = exterior_d(wedge_df(f, form))
        assert (lhs + wedge_df(f, exterior_d(form))).is_zero()

    def test_wedge_df_function(self):
        """Test de df para f = x^2 + y^2"""
        f = self.x ** 2 + self.y ** 2
        form = wedge_df(f, DiffForm.function(ExactPoly.one(2)))
        assert form.coefficient((0,)) == self.x * 2
        assert form.coefficient((1,)) == self.y * 2

    @pytest.mark.parametrize("seed", range(100))
    def test_wedge_df_with_df(self, seed):
        """Test de df^df = 0 y de df^(df^w) = 0"""
        rng = random.Random(2000 + seed)
        nvars = rng.choice([2, 3])
        f = random_poly(rng, nvars)
        df = exterior_d(DiffForm.function(f))
        assert wedge_df(f, df).is_zero()
        form = random_form(rng, rng.randint(0, nvars), nvars)
        assert wedge_df(f, wedge_df(f, form)).is_zero()

    def test_wedge_df_cusp(self):
        """Test de df^dx = 2y dx^dy para f = x^3 - y^2"""
        f = parse_poly("x^3 - y^2", XY)
        form = wedge_df(f, DiffForm.basis((0,), 2))
        assert form.coefficient((0, 1)) == self.y * 2

    def test_twisted_constant(self):
        """Test de (u d + df^)(1) = df con N = 2"""
        f = parse_poly("x^3 - y^2", XY)
        image = twisted_differential(f, UDiffForm.constant(DiffForm.function(ExactPoly.one(2)), 2))
        assert image.coeffs[0] == exterior_d(DiffForm.function(f))
        assert image.coeffs[1].is_zero()

    def test_twisted_zero_function(self):
        """Test de f = 0: el diferencial torcido es u d"""
        p = parse_poly("x^3 + 2*x", ["x"])
        form = UDiffForm.constant(DiffForm.function(p), 2)
        image = twisted_differential(ExactPoly.zero(1), form)
        assert image.coeffs[0].is_zero()
        assert image.coeffs[1] == exterior_d(DiffForm.function(p))

    @pytest.mark.parametrize("seed", range(100))
    def test_twisted_square_zero(self, seed):
        """Test de que el diferencial torcido al cuadrado se anula para f aleatorio y N <= 4"""
        rng = random.Random(3000 + seed)
        nvars = rng.choice([2, 3])
        f = random_poly(rng, nvars, terms=3)
        truncation = rng.randint(1, 4)
        degree = rng.randint(0, nvars)
        sign = rng.choice([1, -1])
        form = UDiffForm([random_form(rng, degree, nvars) for _ in range(truncation)])
        twice = twisted_differential(f, twisted_differential(f, form, sign), sign)
        assert twice.is_zero()
        assert twice.truncation == truncation

    def test_invalid_sign(self):
        """Test de signo inválido"""
        with pytest.raises(ValueError):
            twisted_differential(ExactPoly.zero(1), UDiffForm.zero(0, 1, 2), sign=2)

    def test_udiffform_shift_and_truncate(self):
        """Test de multiplicación por u y cambio de truncación"""
        form = DiffForm.function(self.x)
        series = UDiffForm.constant(form, 3)
        shifted = series.scale_u(1)
        assert shifted.coeffs == (DiffForm.zero(0, 2), form, DiffForm.zero(0, 2))
        assert series.scale_u(3).is_zero()
        assert shifted.u_degree_truncate(2).coeffs == (DiffForm.zero(0, 2), form)
        assert series.u_degree_truncate(5).truncation == 5
        with pytest.raises(ValueError):
            series + UDiffForm.constant(form, 2)


class TestWeights:
    """Tests para los pesos de casi homogeneidad"""

    def test_cusp_weights(self):
        """Test de pesos (1/3, 1/2) para x^3 - y^2"""
        assert find_weights(parse_poly("x^3 - y^2", XY)) == (Fraction(1, 3), Fraction(1, 2))

    def test_e6_weights(self):
        """Test de pesos (1/3, 1/4) para E6"""
        assert quasi_homogeneous_weights(parse_poly("x^3 + y^4", XY)) == (Fraction(1, 3), Fraction(1, 4))

    def test_not_quasi_homogeneous(self):
        """Test de un polinomio sin pesos positivos"""
        f = parse_poly("x^2*y + x", XY)
        assert find_weights(f) is None
        with pytest.raises(NotQuasiHomogeneous):
            quasi_homogeneous_weights(f)
