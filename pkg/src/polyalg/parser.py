"""
Parser y formateador de polinomios en texto.

Gramática (espacios irrelevantes, multiplicación implícita prohibida):

    expr   := term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := ('+' | '-') factor | power
    power  := atom ('^' INT)?
    atom   := INT ('/' INT)? | NAME | '(' expr ')'
"""
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence

from src.domain.errors import PolynomialSyntaxError, UnknownVariableError
from src.polyalg.exact_poly import ExactPoly
from src.polyalg.monomial_order import MonomialOrder

VARIABLE_PATTERN = re.compile(r"[a-zA-Z][a-zA-Z0-9_]*")
_TOKEN_PATTERN = re.compile(r"\s*(?:(\d+)|([a-zA-Z][a-zA-Z0-9_]*)|(.))")


@dataclass(frozen=True)
class Token:
    kind: str  # INT, NAME, OP, END
    text: str
    position: int


def tokenize(text: str) -> List[Token]:
    """
    Divide el texto en tokens con su posición.

    :param text: Texto del polinomio
    :return: Lista de tokens terminada en END
    """
    tokens: List[Token] = []
    position = 0
    while position < len(text):
        match = _TOKEN_PATTERN.match(text, position)
        if match is None or match.end() == position:
            break
        if match.group(1) is not None:
            tokens.append(Token("INT", match.group(1), match.start(1)))
        elif match.group(2) is not None:
            tokens.append(Token("NAME", match.group(2), match.start(2)))
        elif match.group(3) is not None:
            symbol = match.group(3)
            if symbol not in "+-*^/()":
                raise PolynomialSyntaxError(f"Carácter inesperado '{symbol}'", match.start(3))
            tokens.append(Token("OP", symbol, match.start(3)))
        position = match.end()
    tokens.append(Token("END", "", len(text)))
    return tokens


class _Parser:
    """Descenso recursivo sobre la lista de tokens."""

    def __init__(self, text: str, variables: Sequence[str]):
        self.tokens = tokenize(text)
        self.index = 0
        self.variables = {name: i for i, name in enumerate(variables)}
        self.nvars = len(variables)

    @property
    def current(self) -> Token:
        return self.tokens[self.index]

    def _advance(self) -> Token:
        token = self.tokens[self.index]
        self.index += 1
        return token

    def _accept(self, symbol: str) -> bool:
        if self.current.kind == "OP" and self.current.text == symbol:
            self.index += 1
            return True
        return False

    def parse(self) -> ExactPoly:
        if self.current.kind == "END":
            raise PolynomialSyntaxError("Expresión vacía", self.current.position)
        result = self._expr()
        if self.current.kind != "END":
            token = self.current
            description = "multiplicación implícita" if token.kind in ("INT", "NAME") or token.text == "(" else f"token '{token.text}'"
            raise PolynomialSyntaxError(f"Se esperaba fin de expresión; encontrado {description}", token.position)
        return result

    def _expr(self) -> ExactPoly:
        result = self._term()
        while True:
            if self._accept("+"):
                result = result + self._term()
            elif self._accept("-"):
                result = result - self._term()
            else:
                return result

    def _term(self) -> ExactPoly:
        result = self._factor()
        while self._accept("*"):
            result = result * self._factor()
        return result

    def _factor(self) -> ExactPoly:
        if self._accept("-"):
            return -self._factor()
        if self._accept("+"):
            return self._factor()
        return self._power()

    def _power(self) -> ExactPoly:
        base = self._atom()
        if self._accept("^"):
            token = self.current
            if token.kind != "INT":
                raise PolynomialSyntaxError("El exponente debe ser un entero no negativo", token.position)
            self._advance()
            base = base ** int(token.text)
            if self.current.kind == "OP" and self.current.text == "^":
                raise PolynomialSyntaxError("Potencias encadenadas requieren paréntesis", self.current.position)
        return base

    def _atom(self) -> ExactPoly:
        token = self.current
        if token.kind == "INT":
            self._advance()
            value = Fraction(int(token.text))
            if self._accept("/"):
                denominator = self.current
                if denominator.kind != "INT":
                    raise PolynomialSyntaxError("Se esperaba un denominador entero", denominator.position)
                self._advance()
                if int(denominator.text) == 0:
                    raise PolynomialSyntaxError("Denominador cero", denominator.position)
                value /= int(denominator.text)
            return ExactPoly.constant(value, self.nvars)
        if token.kind == "NAME":
            self._advance()
            if token.text not in self.variables:
                raise UnknownVariableError(token.text, token.position)
            return ExactPoly.variable(self.variables[token.text], self.nvars)
        if self._accept("("):
            inner = self._expr()
            if not self._accept(")"):
                raise PolynomialSyntaxError("Falta ')'", self.current.position)
            return inner
        if token.kind == "END":
            raise PolynomialSyntaxError("Fin de expresión inesperado", token.position)
        raise PolynomialSyntaxError(f"Token inesperado '{token.text}'", token.position)


def parse_variables(text: str) -> List[str]:
    """
    Lee una lista de variables separadas por comas ("x,y,z").

    :param text: Lista en texto
    :return: Nombres de variables validados
    """
    names = [name.strip() for name in text.split(",") if name.strip()]
    if not names:
        raise PolynomialSyntaxError("Lista de variables vacía", 0)
    offset = 0
    for name in names:
        if not VARIABLE_PATTERN.fullmatch(name):
            raise PolynomialSyntaxError(f"Nombre de variable inválido '{name}'", text.find(name, offset))
        offset = text.find(name, offset) + len(name)
    if len(set(names)) != len(names):
        raise PolynomialSyntaxError("Variables repetidas", 0)
    return names


def parse_poly(text: str, variables: Sequence[str]) -> ExactPoly:
    """
    Convierte texto en un ExactPoly sobre las variables dadas.

    :param text: Texto del polinomio
    :param variables: Nombres de las variables, en orden
    :return: Polinomio exacto
    """
    if not variables:
        raise PolynomialSyntaxError("Se requiere al menos una variable", 0)
    for name in variables:
        if not VARIABLE_PATTERN.fullmatch(name):
            raise PolynomialSyntaxError(f"Nombre de variable inválido '{name}'", 0)
    return _Parser(text, list(variables)).parse()


def _format_coefficient(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def format_poly(poly: ExactPoly, variables: Sequence[str], order: MonomialOrder = MonomialOrder.degrevlex()) -> str:
    """
    Imprime el polinomio en la gramática de parse_poly, términos de mayor a menor.

    :param poly: Polinomio a imprimir
    :param variables: Nombres de las variables
    :param order: Orden de impresión de los términos
    :return: Texto que parse_poly devuelve al mismo polinomio
    """
    if poly.is_zero():
        return "0"
    pieces: List[str] = []
    for exponent, coeff in poly.sorted_terms(order):
        factors = [name if a == 1 else f"{name}^{a}" for name, a in zip(variables, exponent) if a]
        magnitude = abs(coeff)
        if not factors:
            body = _format_coefficient(magnitude)
        elif magnitude == 1:
            body = "*".join(factors)
        else:
            body = "*".join([_format_coefficient(magnitude)] + factors)
        if not pieces:
            pieces.append(f"-{body}" if coeff < 0 else body)
        else:
            pieces.append(f"- {body}" if coeff < 0 else f"+ {body}")
    return " ".join(pieces)
