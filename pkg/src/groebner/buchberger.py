"""
Motor de Buchberger sobre Q con los criterios clásicos (coprimos y cadena).

Opcionalmente registra el "lift": cada elemento de la base como combinación
de los generadores de entrada, necesario para convertir cofactores sobre la
base en cofactores sobre las derivadas parciales de f.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Set, Tuple

from src.domain.errors import InvariantBreach
from src.infrastructure.utils import timing_decorator
from src.polyalg.exact_poly import ExactPoly, poly_sum
from src.polyalg.monomial_order import (
    Exponent,
    MonomialOrder,
    divides,
    exponent_add,
    exponent_lcm,
    exponent_sub,
    is_coprime,
)
from src.utils.logger import setup_logger

logger = setup_logger(__name__)

LiftVector = Tuple[ExactPoly, ...]


@dataclass(frozen=True)
class GroebnerBasis:
    """
    Base de Gröbner reducida (mónica, ordenada de mayor a menor monomio líder).

    ``lift[j]`` expresa ``generators[j]`` como combinación de ``inputs``.
    """

    generators: Tuple[ExactPoly, ...]
    order: MonomialOrder
    reduced: bool
    nvars: int
    inputs: Tuple[ExactPoly, ...] = ()
    lift: Optional[Tuple[LiftVector, ...]] = None

    def leading_monomials(self) -> List[Exponent]:
        return [g.leading_monomial(self.order) for g in self.generators]

    def is_unit_ideal(self) -> bool:
        return any(g.is_constant() and not g.is_zero() for g in self.generators)

    def contains(self, poly: ExactPoly) -> bool:
        """Pertenencia al ideal: forma normal nula."""
        return normal_form(poly, self).is_zero()


@dataclass(frozen=True)
class DivisionRecord:
    """Resultado de la división: p = nf + sum cofactors[i] * generators[i]."""

    nf: ExactPoly
    cofactors: Tuple[ExactPoly, ...]


def _divide(
    poly: ExactPoly, divisors: Sequence[ExactPoly], order: MonomialOrder
) -> Tuple[ExactPoly, List[ExactPoly]]:
    """
    División multivariada completa (reduce todos los términos, no solo el líder).

    :return: (resto, cocientes)
    """
    nvars = poly.nvars
    work: Dict[Exponent, Fraction] = dict(poly.terms)
    remainder: Dict[Exponent, Fraction] = {}
    quotients: List[Dict[Exponent, Fraction]] = [{} for _ in divisors]
    heads = [d.leading_term(order) for d in divisors]
    while work:
        lead = max(work, key=order.key)
        coeff = work[lead]
        for idx, (head, head_coeff) in enumerate(heads):
            if divides(head, lead):
                shift = exponent_sub(lead, head)
                factor = coeff / head_coeff
                quotient = quotients[idx]
                value = quotient.get(shift, 0) + factor
                if value:
                    quotient[shift] = value
                else:
                    quotient.pop(shift, None)
                for exponent, c in divisors[idx].terms.items():
                    target = exponent_add(exponent, shift)
                    updated = work.get(target, 0) - factor * c
                    if updated:
                        work[target] = updated
                    else:
                        work.pop(target, None)
                break
        else:
            remainder[lead] = coeff
            del work[lead]
    return (
        ExactPoly(remainder, nvars),
        [ExactPoly(q, nvars) for q in quotients],
    )


def _combine_lifts(
    base: LiftVector, corrections: Sequence[Tuple[ExactPoly, LiftVector]], nvars: int
) -> LiftVector:
    """base - sum q * lift."""
    result = []
    for i, entry in enumerate(base):
        pieces = [entry] + [-(q * lift[i]) for q, lift in corrections if not q.is_zero()]
        result.append(poly_sum(pieces, nvars))
    return tuple(result)


def _s_polynomial(
    a: ExactPoly, b: ExactPoly, order: MonomialOrder
) -> Tuple[ExactPoly, Tuple[Exponent, Fraction], Tuple[Exponent, Fraction]]:
    lm_a, lc_a = a.leading_term(order)
    lm_b, lc_b = b.leading_term(order)
    lcm = exponent_lcm(lm_a, lm_b)
    factor_a = (exponent_sub(lcm, lm_a), 1 / lc_a)
    factor_b = (exponent_sub(lcm, lm_b), 1 / lc_b)
    spoly = a.mul_term(*factor_a) - b.mul_term(*factor_b)
    return spoly, factor_a, factor_b


@timing_decorator
def buchberger(
    gens: Sequence[ExactPoly],
    order: Optional[MonomialOrder] = None,
    track_lift: bool = False,
) -> GroebnerBasis:
    """
    Calcula la base de Gröbner reducida del ideal generado por gens.

    :param gens: Generadores (no vacío, mismo número de variables)
    :param order: Orden monomial (degrevlex por defecto)
    :param track_lift: Si True, registra el lift respecto de gens
    :return: GroebnerBasis reducida
    """
    if not gens:
        raise ValueError("buchberger requiere al menos un generador")
    nvars = gens[0].nvars
    if any(g.nvars != nvars for g in gens):
        raise ValueError("Todos los generadores deben tener el mismo número de variables")
    order = order or MonomialOrder.degrevlex()
    inputs = tuple(gens)
    m = len(inputs)
    zero = ExactPoly.zero(nvars)

    def unit_lift(i: int) -> LiftVector:
        return tuple(ExactPoly.one(nvars) if j == i else zero for j in range(m))

    basis: List[ExactPoly] = []
    lifts: List[LiftVector] = []
    for i, g in enumerate(inputs):
        if not g.is_zero():
            basis.append(g)
            lifts.append(unit_lift(i) if track_lift else ())

    if not basis:
        return GroebnerBasis((), order, True, nvars, inputs, () if track_lift else None)

    logger.debug(f"Buchberger: {len(basis)} generadores en {nvars} variables")
    pairs: Set[Tuple[int, int]] = {(i, j) for i in range(len(basis)) for j in range(i + 1, len(basis))}
    heads = [g.leading_monomial(order) for g in basis]
    processed = 0

    while pairs:
        i, j = min(pairs, key=lambda p: (order.key(exponent_lcm(heads[p[0]], heads[p[1]])), p))
        pairs.discard((i, j))
        processed += 1
        if is_coprime(heads[i], heads[j]):
            continue
        lcm = exponent_lcm(heads[i], heads[j])
        chained = False
        for k in range(len(basis)):
            if k in (i, j) or not divides(heads[k], lcm):
                continue
            if (min(i, k), max(i, k)) not in pairs and (min(j, k), max(j, k)) not in pairs:
                chained = True
                break
        if chained:
            continue
        spoly, factor_i, factor_j = _s_polynomial(basis[i], basis[j], order)
        remainder, quotients = _divide(spoly, basis, order)
        if remainder.is_zero():
            continue
        if track_lift:
            s_lift = tuple(
                lifts[i][t].mul_term(*factor_i) - lifts[j][t].mul_term(*factor_j) for t in range(m)
            )
            lifts.append(_combine_lifts(s_lift, list(zip(quotients, lifts)), nvars))
        else:
            lifts.append(())
        new_index = len(basis)
        basis.append(remainder)
        heads.append(remainder.leading_monomial(order))
        pairs.update((k, new_index) for k in range(new_index))

    logger.debug(f"Buchberger: {processed} pares procesados, {len(basis)} elementos antes de reducir")
    generators, final_lifts = _reduce_basis(basis, lifts, order, track_lift, nvars)
    gb = GroebnerBasis(
        tuple(generators),
        order,
        True,
        nvars,
        inputs,
        tuple(final_lifts) if track_lift else None,
    )
    _verify_membership(gb)
    return gb


def _reduce_basis(
    basis: List[ExactPoly],
    lifts: List[LiftVector],
    order: MonomialOrder,
    track_lift: bool,
    nvars: int,
) -> Tuple[List[ExactPoly], List[LiftVector]]:
    """Minimaliza, interreduce, normaliza a mónico y ordena la base."""
    indexed = sorted(range(len(basis)), key=lambda t: (order.key(basis[t].leading_monomial(order)), t))
    kept: List[int] = []
    for t in indexed:
        head = basis[t].leading_monomial(order)
        if not any(divides(basis[k].leading_monomial(order), head) for k in kept):
            kept.append(t)
    # Ningún monomio líder de kept divide a otro; la interreducción no cambia líderes.
    minimal = [basis[t] for t in kept]
    minimal_lifts = [lifts[t] for t in kept]
    generators: List[ExactPoly] = []
    final_lifts: List[LiftVector] = []
    for position, poly in enumerate(minimal):
        others = minimal[:position] + minimal[position + 1:]
        other_lifts = minimal_lifts[:position] + minimal_lifts[position + 1:]
        if others:
            reduced, quotients = _divide(poly, others, order)
        else:
            reduced, quotients = poly, []
        lead_coeff = reduced.leading_term(order)[1]
        generators.append(reduced.scale(1 / lead_coeff))
        if track_lift:
            combined = _combine_lifts(minimal_lifts[position], list(zip(quotients, other_lifts)), nvars)
            final_lifts.append(tuple(entry.scale(1 / lead_coeff) for entry in combined))
    ordering = sorted(range(len(generators)), key=lambda t: order.key(generators[t].leading_monomial(order)), reverse=True)
    return [generators[t] for t in ordering], [final_lifts[t] for t in ordering] if track_lift else []


def _verify_membership(gb: GroebnerBasis) -> None:
    for index, poly in enumerate(gb.inputs):
        if not normal_form(poly, gb).is_zero():
            raise InvariantBreach(
                "Un generador de entrada no pertenece al ideal de la base calculada",
                {"input_index": index},
            )
    if gb.lift is not None:
        for j, generator in enumerate(gb.generators):
            recombined = poly_sum((c * g for c, g in zip(gb.lift[j], gb.inputs)), gb.nvars)
            if recombined != generator:
                raise InvariantBreach("El lift no reproduce el generador", {"generator_index": j})


def division_record(poly: ExactPoly, gb: GroebnerBasis, verify: bool = True) -> DivisionRecord:
    """
    División de poly por la base con cofactores: poly = nf + sum h_i g_i.

    :param poly: Polinomio a dividir
    :param gb: Base de Gröbner reducida
    :param verify: Si True, re-expande la identidad exactamente
    :return: DivisionRecord
    """
    if not gb.generators:
        return DivisionRecord(poly, ())
    nf, quotients = _divide(poly, gb.generators, gb.order)
    record = DivisionRecord(nf, tuple(quotients))
    if verify:
        expanded = poly_sum([nf] + [h * g for h, g in zip(quotients, gb.generators)], poly.nvars)
        if expanded != poly:
            raise InvariantBreach("La re-expansión de la división no reproduce el polinomio", {})
    return record


def normal_form(poly: ExactPoly, gb: GroebnerBasis) -> ExactPoly:
    """
    Forma normal de poly módulo la base.

    :param poly: Polinomio
    :param gb: Base de Gröbner reducida
    :return: Resto sin términos divisibles por monomios líderes
    """
    if not gb.generators:
        return poly
    return _divide(poly, gb.generators, gb.order)[0]


def is_groebner_basis(gb: GroebnerBasis) -> bool:
    """Criterio de Buchberger a posteriori: toda S-polinomial reduce a cero."""
    generators = list(gb.generators)
    for i in range(len(generators)):
        for j in range(i + 1, len(generators)):
            spoly = _s_polynomial(generators[i], generators[j], gb.order)[0]
            if not _divide(spoly, generators, gb.order)[0].is_zero():
                return False
    return True


def is_reduced(gb: GroebnerBasis) -> bool:
    heads = gb.leading_monomials()
    for index, generator in enumerate(gb.generators):
        if generator.leading_term(gb.order)[1] != 1:
            return False
        for exponent in generator.terms:
            if any(divides(head, exponent) for k, head in enumerate(heads) if k != index):
                return False
    return True


def ideal_contains(gens: Sequence[ExactPoly], poly: ExactPoly, order: Optional[MonomialOrder] = None) -> bool:
    return buchberger(gens, order).contains(poly)


def is_unit_ideal(gens: Sequence[ExactPoly], order: Optional[MonomialOrder] = None) -> bool:
    return buchberger(gens, order).is_unit_ideal()
