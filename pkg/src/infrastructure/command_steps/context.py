"""
Contexto compartido entre los pasos de un comando: cachés de álgebra y
mansedumbre, registro de cargas útiles y filas de comprobación cruzada.
"""
from fractions import Fraction
from typing import Any, Dict, Optional

from src.cu_linalg.upoly import fraction_text
from src.groebner.milnor_algebra import MilnorAlgebra, milnor_algebra
from src.infrastructure.computation_config import ComputationConfig
from src.oracles.tameness import TamenessVerdict, tameness_proxy
from src.polyalg.exact_poly import ExactPoly
from src.twisted_derham.fiber_cohomology import default_ladder, default_samples
from src.domain.errors import InfiniteMilnorNumber


def new_context(
    poly: Optional[ExactPoly],
    variables,
    config: ComputationConfig,
    hypersurface=None,
) -> Dict[str, Any]:
    """
    Contexto inicial de un trabajo.

    :param poly: Polinomio (None para la predicción de hipersuperficies)
    :param variables: Nombres de variables
    :param config: Configuración de la computación
    :param hypersurface: Par (n, d) opcional
    """
    return {
        'poly': poly,
        'variables': list(variables),
        'config': config,
        'hypersurface': tuple(hypersurface) if hypersurface else None,
        'payloads': {},
        'step_results': {},
        'cross_checks': [],
        'cache': {},
    }


def as_text(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, Fraction):
        return fraction_text(value)
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(as_text(v) for v in value) + "]"
    return str(value)


def add_cross_check(
    context: Dict[str, Any],
    name: str,
    computed: Any,
    predicted: Any,
    source: str,
    passed: Optional[bool] = None,
) -> None:
    """
    Añade una fila calculado/previsto; si passed es None se compara por igualdad.
    """
    verdict = computed == predicted if passed is None else passed
    context['cross_checks'].append(
        {
            'name': name,
            'computed': as_text(computed),
            'predicted': as_text(predicted),
            'passed': bool(verdict),
            'source': source,
        }
    )


def record_payload(context: Dict[str, Any], step_name: str, payload: Dict[str, Any]) -> Dict[str, Any]:
    context['payloads'][step_name] = payload
    context['step_results'][step_name] = {'status': 'completed'}
    return context


def ensure_algebra(context: Dict[str, Any]) -> MilnorAlgebra:
    """Álgebra de Milnor cacheada; propaga InfiniteMilnorNumber."""
    cache = context['cache']
    if 'algebra' not in cache:
        cache['algebra'] = milnor_algebra(context['poly'])
    return cache['algebra']


def try_algebra(context: Dict[str, Any]) -> Optional[MilnorAlgebra]:
    """Álgebra de Milnor o None si el número de Milnor es infinito."""
    try:
        return ensure_algebra(context)
    except InfiniteMilnorNumber:
        return None


def ensure_tameness(context: Dict[str, Any]) -> TamenessVerdict:
    cache = context['cache']
    if 'tameness' not in cache:
        cache['tameness'] = tameness_proxy(context['poly'], try_algebra(context))
    return cache['tameness']


def ladder_for(context: Dict[str, Any]):
    config: ComputationConfig = context['config']
    return config.ladder() or default_ladder(context['poly'])


def samples_for(context: Dict[str, Any]):
    config: ComputationConfig = context['config']
    return config.samples() or default_samples(config.seed)
