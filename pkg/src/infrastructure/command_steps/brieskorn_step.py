"""
Paso brieskorn: retículo, matriz de la conexión con certificado de
estabilización y Gram del residuo.
"""
from typing import Dict, Any

from src.brieskorn.lattice import BrieskornLattice, build_lattice
from src.domain.i_command_step import ICommandStep
from src.infrastructure.command_steps.context import add_cross_check, ensure_tameness, record_payload, try_algebra


def ensure_lattice(context: Dict[str, Any]) -> BrieskornLattice:
    cache = context['cache']
    if 'lattice' not in cache:
        config = context['config']
        cache['lattice'] = build_lattice(
            context['poly'],
            config.u_truncation,
            config.assume_tame,
            max_workers=config.max_workers,
        )
    return cache['lattice']


class BrieskornStep(ICommandStep):
    """
    Construye el retículo de Brieskorn (requiere mansedumbre certificada o
    --assume-tame).
    """

    def execute(self, context: Dict[str, Any]) -> Dict[str, Any]:
        lattice = ensure_lattice(context)
        certificate = lattice.connection.certificate
        add_cross_check(
            context,
            'pole-order',
            certificate['max_u_degree'],
            f"<= {lattice.truncation - 2}",
            self.get_step_name(),
            passed=certificate['residuals_zero'] and certificate['max_u_degree'] <= lattice.truncation - 2,
        )
        add_cross_check(context, 'lattice-rank', lattice.rank, lattice.algebra.mu, self.get_step_name())
        return record_payload(context, self.get_step_name(), lattice.to_dict(context['variables']))

    def get_step_name(self) -> str:
        return "brieskorn"

    def get_step_description(self) -> str:
        return "Retículo de Brieskorn y matriz de u^2 d/du"

    def can_execute(self, context: Dict[str, Any]) -> bool:
        if context.get('poly') is None or try_algebra(context) is None:
            return False
        return context['config'].assume_tame or ensure_tameness(context).certified
