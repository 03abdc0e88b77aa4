"""
Paso spectrum: espectro casi homogéneo frente a los autovalores de la parte
lineal de la conexión.
"""
from typing import Dict, Any

from config.settings import CONNECTION_CONVENTION
from src.brieskorn.lattice import connection_matrix, connection_residue_eigenvalues, spectrum_shift_anchor
from src.brieskorn.spectrum import spectrum_qh
from src.cu_linalg.upoly import fraction_text
from src.domain.i_command_step import ICommandStep
from src.infrastructure.command_steps.context import add_cross_check, ensure_algebra, record_payload
from src.polyalg.weights import find_weights


class SpectrumStep(ICommandStep):
    """
    Espectro {sum (a_i + 1) w_i}, simetría y comparación con la conexión.
    """

    def execute(self, context: Dict[str, Any]) -> Dict[str, Any]:
        f = context['poly']
        config = context['config']
        algebra = ensure_algebra(context)
        spectrum = spectrum_qh(f, algebra=algebra)
        add_cross_check(context, 'spectrum-symmetry', spectrum.is_symmetric(), True, self.get_step_name())
        add_cross_check(context, 'spectrum-range', spectrum.in_open_range(), True, self.get_step_name())
        lattice = context['cache'].get('lattice')
        connection = (
            lattice.connection
            if lattice is not None
            else connection_matrix(f, config.u_truncation, CONNECTION_CONVENTION, algebra, config.max_workers)
        )
        eigenvalues, complete = connection_residue_eigenvalues(connection)
        shift = spectrum_shift_anchor(connection.convention)
        add_cross_check(
            context,
            'connection-eigenvalues',
            sorted(eigenvalues) if complete else "no racionales",
            sorted(v + shift for v in spectrum.values),
            self.get_step_name(),
        )
        payload = spectrum.to_dict()
        payload['eigenvalues'] = [fraction_text(v) for v in sorted(eigenvalues)]
        payload['shift'] = fraction_text(shift)
        return record_payload(context, self.get_step_name(), payload)

    def get_step_name(self) -> str:
        return "spectrum"

    def get_step_description(self) -> str:
        return "Espectro casi homogéneo y autovalores de la conexión"

    def can_execute(self, context: Dict[str, Any]) -> bool:
        return context.get('poly') is not None and find_weights(context['poly']) is not None
