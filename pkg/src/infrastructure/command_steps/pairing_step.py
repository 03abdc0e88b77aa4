"""
Paso pairing: emparejamiento residuo en u = 0 y rejilla alpha_i + alpha_j = n.
"""
from typing import Dict, Any

from src.brieskorn.lattice import residue_pairing
from src.brieskorn.spectrum import spectrum_pairing_check, spectrum_qh
from src.cu_linalg.upoly import fraction_text
from src.domain.i_command_step import ICommandStep
from src.groebner.residue import residue_functional
from src.infrastructure.command_steps.context import add_cross_check, ensure_algebra, record_payload, try_algebra
from src.polyalg.weights import find_weights


class PairingStep(ICommandStep):
    """
    Gram G_ij = lambda(m_i m_j): simetría, no degeneración y, en el caso casi
    homogéneo, compatibilidad con el espectro.
    """

    def execute(self, context: Dict[str, Any]) -> Dict[str, Any]:
        f = context['poly']
        algebra = ensure_algebra(context)
        functional = residue_functional(algebra)
        gram = residue_pairing(algebra, functional)
        determinant = gram.determinant() if algebra.mu else 1
        add_cross_check(context, 'gram-symmetric', gram.is_symmetric(), True, self.get_step_name())
        add_cross_check(context, 'gram-nondegenerate', determinant != 0, True, self.get_step_name())
        payload = {
            'residue_values': [fraction_text(v) for v in functional.values],
            'gram': [[fraction_text(v) for v in row] for row in gram.rows()],
            'determinant': fraction_text(determinant),
        }
        weights = find_weights(f)
        if weights is not None:
            spectrum = spectrum_qh(f, weights, algebra)
            check = spectrum_pairing_check(gram, spectrum)
            payload['pairing_grid'] = check.to_dict()
            add_cross_check(context, 'pairing-grid', len(check.violations), 0, self.get_step_name())
        return record_payload(context, self.get_step_name(), payload)

    def get_step_name(self) -> str:
        return "pairing"

    def get_step_description(self) -> str:
        return "Emparejamiento residuo sobre el álgebra de Milnor"

    def can_execute(self, context: Dict[str, Any]) -> bool:
        return context.get('poly') is not None and try_algebra(context) is not None
