"""
Retículo de Brieskorn: reducción de n-formas, conexión, emparejamiento
residuo y espectro casi homogéneo.
"""
from src.brieskorn.lattice import (
    BrieskornLattice,
    ConnectionData,
    TopFormReduction,
    build_lattice,
    connection_matrix,
    connection_residue_eigenvalues,
    eigenvalues_match_spectrum,
    reduce_topform,
    residue_pairing,
    spectrum_shift_anchor,
)
from src.brieskorn.spectrum import PairingCheck, SpectrumData, spectrum_pairing_check, spectrum_qh
from src.polyalg.weights import quasi_homogeneous_weights

__all__ = [
    "BrieskornLattice",
    "ConnectionData",
    "TopFormReduction",
    "build_lattice",
    "connection_matrix",
    "connection_residue_eigenvalues",
    "eigenvalues_match_spectrum",
    "reduce_topform",
    "residue_pairing",
    "spectrum_shift_anchor",
    "PairingCheck",
    "SpectrumData",
    "spectrum_pairing_check",
    "spectrum_qh",
    "quasi_homogeneous_weights",
]
