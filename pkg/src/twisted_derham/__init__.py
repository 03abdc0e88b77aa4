"""
Complejo de de Rham torcido (Omega[u]/u^N, u d + df^): modelos matriciales,
dimensiones de fibra, cohomología de Koszul y presentaciones sobre Q[u].
"""
from src.twisted_derham.truncated_complex import FormBasis, TruncatedComplex, build_truncated
from src.twisted_derham.fiber_cohomology import (
    FiberDimReport,
    TorsionVerdict,
    default_ladder,
    default_samples,
    fiber_cohomology_dims,
    fiber_dim_report,
    layered_cohomology_dims,
    torsion_growth_verdict,
)
from src.twisted_derham.koszul import KoszulReport, koszul_dims
from src.twisted_derham.presentation import FreenessReport, freeness_verdict, presentation_top
from src.twisted_derham.euler_witness import check_euler_witness, euler_alpha, euler_witness

__all__ = [
    "FormBasis",
    "TruncatedComplex",
    "build_truncated",
    "FiberDimReport",
    "TorsionVerdict",
    "default_ladder",
    "default_samples",
    "fiber_cohomology_dims",
    "fiber_dim_report",
    "layered_cohomology_dims",
    "torsion_growth_verdict",
    "KoszulReport",
    "koszul_dims",
    "FreenessReport",
    "freeness_verdict",
    "presentation_top",
    "check_euler_witness",
    "euler_alpha",
    "euler_witness",
]
