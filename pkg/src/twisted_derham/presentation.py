"""
Presentación sobre Q[u] del H^n de la ventana y veredicto de libertad.

El módulo ventana es Q[u]^W / (im M_{n-1} ∩ Q[u]^W). La intersección es la
imagen de ker(P_fuera M_{n-1}), que se calcula por reducción euclídea de
columnas; la forma de Smith de P_dentro M_{n-1} K decide rango y torsión.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple

from config.settings import MAX_WORKERS
from src.cu_linalg.module_report import BasicuVerdict, ModuleReport, basicu_check, module_report
from src.cu_linalg.smith_form import column_kernel
from src.cu_linalg.upoly import UPoly, fraction_text
from src.cu_linalg.upoly_matrix import UPolyMatrix
from src.infrastructure.utils import timing_decorator
from src.polyalg.exact_poly import ExactPoly
from src.twisted_derham.fiber_cohomology import default_samples, fiber_cohomology_dims
from src.twisted_derham.truncated_complex import TruncatedComplex, build_truncated
from src.utils.logger import setup_logger

logger = setup_logger(__name__)


def _upoly_columns(tc: TruncatedComplex, k: int) -> List[Dict[int, UPoly]]:
    """Columnas de M_k(u) = DF + u D con entradas en Q[u]."""
    columns = []
    for df_col, d_col in zip(tc.df_columns[k], tc.d_columns[k]):
        rows = set(df_col) | set(d_col)
        column = {row: UPoly([df_col.get(row, 0), d_col.get(row, 0)]) for row in rows}
        columns.append({row: value for row, value in column.items() if value})
    return columns


@timing_decorator
def presentation_top(tc: TruncatedComplex) -> Tuple[UPolyMatrix, int]:
    """
    Matriz de presentación del H^n de la ventana de grado Dmax.

    :param tc: Complejo truncado (se usa la parte N = 1: DF y D)
    :return: (presentación con W filas, W)
    """
    n = tc.nvars
    window = tc.bases[n].window(tc.dmax)
    rank = len(window)
    if n == 0:
        return UPolyMatrix.zeros(rank, 0), rank
    row_of = {row: i for i, row in enumerate(window)}
    columns = _upoly_columns(tc, n - 1)
    outside_columns = [{row: v for row, v in column.items() if row not in row_of} for column in columns]
    outside_rows = sorted({row for column in outside_columns for row in column})
    kernel = column_kernel(outside_columns, outside_rows)
    presented: List[Dict[int, UPoly]] = []
    for combo in kernel:
        image: Dict[int, UPoly] = {}
        for c, coeff in combo.items():
            for row, value in columns[c].items():
                if row in row_of:
                    target = row_of[row]
                    updated = image.get(target, UPoly()) + coeff * value
                    if updated:
                        image[target] = updated
                    else:
                        image.pop(target, None)
        if image:
            presented.append(image)
    logger.debug(f"Presentación de H^{n}: {rank} generadores, {len(presented)} relaciones")
    return UPolyMatrix.from_sparse_columns(presented, rank), rank


@dataclass(frozen=True)
class FreenessReport:
    """Libertad del H^n truncado (Smith) frente a constancia de fibras."""

    dmax: int
    module: ModuleReport
    fiber_dims: Dict[Fraction, Dict[int, int]]
    basicu: BasicuVerdict

    @property
    def lower_degrees_constant(self) -> bool:
        """Constancia de las fibras en grados < n."""
        degrees = {k for dims in self.fiber_dims.values() for k in dims}
        top = max(degrees) if degrees else 0
        return all(len({dims[k] for dims in self.fiber_dims.values()}) == 1 for k in degrees if k < top)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "dmax": self.dmax,
            "module": self.module.to_dict(),
            "fiber_dims": {fraction_text(u): [dims[k] for k in sorted(dims)] for u, dims in self.fiber_dims.items()},
            "lower_degrees_constant": self.lower_degrees_constant,
            "basicu": self.basicu.to_dict(),
        }


@timing_decorator
def freeness_verdict(
    f: ExactPoly,
    dmax: Optional[int] = None,
    samples: Optional[Sequence] = None,
    sign: int = 1,
) -> FreenessReport:
    """
    Cruza los dos criterios sobre el mismo complejo truncado: constancia de las
    dimensiones de fibra y libertad del módulo presentado.

    :param f: Polinomio
    :param dmax: Ventana de grado (por defecto max(deg f, 2) + 2)
    :param samples: Puntos u_o
    :param sign: Signo de df
    :return: FreenessReport
    """
    dmax = dmax if dmax is not None else max(f.total_degree(), 2) + 2
    samples = tuple(Fraction(s) for s in samples) if samples else default_samples()
    tc = build_truncated(f, 1, dmax, sign)
    presentation, rank = presentation_top(tc)
    module = module_report(presentation, rank)
    fiber_dims = {u_o: fiber_cohomology_dims(tc, u_o) for u_o in samples}
    verdict = basicu_check({u_o: dims[f.nvars] for u_o, dims in fiber_dims.items()}, module)
    logger.info(
        f"Libertad Dmax={dmax}: rango libre {module.free_rank}, libre={module.is_free}, consistente={verdict.consistent}"
    )
    return FreenessReport(dmax, module, fiber_dims, verdict)
