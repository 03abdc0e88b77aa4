"""
Dimensiones de cohomología de las fibras u = u_o sobre una ventana de grado,
informes por escalera de truncaciones y veredicto de crecimiento de torsión.

H^k_ventana = ker(M_k | ventana) / (im M_{k-1} ∩ ventana), con
dim(im ∩ ventana) = rango(M_{k-1}) - rango(P_fuera M_{k-1}).
"""
import random
from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple

from config.settings import (
    DEFAULT_LADDER_RUNGS,
    DEFAULT_U_SAMPLES,
    LGLAB_SEED,
    MAX_WORKERS,
    MIN_LADDER_BASE,
    STABILIZATION_AGREEMENTS,
)
from src.cu_linalg.rational_matrix import restrict_vector, sparse_rank
from src.cu_linalg.upoly import fraction_text
from src.domain.errors import InvalidLadder
from src.infrastructure.utils import timing_decorator
from src.polyalg.exact_poly import ExactPoly
from src.twisted_derham.truncated_complex import Column, TruncatedComplex, build_truncated
from src.utils.logger import setup_logger

logger = setup_logger(__name__)

STABLE_FREE_LIKE = "stable-free-like"
TORSION_GROWTH = "torsion-growth"
INCONCLUSIVE = "inconclusive"


def default_samples(seed: Optional[int] = None) -> Tuple[Fraction, ...]:
    """
    Puntos fijos {0, 1, -1, 2, 7/3} más un racional pseudoaleatorio sembrado.

    :param seed: Semilla (LGLAB_SEED por defecto)
    :return: Tupla de racionales distintos
    """
    fixed = tuple(Fraction(text) for text in DEFAULT_U_SAMPLES)
    rng = random.Random(LGLAB_SEED if seed is None else seed)
    while True:
        candidate = Fraction(rng.choice((-1, 1)) * rng.randint(3, 97), rng.randint(2, 29))
        if candidate not in fixed:
            return fixed + (candidate,)


def default_ladder(f: ExactPoly, rungs: int = DEFAULT_LADDER_RUNGS) -> Tuple[int, ...]:
    """Escalera Dmax = base + 2i con base = max(deg f, 2)."""
    base = max(f.total_degree(), MIN_LADDER_BASE)
    return tuple(base + 2 * i for i in range(rungs))


def validate_ladder(ladder: Sequence[int], name: str = "Dmax") -> None:
    if len(ladder) < 3:
        raise InvalidLadder(f"La escalera {name} necesita al menos 3 escalones")
    if any(b <= a for a, b in zip(ladder, ladder[1:])):
        raise InvalidLadder(f"La escalera {name} debe ser estrictamente creciente")


def _windowed_dims(
    nvars: int,
    columns_by_degree: Sequence[List[Column]],
    windows: Sequence[List[int]],
) -> Dict[int, int]:
    """
    Dimensiones por grado a partir de columnas dispersas y ventanas.

    :param columns_by_degree: columns_by_degree[k][p] = imagen del elemento p de grado k
    :param windows: windows[k] = posiciones (fuente y destino) dentro de la ventana
    """
    dims: Dict[int, int] = {}
    for k in range(nvars + 1):
        window = windows[k]
        if k < nvars:
            kernel = len(window) - sparse_rank(columns_by_degree[k][p] for p in window)
        else:
            kernel = len(window)
        if k == 0:
            image = 0
        else:
            inside = set(window)
            incoming = columns_by_degree[k - 1]
            image = sparse_rank(incoming) - sparse_rank(
                restrict_vector(column, lambda row: row not in inside) for column in incoming
            )
        dims[k] = kernel - image
    return dims


def fiber_cohomology_dims(tc: TruncatedComplex, u_o) -> Dict[int, int]:
    """
    Dimensiones de H^k de la fibra u = u_o sobre la ventana de grado Dmax.

    :param tc: Complejo truncado
    :param u_o: Punto racional
    :return: Diccionario grado -> dimensión
    """
    u_o = Fraction(u_o)
    columns = [tc.columns_at(k, u_o) for k in range(tc.nvars)]
    windows = [basis.window(tc.dmax) for basis in tc.bases]
    dims = _windowed_dims(tc.nvars, columns, windows)
    logger.debug(f"Fibra u={fraction_text(u_o)} Dmax={tc.dmax}: {dims}")
    return dims


def layered_cohomology_dims(tc: TruncatedComplex) -> Dict[int, int]:
    """
    Q-dimensiones de H^k(Omega[u]/u^N) sobre la ventana de grado (capa a capa).
    """
    columns = [tc.layered_columns(k) for k in range(tc.nvars)]
    windows = []
    for basis in tc.bases:
        window = basis.window(tc.dmax)
        windows.append([j * len(basis) + p for j in range(tc.truncation) for p in window])
    return _windowed_dims(tc.nvars, columns, windows)


@dataclass(frozen=True)
class FiberDimReport:
    """
    Dimensiones de fibra por escalón Dmax y punto u_o, con banderas de estabilización.

    ``dims[dmax][u_o][k]``; ``stabilized[u_o][k]`` es cierto si los dos últimos
    escalones coinciden.
    """

    nvars: int
    samples: Tuple[Fraction, ...]
    ladder: Tuple[int, ...]
    dims: Dict[int, Dict[Fraction, Dict[int, int]]]
    stabilized: Dict[Fraction, Dict[int, bool]] = field(default_factory=dict)

    def final(self, u_o, k: int) -> int:
        return self.dims[self.ladder[-1]][Fraction(u_o)][k]

    def all_stabilized(self) -> bool:
        return all(all(flags.values()) for flags in self.stabilized.values())

    def constant_across_samples(self) -> bool:
        last = self.dims[self.ladder[-1]]
        return all(len({last[u][k] for u in self.samples}) == 1 for k in range(self.nvars + 1))

    def to_dict(self) -> Dict[str, Any]:
        return {
            "samples": [fraction_text(u) for u in self.samples],
            "ladder": list(self.ladder),
            "dims": {
                str(dmax): {fraction_text(u): [per_u[k] for k in range(self.nvars + 1)] for u, per_u in by_u.items()}
                for dmax, by_u in self.dims.items()
            },
            "stabilized": {
                fraction_text(u): [flags[k] for k in range(self.nvars + 1)] for u, flags in self.stabilized.items()
            },
        }


def _stabilization_flags(ladder: Sequence[int], dims, samples, nvars: int) -> Dict[Fraction, Dict[int, bool]]:
    flags: Dict[Fraction, Dict[int, bool]] = {}
    tail = ladder[-STABILIZATION_AGREEMENTS:]
    for u_o in samples:
        flags[u_o] = {
            k: len(tail) >= STABILIZATION_AGREEMENTS and len({dims[d][u_o][k] for d in tail}) == 1
            for k in range(nvars + 1)
        }
    return flags


@timing_decorator
def fiber_dim_report(
    f: ExactPoly,
    ladder: Optional[Sequence[int]] = None,
    samples: Optional[Sequence] = None,
    sign: int = 1,
    max_workers: int = MAX_WORKERS,
) -> FiberDimReport:
    """
    Calcula las dimensiones de fibra en cada escalón y cada punto muestreado.

    :param f: Polinomio
    :param ladder: Escalera Dmax (por defecto default_ladder)
    :param samples: Puntos u_o (por defecto default_samples)
    :param sign: Signo de df
    :param max_workers: Hilos para los rangos en puntos distintos
    :return: FiberDimReport
    """
    ladder = tuple(ladder) if ladder else default_ladder(f)
    samples = tuple(Fraction(s) for s in samples) if samples else default_samples()
    if any(b <= a for a, b in zip(ladder, ladder[1:])):
        raise InvalidLadder("La escalera Dmax debe ser estrictamente creciente")
    dims: Dict[int, Dict[Fraction, Dict[int, int]]] = {}
    for dmax in ladder:
        tc = build_truncated(f, 1, dmax, sign)
        by_u: Dict[Fraction, Dict[int, int]] = {}
        with ThreadPoolExecutor(max_workers=max_workers) as executor:
            futures = {executor.submit(fiber_cohomology_dims, tc, u_o): u_o for u_o in samples}
            for future in as_completed(futures):
                by_u[futures[future]] = future.result()
        dims[dmax] = {u_o: by_u[u_o] for u_o in samples}
    report = FiberDimReport(f.nvars, samples, ladder, dims, _stabilization_flags(ladder, dims, samples, f.nvars))
    logger.info(
        f"Fibras: escalera {list(ladder)}, estabilizado={report.all_stabilized()}, constante={report.constant_across_samples()}"
    )
    return report


@dataclass(frozen=True)
class TorsionVerdict:
    """Veredicto de la escalera junto con los datos que lo sustentan."""

    verdict: str
    report: FiberDimReport
    layered_dims: Dict[int, Dict[int, int]] = field(default_factory=dict)
    reasons: Tuple[str, ...] = ()

    def to_dict(self) -> Dict[str, Any]:
        return {
            "verdict": self.verdict,
            "fibers": self.report.to_dict(),
            "layered_dims": {str(n): [dims[k] for k in sorted(dims)] for n, dims in self.layered_dims.items()},
            "reasons": list(self.reasons),
        }


def _strictly_increasing_somewhere(report: FiberDimReport, u_o: Fraction) -> bool:
    for k in range(report.nvars + 1):
        values = [report.dims[d][u_o][k] for d in report.ladder]
        if all(b > a for a, b in zip(values, values[1:])):
            return True
    return False


@timing_decorator
def torsion_growth_verdict(
    f: ExactPoly,
    n_ladder: Sequence[int],
    dmax_ladder: Sequence[int],
    samples: Optional[Sequence] = None,
    sign: int = 1,
    max_workers: int = MAX_WORKERS,
) -> TorsionVerdict:
    """
    Clasifica el comportamiento de las fibras a lo largo de las escaleras.

    "torsion-growth": en u_o = 0 alguna dimensión crece estrictamente con Dmax
    mientras las fibras u_o != 0 se estabilizan. "stable-free-like": todo se
    estabiliza, coincide entre puntos y las capas H(Omega[u]/u^N) tienen
    dimensión N veces la de la fibra.

    :param f: Polinomio
    :param n_ladder: Escalera de truncaciones en u
    :param dmax_ladder: Escalera de ventanas de grado
    :return: TorsionVerdict
    """
    validate_ladder(n_ladder, "N")
    validate_ladder(dmax_ladder, "Dmax")
    samples = tuple(Fraction(s) for s in samples) if samples else default_samples()
    if Fraction(0) not in samples:
        samples = (Fraction(0),) + samples
    report = fiber_dim_report(f, dmax_ladder, samples, sign, max_workers)
    zero = Fraction(0)
    nonzero = [u for u in samples if u != zero]
    others_stable = all(all(report.stabilized[u].values()) for u in nonzero)
    reasons: List[str] = []
    if _strictly_increasing_somewhere(report, zero) and others_stable:
        reasons.append("u_o=0: dimensión estrictamente creciente con Dmax; u_o!=0 estabilizado")
        return TorsionVerdict(TORSION_GROWTH, report, {}, tuple(reasons))
    if not (report.all_stabilized() and report.constant_across_samples()):
        reasons.append("dimensiones no estabilizadas o distintas entre puntos")
        return TorsionVerdict(INCONCLUSIVE, report, {}, tuple(reasons))
    layered: Dict[int, Dict[int, int]] = {}
    probe = dmax_ladder[-2]
    for N in n_ladder:
        layered[N] = layered_cohomology_dims(build_truncated(f, N, probe, sign))
    expected = {k: report.dims[probe][zero][k] for k in range(f.nvars + 1)}
    linear = all(layered[N][k] == N * expected[k] for N in n_ladder for k in expected)
    if not linear:
        reasons.append("las capas H(Omega[u]/u^N) no escalan como N * dim")
        return TorsionVerdict(INCONCLUSIVE, report, layered, tuple(reasons))
    reasons.append("todas las fibras estabilizadas y constantes; capas lineales en N")
    return TorsionVerdict(STABLE_FREE_LIKE, report, layered, tuple(reasons))
