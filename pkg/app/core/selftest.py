"""
Selftest reproducible: corpus aleatorio con semilla fija y matriz de aceptación.

Todo lo que se compara es exacto; un fallo queda como ClaimResult con el
testigo, nunca como excepción.
"""
import logging
from typing import Callable, List, Optional, Sequence

import numpy as np

from core.brandt_service import brandt_matrix, brandt_via_velu2, validate_brandt
from core.config import settings
from core.correspondence_service import primes_up_to, table_report, verify_theorems
from core.exceptions import BrandtZetaError
from core.graph_service import (
    adjacency_of,
    delete_loops,
    graph_from_adjacency,
    laplacian,
    tree_count,
)
from core.matrices import charpoly_int, det_int
from core.polynomials import squarefree_degree, sturm_root_count
from core.supersingular_service import supersingular_locus
from core.tasks import run_ordered
from core.zeta_service import closed_path_counts, count_closed_paths, ihara_zeta, zeta_via_hashimoto
from models.polynomials import IntPolynomial, QuadraticBound
from schemas.reports import ClaimResult, ClaimStatus, SelftestReport

logger = logging.getLogger(__name__)

# Grafo 4-regular con lazos en los vértices 1 y 4; τ = 10
EXAMPLE_ADJACENCY = (
    (2, 1, 0, 1),
    (1, 0, 3, 0),
    (0, 3, 0, 1),
    (1, 0, 1, 2),
)
EXAMPLE_LAPLACIAN = (
    (2, -1, 0, -1),
    (-1, 4, -3, 0),
    (0, -3, 4, -1),
    (-1, 0, -1, 2),
)

LOCUS_SIZES = {13: 1, 37: 3, 61: 5, 73: 6}
ACCEPTANCE_PAIRS = ((37, 5), (37, 11), (61, 19), (73, 5))
TABLE_MU = {
    37: {5: 0, 11: -15, 17: 0, 23: 12},
    61: {29: 120},
    73: {5: -6, 11: -18, 17: 810, 23: 8580, 29: 1122},
}
PATH_LENGTH = 8


def _check(name: str, ok: bool, computed=None, expected=None, note: str = "") -> ClaimResult:
    return ClaimResult(
        id=name,
        status=ClaimStatus.PASS if ok else ClaimStatus.FAIL,
        computed=computed,
        expected=expected,
        note=note,
    )


def _guarded(name: str, fn: Callable[[], ClaimResult]) -> ClaimResult:
    try:
        return fn()
    except BrandtZetaError as e:
        logger.error(f"❌ {name}: {e.message}")
        return ClaimResult(id=name, status=ClaimStatus.FAIL, computed=e.to_detail())


# ==================== CORPUS ALEATORIO ====================

def random_connected_adjacency(rng: np.random.Generator, max_vertices: int = 8, max_edges: int = 12):
    """Árbol generador aleatorio más aristas extra (lazos incluidos)."""
    m = int(rng.integers(1, max_vertices + 1))
    A = [[0] * m for _ in range(m)]
    for v in range(1, m):
        u = int(rng.integers(0, v))
        A[u][v] += 1
        A[v][u] += 1
    extra = int(rng.integers(0, max_edges - (m - 1) + 1))
    for _ in range(extra):
        x, y = int(rng.integers(0, m)), int(rng.integers(0, m))
        if x == y:
            A[x][x] += 2
        else:
            A[x][y] += 1
            A[y][x] += 1
    return tuple(tuple(row) for row in A)


def random_int_matrix(rng: np.random.Generator, max_dim: int = 6, bound: int = 5):
    n = int(rng.integers(1, max_dim + 1))
    return tuple(tuple(int(x) for x in rng.integers(-bound, bound + 1, size=n)) for _ in range(n))


def random_int_polynomial(rng: np.random.Generator, max_degree: int = 6, bound: int = 9) -> IntPolynomial:
    while True:
        d = int(rng.integers(1, max_degree + 1))
        f = IntPolynomial(tuple(int(x) for x in rng.integers(-bound, bound + 1, size=d + 1)))
        if f.degree >= 1:
            return f


def graph_corpus_checks(corpus: Sequence) -> List[ClaimResult]:
    round_trip, oracle, paths = [], [], []
    for i, A in enumerate(corpus):
        G = graph_from_adjacency(A)
        if adjacency_of(G).matrix != A:
            round_trip.append(i)
        Z = ihara_zeta(G).function
        if Z != zeta_via_hashimoto(G):
            oracle.append(i)
        predicted = closed_path_counts(Z, PATH_LENGTH)
        counted = [count_closed_paths(G, m) for m in range(1, PATH_LENGTH + 1)]
        if predicted != counted:
            paths.append({"graph": i, "zeta": predicted, "enumerated": counted})
    return [
        _check("graph.round_trip", not round_trip, {"failures": round_trip}, note=f"{len(corpus)} grafos"),
        _check("zeta.hashimoto_oracle", not oracle, {"failures": oracle}, note=f"{len(corpus)} grafos"),
        _check("zeta.closed_paths", not paths, {"failures": paths}, note=f"m <= {PATH_LENGTH}"),
    ]


def exact_core_checks(rng: np.random.Generator, size: int) -> List[ClaimResult]:
    det_failures, method_failures, sturm_failures = [], [], []
    for i in range(size):
        M = random_int_matrix(rng)
        chi = charpoly_int(M)
        if chi(0) != (-1) ** len(M) * det_int(M):
            det_failures.append(i)
        if chi != charpoly_int(M, method="interpolation"):
            method_failures.append(i)

        f = random_int_polynomial(rng)
        bound = 1 + max(abs(c) for c in f.coeffs)
        count = sturm_root_count(f, QuadraticBound(-bound), QuadraticBound(bound))
        real_roots = sturm_root_count(f, QuadraticBound(-bound - 1), QuadraticBound(bound + 1))
        if count != real_roots or count > squarefree_degree(f):
            sturm_failures.append({"polynomial": list(f.coeffs), "count": count})
    return [
        _check("exact.charpoly_det", not det_failures, {"failures": det_failures}),
        _check("exact.charpoly_methods", not method_failures, {"failures": method_failures}),
        _check("exact.sturm_cauchy", not sturm_failures, {"failures": sturm_failures}),
    ]


# ==================== ACEPTACIÓN ====================

def example_graph_check() -> ClaimResult:
    G = graph_from_adjacency(EXAMPLE_ADJACENCY)
    G0 = delete_loops(G)
    tau, tau0 = tree_count(G), tree_count(G0)
    ok = laplacian(G) == EXAMPLE_LAPLACIAN and laplacian(G0) == EXAMPLE_LAPLACIAN and tau == tau0 == 10
    return _check("example.tree_count", ok, {"tau": tau, "tau_without_loops": tau0}, 10)


def locus_check() -> ClaimResult:
    sizes = {N: supersingular_locus(N).size for N in LOCUS_SIZES}
    return _check("locus.sizes", sizes == LOCUS_SIZES, {str(k): v for k, v in sizes.items()})


def velu_cross_check(N: int) -> ClaimResult:
    locus = supersingular_locus(N)
    modpoly = brandt_matrix(N, 2, "modpoly", locus=locus).matrix
    velu = brandt_via_velu2(N, locus).matrix
    return _check(f"brandt.velu2.{N}", modpoly == velu, {"modpoly": modpoly, "velu2": velu})


def row_sum_check(N: int, p_max: int, data_dir: Optional[str], workers: Optional[int]) -> ClaimResult:
    locus = supersingular_locus(N)

    def row_sums(p: int):
        B = brandt_matrix(N, p, "modpoly", data_dir, locus)
        return p, list(B.row_sums()), validate_brandt(B).claim("brandt.even_diagonal").status.value

    rows = run_ordered(row_sums, primes_up_to(p_max, exclude=(N,)), workers)
    bad = [p for p, sums, _ in rows if any(s != p + 1 for s in sums)]
    parity = {str(p): status for p, _, status in rows}
    return _check(f"brandt.row_sums.{N}", not bad, {"failures": bad, "parity": parity}, f"p+1 para p <= {p_max}")


def table_check(N: int, data_dir: Optional[str], workers: Optional[int]) -> ClaimResult:
    expected = TABLE_MU[N]
    report = table_report(N, sorted(expected), data_dir=data_dir, workers=workers)
    computed = {str(r.p): r.mu for r in report.rows}
    divisibility = [r.p for r in report.rows if r.divisible is False]
    ok = computed == {str(p): v for p, v in expected.items()} and not divisibility
    return _check(f"table.mu.{N}", ok, computed, {str(p): v for p, v in expected.items()})


def parity_finding_check() -> ClaimResult:
    """(13, 2): b_11 = 3 debe quedar registrado como hallazgo."""
    B = brandt_matrix(13, 2, "modpoly")
    parity = validate_brandt(B).claim("brandt.even_diagonal")
    honest = parity.status == ClaimStatus.FINDING and B.diagonal() == (3,)
    return _check("brandt.parity_finding.13", honest, parity.computed, {"diagonal": [3]})


def run_selftest(
    seed: Optional[int] = None,
    corpus_size: Optional[int] = None,
    p_max: int = 29,
    data_dir: Optional[str] = None,
    workers: Optional[int] = None,
) -> SelftestReport:
    """
    Corre el corpus de propiedades y la matriz de aceptación.

    Args:
        seed: Semilla; por defecto settings.SELFTEST_SEED
        corpus_size: Tamaño del corpus; por defecto settings.SELFTEST_CORPUS_SIZE
        p_max: Cota de primos para el barrido de sumas de fila
        data_dir: Directorio de polinomios modulares
        workers: Hilos para el trabajo por (N, p)

    Returns:
        SelftestReport
    """
    seed = settings.SELFTEST_SEED if seed is None else seed
    corpus_size = settings.SELFTEST_CORPUS_SIZE if corpus_size is None else corpus_size
    rng = np.random.default_rng(seed)
    corpus = [random_connected_adjacency(rng) for _ in range(corpus_size)]

    report = SelftestReport(seed=seed, corpus_size=corpus_size)
    report.checks.extend(graph_corpus_checks(corpus))
    report.checks.extend(exact_core_checks(rng, corpus_size))
    report.checks.append(_guarded("example.tree_count", example_graph_check))
    report.checks.append(_guarded("locus.sizes", locus_check))
    for N in LOCUS_SIZES:
        report.checks.append(_guarded(f"brandt.velu2.{N}", lambda N=N: velu_cross_check(N)))
    report.checks.append(_guarded("brandt.parity_finding.13", parity_finding_check))
    for N in TABLE_MU:
        report.checks.append(_guarded(f"brandt.row_sums.{N}", lambda N=N: row_sum_check(N, p_max, data_dir, workers)))
        report.checks.append(_guarded(f"table.mu.{N}", lambda N=N: table_check(N, data_dir, workers)))

    report.acceptance.extend(
        run_ordered(lambda pair: verify_theorems(pair[0], pair[1], data_dir=data_dir), ACCEPTANCE_PAIRS, workers)
    )
    for r in report.acceptance:
        mu_value = r.claim("mu.divisibility").computed["mu"]
        logger.info(f"N={r.N} p={r.p}: μ = {mu_value}")

    if report.passed:
        logger.info(f"✅ Selftest completo (semilla {seed}, {corpus_size} casos)")
    else:
        failed = [c.id for c in report.checks if c.status == ClaimStatus.FAIL]
        logger.error(f"❌ Selftest con fallos: {failed}")
    return report
