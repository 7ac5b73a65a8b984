"""
Funciones zeta de Ihara: fórmula del determinante de tres términos, oráculo de
Hashimoto, conteo directo de caminos cerrados y certificado de Ramanujan.
"""
import logging
from collections import defaultdict
from typing import Dict, List, Sequence, Tuple

from core.config import settings
from core.exceptions import (
    AsymmetricMatrix,
    BudgetExceeded,
    DisconnectedGraph,
    InternalInconsistency,
    NegativeEntry,
    NotRealizable,
    NotRegular,
    UsageError,
)
from core.graph_service import adjacency_of, euler_characteristic, structure_flags
from core.matrices import IntMatrix, as_square, charpoly_int, det_one_minus_tT, det_three_term, identity
from core.polynomials import ratfun_normalize, roots_in_window, symmetric_window
from models.graph import MultiGraph
from models.polynomials import IntPolynomial, RationalFunction
from models.zeta import IharaZeta, RamanujanVerdict

logger = logging.getLogger(__name__)

ONE_MINUS_T2 = IntPolynomial((1, 0, -1))


def _require_connected(G: MultiGraph, operation: str) -> None:
    if not structure_flags(G).connected:
        raise DisconnectedGraph(f"{operation} requiere un grafo conexo", details={"vertices": G.vertex_count})


def _assemble(det: IntPolynomial, chi: int) -> RationalFunction:
    if chi >= 0:
        return ratfun_normalize(ONE_MINUS_T2 ** chi, det)
    return ratfun_normalize(IntPolynomial.constant(1), det * ONE_MINUS_T2 ** (-chi))


# ==================== ZETA DE IHARA ====================

def ihara_zeta(G: MultiGraph) -> IharaZeta:
    """
    Zeta de Ihara por el determinante de tres términos.

    Args:
        G: Grafo conexo

    Returns:
        IharaZeta con Z(G;t) en forma canónica
    """
    _require_connected(G, "ihara_zeta")
    adjacency = adjacency_of(G)
    det = det_three_term(adjacency.matrix, adjacency.q_matrix)
    chi = euler_characteristic(G)
    Z = _assemble(det, chi)
    logger.debug(f"Z(G;t) = {Z}")
    return IharaZeta(Z, det, chi, geometric=True)


def formal_zeta(A: Sequence[Sequence[int]], k: int) -> IharaZeta:
    """
    Zeta formal de una matriz simétrica no negativa con filas que suman k.

    Usa Q = (k-1)I y χ = m(2-k)/2 sin exigir diagonal par; si la matriz es de
    adyacencia coincide con ihara_zeta.

    Raises:
        NotRealizable: si m(2-k) es impar (exponente no entero)
    """
    A = as_square(A)
    m = len(A)
    for i in range(m):
        if any(x < 0 for x in A[i]):
            raise NegativeEntry(f"Entrada negativa en la fila {i}", details={"row": i})
        if sum(A[i]) != k:
            raise NotRegular(f"La fila {i} suma {sum(A[i])}, no {k}", details={"row": i, "k": k})
        for j in range(m):
            if A[i][j] != A[j][i]:
                raise AsymmetricMatrix(f"a[{i}][{j}] != a[{j}][{i}]", details={"row": i, "column": j})
    if (m * (2 - k)) % 2:
        raise NotRealizable(
            f"El exponente m(2-k)/2 = {m * (2 - k)}/2 no es entero",
            details={"m": m, "k": k},
        )
    chi = m * (2 - k) // 2
    Q = tuple(tuple((k - 1) * e for e in row) for row in identity(m))
    det = det_three_term(A, Q)
    return IharaZeta(_assemble(det, chi), det, chi, geometric=False)


# ==================== ORÁCULOS ====================

def hashimoto_matrix(G: MultiGraph) -> IntMatrix:
    """T[e][f] = 1 si ∂1(e) = ∂0(f) y f != J(e)."""
    return tuple(
        tuple(1 if (e.head == f.tail and f.index != e.partner) else 0 for f in G.edges)
        for e in G.edges
    )


def zeta_via_hashimoto(G: MultiGraph) -> RationalFunction:
    """1 / det(I - tT) con T la matriz de aristas sin retroceso."""
    _require_connected(G, "zeta_via_hashimoto")
    T = hashimoto_matrix(G)
    return ratfun_normalize(IntPolynomial.constant(1), det_one_minus_tT(T))


def closed_path_counts(Z: RationalFunction, m_max: int) -> List[int]:
    """
    Coeficientes N_1..N_m_max de t Z'(t) / Z(t).

    Raises:
        InternalInconsistency: si algún coeficiente no es entero
    """
    num, den = Z.numerator, Z.denominator
    # t (num' den - num den') / (num den)
    top = IntPolynomial.monomial(1) * (num.derivative() * den - num * den.derivative())
    series = RationalFunction(top, num * den).series(m_max + 1)
    counts = []
    for m in range(1, m_max + 1):
        c = series[m]
        if c.denominator != 1:
            raise InternalInconsistency(f"N_{m} = {c} no es entero", details={"m": m})
        counts.append(int(c))
    return counts


def count_closed_paths(G: MultiGraph, m: int) -> int:
    """
    N_m contando caminos cerrados reducidos sin cola, arista por arista.

    Se cuentan caminos, no clases: cada punto de partida y cada orientación
    suman uno. Para cada arista inicial se lleva el número de caminos reducidos
    que terminan en cada arista, así que el costo es O(m·|E|²) y no exponencial.
    """
    if m < 1:
        raise UsageError(f"La longitud debe ser >= 1, se recibió {m}")
    if m > settings.PATH_ENUMERATION_MAX_LENGTH or len(G.edges) > settings.PATH_ENUMERATION_MAX_EDGES:
        raise BudgetExceeded(
            "Enumeración fuera de presupuesto",
            details={
                "m": m,
                "oriented_edges": len(G.edges),
                "max_length": settings.PATH_ENUMERATION_MAX_LENGTH,
                "max_edges": settings.PATH_ENUMERATION_MAX_EDGES,
            },
        )
    out = G.out_edge_map()
    total = 0
    for first in G.edges:
        # arista final -> caminos reducidos que salen por first
        ends: Dict[int, int] = {first.index: 1}
        for _ in range(m - 1):
            step: Dict[int, int] = defaultdict(int)
            for index, ways in ends.items():
                last = G.edges[index]
                for f in out[last.head]:
                    if f.index != last.partner:
                        step[f.index] += ways
            ends = step
        total += sum(
            ways
            for index, ways in ends.items()
            if G.edges[index].head == first.tail and first.index != G.edges[index].partner
        )
    return total


# ==================== RAMANUJAN ====================

def certify_spectrum(A: Sequence[Sequence[int]], k: int, bipartite: bool) -> Tuple[int, IntPolynomial]:
    """
    Autovalores de A fuera de [-2√(k-1), 2√(k-1)] tras quitar k (y -k si bipartito).

    Returns:
        (número fuera de la ventana con multiplicidad, polinomio restante)
    """
    remaining = charpoly_int(A).exact_div(IntPolynomial.linear_root(k))
    if bipartite:
        remaining = remaining.exact_div(IntPolynomial.linear_root(-k))
    if remaining.degree <= 0:
        return 0, remaining
    lo, hi = symmetric_window(k - 1)
    inside, total = roots_in_window(remaining, lo, hi)
    return total - inside, remaining


def ramanujan_certificate(G: MultiGraph) -> RamanujanVerdict:
    flags = structure_flags(G)
    if not flags.connected:
        raise DisconnectedGraph("ramanujan_certificate requiere un grafo conexo")
    if flags.regular is None or flags.regular < 2:
        raise NotRegular(
            "ramanujan_certificate requiere un grafo k-regular con k >= 2",
            details={"degrees": list(G.degrees())},
        )
    k = flags.regular
    outside, _ = certify_spectrum(adjacency_of(G).matrix, k, flags.bipartite)
    verdict = RamanujanVerdict(
        degree=k,
        is_regular=True,
        is_connected=True,
        is_bipartite=flags.bipartite,
        is_ramanujan=outside == 0,
        outside_count=outside,
    )
    logger.debug(f"Veredicto de Ramanujan: {verdict}")
    return verdict
