"""
Servicio de grafos: biyección matriz de adyacencia <-> multigrafo, laplaciano,
característica de Euler, complejidad (ley de Kirchhoff) y banderas de estructura.
"""
import logging
from typing import List, Sequence

import networkx as nx

from core.exceptions import (
    AsymmetricMatrix,
    DisconnectedGraph,
    InternalInconsistency,
    NegativeEntry,
    OddDiagonal,
)
from core.matrices import IntMatrix, as_square, charpoly_int, det_int, minor
from models.graph import AdjacencyMatrix, MultiGraph, OrientedEdge, StructureFlags

logger = logging.getLogger(__name__)


# ==================== VALIDACIÓN ====================

def validate_adjacency(A: Sequence[Sequence[int]]) -> IntMatrix:
    """
    Comprueba las dos condiciones que caracterizan matrices de adyacencia.

    Raises:
        NegativeEntry: alguna entrada < 0
        AsymmetricMatrix: a_ij != a_ji
        OddDiagonal: a_ii impar
    """
    A = as_square(A)
    n = len(A)
    for i in range(n):
        for j in range(n):
            if A[i][j] < 0:
                raise NegativeEntry(
                    f"Entrada negativa a[{i}][{j}] = {A[i][j]}",
                    details={"row": i, "column": j, "value": A[i][j]},
                )
            if A[i][j] != A[j][i]:
                raise AsymmetricMatrix(
                    f"a[{i}][{j}] = {A[i][j]} != a[{j}][{i}] = {A[j][i]}",
                    details={"row": i, "column": j},
                )
    odd = [i for i in range(n) if A[i][i] % 2]
    if odd:
        raise OddDiagonal(
            f"Diagonal impar en los vértices {odd}",
            details={"diagonal": [A[i][i] for i in range(n)], "odd_indices": odd},
        )
    return A


# ==================== CONSTRUCCIÓN ====================

def graph_from_adjacency(A: Sequence[Sequence[int]]) -> MultiGraph:
    """
    Único grafo cuya matriz de adyacencia es A.

    Para x < y se crean A_xy aristas geométricas x - y; en x se crean A_xx/2
    lazos. Las aristas se numeran en orden de índices para que la salida sea
    reproducible.
    """
    A = validate_adjacency(A)
    n = len(A)
    edges: List[OrientedEdge] = []
    for x in range(n):
        for y in range(x, n):
            count = A[x][y] if x != y else A[x][x] // 2
            for _ in range(count):
                k = len(edges)
                edges.append(OrientedEdge(k, x, y, k + 1))
                edges.append(OrientedEdge(k + 1, y, x, k))
    return MultiGraph(n, tuple(edges))


def adjacency_of(G: MultiGraph) -> AdjacencyMatrix:
    """A_xy = #aristas orientadas x -> y (un lazo aporta 2 a A_xx)."""
    n = G.vertex_count
    rows = [[0] * n for _ in range(n)]
    for e in G.edges:
        rows[e.tail][e.head] += 1
    return AdjacencyMatrix(tuple(tuple(r) for r in rows))


def delete_loops(G: MultiGraph) -> MultiGraph:
    A = adjacency_of(G).matrix
    n = len(A)
    stripped = tuple(tuple(0 if i == j else A[i][j] for j in range(n)) for i in range(n))
    return graph_from_adjacency(stripped)


# ==================== INVARIANTES ====================

def euler_characteristic(G: MultiGraph) -> int:
    """χ(G) = |V| - |GE|"""
    return G.vertex_count - G.geometric_edge_count


def laplacian(G: MultiGraph) -> IntMatrix:
    """Δ = I + Q - A; los lazos no contribuyen."""
    A = adjacency_of(G).matrix
    return laplacian_of_matrix(A)


def laplacian_of_matrix(A: Sequence[Sequence[int]]) -> IntMatrix:
    """diag(suma de fila) - A para cualquier matriz simétrica."""
    A = as_square(A)
    n = len(A)
    return tuple(
        tuple((sum(A[i]) if i == j else 0) - A[i][j] for j in range(n))
        for i in range(n)
    )


def kirchhoff_complexity(L: Sequence[Sequence[int]]) -> int:
    """
    Complejidad a partir de un laplaciano por dos rutas independientes.

    (a) |coeficiente lineal de charpoly(L)| / m
    (b) determinante del laplaciano reducido (fila/columna 0 eliminada)

    Raises:
        InternalInconsistency: si las rutas no coinciden
    """
    L = as_square(L)
    m = len(L)
    if m == 0:
        raise InternalInconsistency("Laplaciano vacío")
    linear = abs(charpoly_int(L).coefficient(1))
    if linear % m:
        raise InternalInconsistency(
            f"El coeficiente lineal {linear} no es divisible por m = {m}",
            details={"linear_coefficient": linear, "m": m},
        )
    via_charpoly = linear // m
    via_minor = det_int(minor(L, 0))
    if via_charpoly != via_minor:
        raise InternalInconsistency(
            "Las dos rutas de Kirchhoff no coinciden",
            details={"charpoly_route": via_charpoly, "reduced_laplacian_route": via_minor},
        )
    return via_minor


def tree_count(G: MultiGraph) -> int:
    """τ(G), número de árboles generadores; requiere G conexo."""
    if not structure_flags(G).connected:
        raise DisconnectedGraph("tree_count requiere un grafo conexo", details={"vertices": G.vertex_count})
    tau = kirchhoff_complexity(laplacian(G))
    logger.debug(f"τ(G) = {tau} para un grafo con {G.vertex_count} vértices")
    return tau


# ==================== ESTRUCTURA ====================

def to_networkx(G: MultiGraph) -> nx.MultiGraph:
    """Realización geométrica: una arista networkx por arista geométrica."""
    graph = nx.MultiGraph()
    graph.add_nodes_from(G.vertices)
    for e in G.edges:
        if e.index < e.partner:
            graph.add_edge(e.tail, e.head)
    return graph


def structure_flags(G: MultiGraph) -> StructureFlags:
    """(conexo, bipartito, grado regular o None)."""
    if G.vertex_count == 0:
        return StructureFlags(False, False, None)
    graph = to_networkx(G)
    connected = nx.is_connected(graph)
    has_loop = any(e.is_loop for e in G.edges)
    bipartite = (not has_loop) and nx.is_bipartite(graph)
    degrees = set(G.degrees())
    regular = degrees.pop() if len(degrees) == 1 else None
    return StructureFlags(connected, bipartite, regular)
