"""
Brandt Service - Interfaz común para construir matrices de Brandt B(p).

b_ij es el número de subgrupos C de orden p en E_i con E_i/C ≅ E_j. Cada
proveedor calcula esos conteos por una ruta distinta; el servicio valida las
precondiciones y las sumas de fila.
"""
import logging
from abc import ABC, abstractmethod
from typing import List, Optional

from sympy.ntheory import isprime

from core.exceptions import (
    AsymmetricMatrix,
    CompositeModulus,
    InternalInconsistency,
    NotCongruentOneMod12,
    ParityObstruction,
    RowSumViolation,
    UsageError,
)
from core.graph_service import graph_from_adjacency, structure_flags
from core.supersingular_service import supersingular_locus
from models.arithmetic import BrandtMatrix, IntMatrix, SupersingularLocus
from models.graph import MultiGraph
from schemas.reports import ClaimResult, ClaimStatus, VerificationReport

logger = logging.getLogger(__name__)


class BrandtProvider(ABC):
    """
    Interfaz abstracta para rutas de cálculo de B(p).
    Cada proveedor (modpoly, velu2) debe implementar ``matrix``.
    """

    name: str = ""

    @abstractmethod
    def matrix(self, locus: SupersingularLocus, p: int) -> IntMatrix:
        """
        Conteos b_ij en el orden del lugar supersingular.

        Args:
            locus: j-invariantes supersingulares ordenados
            p: Primo de la isogenia

        Returns:
            Matriz n x n de enteros no negativos
        """
        pass


def get_brandt_provider(method: str, data_dir: Optional[str] = None) -> BrandtProvider:
    """
    Selecciona el proveedor según el método.

    Args:
        method: "modpoly" o "velu2"
        data_dir: Directorio de polinomios modulares (solo modpoly)
    """
    if method == "modpoly":
        from core.brandt_providers.modpoly import ModularPolynomialProvider
        return ModularPolynomialProvider(data_dir=data_dir)
    if method == "velu2":
        from core.brandt_providers.velu2 import Velu2Provider
        return Velu2Provider()
    raise UsageError(f"Método de Brandt no soportado: {method}", details={"method": method})


# ==================== CONSTRUCCIÓN ====================

def check_level(N: int, p: int) -> None:
    """Precondiciones comunes a toda la capa de correspondencia."""
    if not isprime(N):
        raise CompositeModulus(f"N = {N} no es primo", details={"N": N})
    if not isprime(p):
        raise CompositeModulus(f"p = {p} no es primo", details={"p": p})
    if p == N:
        raise UsageError("p debe ser distinto de N", details={"N": N, "p": p})
    if (N - 1) % 12:
        raise NotCongruentOneMod12(f"12 no divide a N - 1 = {N - 1}", details={"N": N})


def brandt_matrix(
    N: int,
    p: int,
    method: str = "modpoly",
    data_dir: Optional[str] = None,
    locus: Optional[SupersingularLocus] = None,
) -> BrandtMatrix:
    """
    B(p) sobre el lugar supersingular de nivel N.

    Raises:
        NotCongruentOneMod12: 12 no divide a N-1
        MissingModularPolynomial: sin datos para Φ_p (modpoly)
        RowSumViolation: alguna fila no suma p+1
    """
    check_level(N, p)
    if locus is None:
        locus = supersingular_locus(N)
    provider = get_brandt_provider(method, data_dir)
    rows = provider.matrix(locus, p)
    bad = [i for i, row in enumerate(rows) if sum(row) != p + 1]
    if bad:
        raise RowSumViolation(
            f"Filas {bad} de B({p}) no suman {p + 1}",
            details={"N": N, "p": p, "rows": bad, "row_sums": [sum(r) for r in rows]},
        )
    B = BrandtMatrix(N, p, locus.j_invariants, rows, method)
    logger.info(f"B({p}) para N={N} construida con {method}: {B.size}x{B.size}")
    return B


def brandt_via_velu2(N: int, locus: Optional[SupersingularLocus] = None) -> BrandtMatrix:
    """B(2) por la ruta independiente de Vélu."""
    return brandt_matrix(N, 2, method="velu2", locus=locus)


# ==================== VALIDACIÓN ====================

def validate_brandt(B: BrandtMatrix) -> VerificationReport:
    """
    Simetría, paridad de la diagonal y sumas de fila, como datos del reporte.

    Nunca lanza excepción por una violación; los testigos van en ``computed``.
    La diagonal impar se marca FINDING: es un hallazgo, no un fallo del cálculo.
    """
    n = B.size
    asymmetric = [[i, j] for i in range(n) for j in range(i + 1, n) if B.matrix[i][j] != B.matrix[j][i]]
    odd = [i for i, d in enumerate(B.diagonal()) if d % 2]
    row_sums = list(B.row_sums())
    bad_rows = [i for i, s in enumerate(row_sums) if s != B.p + 1]

    claims = [
        ClaimResult(
            id="brandt.symmetric",
            status=ClaimStatus.FAIL if asymmetric else ClaimStatus.PASS,
            computed={"asymmetric_pairs": asymmetric},
            expected="b_ij = b_ji",
            note="simetría",
        ),
        ClaimResult(
            id="brandt.even_diagonal",
            status=ClaimStatus.FINDING if odd else ClaimStatus.PASS,
            computed={"diagonal": list(B.diagonal()), "odd_indices": odd},
            expected="b_ii par",
            note="paridad de la diagonal, verificada empíricamente",
        ),
        ClaimResult(
            id="brandt.row_sums",
            status=ClaimStatus.FAIL if bad_rows else ClaimStatus.PASS,
            computed={"row_sums": row_sums},
            expected=B.p + 1,
            note="sumas de fila",
        ),
    ]
    if odd:
        logger.warning(f"Diagonal impar en B({B.p}) para N={B.N}: índices {odd}")
    return VerificationReport(N=B.N, p=B.p, claims=claims)


def brandt_graph(B: BrandtMatrix) -> MultiGraph:
    """
    G_N(p): el grafo cuya matriz de adyacencia es B(p).

    El resultado es conexo, no bipartito y (p+1)-regular.

    Raises:
        ParityObstruction: diagonal impar, no hay realización geométrica
        InternalInconsistency: el grafo construido no tiene esa estructura
    """
    report = validate_brandt(B)
    if report.claim("brandt.symmetric").status == ClaimStatus.FAIL:
        raise AsymmetricMatrix(f"B({B.p}) no es simétrica", details=report.claim("brandt.symmetric").computed)
    if report.claim("brandt.row_sums").status == ClaimStatus.FAIL:
        raise RowSumViolation(f"B({B.p}) tiene filas que no suman {B.p + 1}", details=report.claim("brandt.row_sums").computed)
    parity = report.claim("brandt.even_diagonal")
    if parity.status != ClaimStatus.PASS:
        raise ParityObstruction(
            f"B({B.p}) para N={B.N} tiene diagonal impar; G_N(p) no es realizable",
            details={"N": B.N, "p": B.p, **parity.computed},
        )
    G = graph_from_adjacency(B.matrix)
    flags = structure_flags(G)
    if (flags.connected, flags.bipartite, flags.regular) != (True, False, B.p + 1):
        raise InternalInconsistency(
            f"G_{B.N}({B.p}) no es conexo, no bipartito y {B.p + 1}-regular",
            details={
                "N": B.N,
                "p": B.p,
                "connected": flags.connected,
                "bipartite": flags.bipartite,
                "regular": flags.regular,
            },
        )
    return G


def brandt_graph_for(N: int, p: int, method: str = "modpoly", data_dir: Optional[str] = None) -> MultiGraph:
    return brandt_graph(brandt_matrix(N, p, method, data_dir))


def to_payload_rows(B: BrandtMatrix) -> List[List[int]]:
    return [list(row) for row in B.matrix]
