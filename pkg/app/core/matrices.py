"""
Álgebra lineal exacta sobre Z.

Las matrices se pasan como secuencias de filas de enteros. El determinante
usa Bareiss y el polinomio característico Berkowitz (DomainMatrix de sympy);
``method="interpolation"`` es la ruta independiente por evaluación en
dim+1 enteros e interpolación exacta.
"""
import logging
from typing import List, Sequence, Tuple

from sympy.polys.domains import ZZ
from sympy.polys.matrices import DomainMatrix

from core.exceptions import NonSquare, UsageError
from core.polynomials import interpolate_int
from models.polynomials import IntPolynomial

logger = logging.getLogger(__name__)

IntMatrix = Tuple[Tuple[int, ...], ...]


def as_square(M: Sequence[Sequence[int]]) -> IntMatrix:
    """Copia inmutable de M; NonSquare si no es cuadrada."""
    rows = tuple(tuple(int(x) for x in row) for row in M)
    n = len(rows)
    if any(len(row) != n for row in rows):
        raise NonSquare(
            "La matriz no es cuadrada",
            details={"rows": n, "row_lengths": [len(r) for r in rows]},
        )
    return rows


def _domain(M: IntMatrix) -> DomainMatrix:
    n = len(M)
    return DomainMatrix([[ZZ(x) for x in row] for row in M], (n, n), ZZ)


def identity(n: int) -> IntMatrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def mat_add(A: IntMatrix, B: IntMatrix, scale: int = 1) -> IntMatrix:
    """A + scale*B"""
    return tuple(tuple(a + scale * b for a, b in zip(ra, rb)) for ra, rb in zip(A, B))


def minor(M: IntMatrix, k: int) -> IntMatrix:
    """M sin la fila y columna k."""
    return tuple(
        tuple(x for j, x in enumerate(row) if j != k)
        for i, row in enumerate(M) if i != k
    )


def trace(M: IntMatrix) -> int:
    return sum(M[i][i] for i in range(len(M)))


def permute(M: IntMatrix, order: Sequence[int]) -> IntMatrix:
    """Permutación simultánea de filas y columnas."""
    return tuple(tuple(M[i][j] for j in order) for i in order)


# ==================== DETERMINANTES ====================

def det_int(M: Sequence[Sequence[int]]) -> int:
    """Determinante exacto (Bareiss, sin fracciones)."""
    M = as_square(M)
    if not M:
        return 1
    return int(_domain(M).det())


def charpoly_int(M: Sequence[Sequence[int]], method: str = "berkowitz") -> IntPolynomial:
    """
    det(xI - M) como IntPolynomial mónico.

    Args:
        M: Matriz cuadrada entera
        method: "berkowitz" o "interpolation"; ambos deben coincidir bit a bit
    """
    M = as_square(M)
    n = len(M)
    if n == 0:
        return IntPolynomial.constant(1)
    if method == "berkowitz":
        return IntPolynomial.from_dup([int(c) for c in _domain(M).charpoly()])
    if method == "interpolation":
        points = list(range(n + 1))
        I = identity(n)
        values = [det_int(mat_add(tuple(tuple(x * e for e in row) for row in I), M, -1)) for x in points]
        return interpolate_int(points, values)
    raise UsageError(f"Método de polinomio característico desconocido: {method}")


def det_three_term(A: Sequence[Sequence[int]], Q: Sequence[Sequence[int]]) -> IntPolynomial:
    """
    det[I - A t + Q t^2] evaluando en t = 0..2m e interpolando.

    El grado es a lo sumo 2m, así que 2m+1 nodos determinan el polinomio.
    """
    A = as_square(A)
    Q = as_square(Q)
    m = len(A)
    if m == 0:
        return IntPolynomial.constant(1)
    I = identity(m)
    points = list(range(2 * m + 1))
    values: List[int] = []
    for t in points:
        values.append(det_int(mat_add(mat_add(I, A, -t), Q, t * t)))
    return interpolate_int(points, values)


def det_one_minus_tT(T: Sequence[Sequence[int]]) -> IntPolynomial:
    """
    det(I - tT) leyendo charpoly(T) al revés.

    Si charpoly(T) = sum c_k x^k con c_n = 1, entonces det(I - tT) = sum c_{n-k} t^k.
    """
    T = as_square(T)
    n = len(T)
    cp = charpoly_int(T)
    return IntPolynomial(tuple(cp.coefficient(n - k) for k in range(n + 1)))
