"""
Funciones zeta de grafos y de curvas, y el veredicto de Ramanujan.
"""
from dataclasses import dataclass
from typing import Optional

from models.polynomials import IntPolynomial, RationalFunction


@dataclass(frozen=True)
class IharaZeta:
    """
    Z(G;t) = (1 - t^2)^χ / det[I - A t + Q t^2].

    ``geometric`` es False para la zeta formal de una matriz que no es
    matriz de adyacencia (diagonal impar).
    """
    function: RationalFunction
    determinant: IntPolynomial
    euler_characteristic: int
    geometric: bool = True

    def value_at_zero(self):
        return self.function.value_at(0)


@dataclass(frozen=True)
class RamanujanVerdict:
    degree: Optional[int]
    is_regular: bool
    is_connected: bool
    is_bipartite: bool
    is_ramanujan: bool
    outside_count: int


@dataclass(frozen=True)
class HasseWeilZeta:
    """W(X_0(N)/F_p; t) = P(t) / ((1 - t)(1 - p t))."""
    N: int
    p: int
    function: RationalFunction
    numerator: IntPolynomial  # P(t), grado 2(n-1), P(0) = 1
