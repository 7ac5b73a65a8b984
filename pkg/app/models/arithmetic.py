"""
Datos aritméticos: lugar supersingular, polinomios modulares y matrices de Brandt.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Optional, Tuple

from models.fields import Field, FieldElement

IntMatrix = Tuple[Tuple[int, ...], ...]


@dataclass(frozen=True)
class SupersingularLocus:
    """j-invariantes supersingulares sobre F_{N^2} en orden canónico (a, b)."""
    N: int
    field: Field
    j_invariants: Tuple[FieldElement, ...]
    weights: Tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.j_invariants)

    @property
    def mass(self) -> Fraction:
        """Σ 1/w_i"""
        return sum((Fraction(1, w) for w in self.weights), Fraction(0))

    def index_of(self, j: FieldElement) -> Optional[int]:
        try:
            return self.j_invariants.index(j)
        except ValueError:
            return None


@dataclass(frozen=True)
class ModularPolynomial:
    """
    Φ_p(X, Y) = Σ c_{a,b} X^a Y^b con c_{a,b} = c_{b,a}.

    ``terms`` guarda solo a >= b; ``modulus`` es None para coeficientes en Z.
    """
    p: int
    terms: Tuple[Tuple[int, int, int], ...]
    modulus: Optional[int] = None

    @property
    def degree(self) -> int:
        return self.p + 1

    def coefficient_map(self) -> Dict[Tuple[int, int], int]:
        table: Dict[Tuple[int, int], int] = {}
        for a, b, c in self.terms:
            table[(a, b)] = c
            table[(b, a)] = c
        return table

    def coefficient(self, a: int, b: int) -> int:
        return self.coefficient_map().get((a, b), 0)

    def reduce(self, N: int) -> "ModularPolynomial":
        if self.modulus is not None:
            if self.modulus != N:
                raise ValueError(f"Φ_{self.p} está reducido mod {self.modulus}, no mod {N}")
            return self
        terms = tuple((a, b, c % N) for a, b, c in self.terms if c % N)
        return ModularPolynomial(self.p, terms, N)


@dataclass(frozen=True)
class BrandtMatrix:
    N: int
    p: int
    j_invariants: Tuple[FieldElement, ...]
    matrix: IntMatrix
    method: str = "modpoly"

    @property
    def size(self) -> int:
        return len(self.matrix)

    def diagonal(self) -> Tuple[int, ...]:
        return tuple(self.matrix[i][i] for i in range(self.size))

    def row_sums(self) -> Tuple[int, ...]:
        return tuple(sum(row) for row in self.matrix)
