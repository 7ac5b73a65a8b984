"""
B(p) por multiplicidades de raíces de Φ_p(j_i, Y) sobre F_{N^2}.
"""
import logging
from typing import Optional

from core.brandt_service import BrandtProvider
from core.finite_fields import root_multiplicity
from core.modular_polynomials import find_modular_polynomial, specialize
from models.arithmetic import IntMatrix, SupersingularLocus

logger = logging.getLogger(__name__)


class ModularPolynomialProvider(BrandtProvider):
    """b_ij = multiplicidad de j_j como raíz de Φ_p(j_i, Y)."""

    name = "modpoly"

    def __init__(self, data_dir: Optional[str] = None):
        self.data_dir = data_dir

    def matrix(self, locus: SupersingularLocus, p: int) -> IntMatrix:
        phi = find_modular_polynomial(p, locus.N, self.data_dir)
        rows = []
        for j_i in locus.j_invariants:
            f = specialize(phi, j_i)
            row = tuple(root_multiplicity(f, j_j) for j_j in locus.j_invariants)
            logger.debug(f"Φ_{p}({j_i}, Y): multiplicidades {row}")
            rows.append(row)
        return tuple(rows)
