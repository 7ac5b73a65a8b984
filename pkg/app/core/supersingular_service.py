"""
Lugar supersingular en característica N vía el polinomio de Hasse en la
forma de Legendre y^2 = x(x-1)(x-λ).
"""
import logging
from functools import lru_cache
from math import comb
from typing import List

from sympy.ntheory import isprime

from core.exceptions import (
    CompositeModulus,
    EvenCharacteristic,
    MassFormulaViolation,
    SingularLambda,
    UsageError,
    WeightNotOne,
)
from core.finite_fields import FieldPolynomial, field_poly, make_field, poly_roots
from models.arithmetic import SupersingularLocus
from models.fields import FieldElement

logger = logging.getLogger(__name__)


def hasse_polynomial(N: int) -> FieldPolynomial:
    """
    H_N(λ) = Σ_{i=0}^{m} C(m,i)^2 λ^i con m = (N-1)/2, sobre F_N.

    Raises:
        EvenCharacteristic: N = 2
        CompositeModulus: N no primo
    """
    if N == 2:
        raise EvenCharacteristic("La forma de Legendre requiere característica impar", details={"N": N})
    if not isprime(N):
        raise CompositeModulus(f"{N} no es primo", details={"N": N})
    m = (N - 1) // 2
    return field_poly(make_field(N, 1), [comb(m, i) ** 2 for i in range(m + 1)])


def legendre_to_j(lam: FieldElement) -> FieldElement:
    """j = 256 (λ^2 - λ + 1)^3 / (λ^2 (λ - 1)^2)"""
    den = lam * lam * (lam - 1) * (lam - 1)
    if den.is_zero():
        raise SingularLambda(f"λ = {lam} da una curva singular", details={"lambda": list(lam.coordinates)})
    num = (lam * lam - lam + 1) ** 3 * 256
    return num / den


def _weight(j: FieldElement, N: int) -> int:
    """|Aut(E)|/2: 3 para j = 0, 2 para j = 1728, 1 en otro caso (N > 3)."""
    if j.is_zero():
        return 3
    if j == j.field.element(1728):
        return 2
    return 1


@lru_cache(maxsize=None)
def supersingular_locus(N: int) -> SupersingularLocus:
    """
    j-invariantes supersingulares en F_{N^2}, ordenados y sin repetición.

    Cuando 12 | N-1 se exige |locus| = (N-1)/12 y j ∉ {0, 1728}.

    Args:
        N: Primo >= 5

    Returns:
        SupersingularLocus
    """
    if N < 5:
        raise UsageError(f"El lugar supersingular requiere N >= 5, se recibió {N}", details={"N": N})
    H = hasse_polynomial(N)
    F2 = make_field(N, 2)
    lifted = [F2.element(c.a) for c in H]
    found = {}
    for lam, _ in poly_roots(lifted, F2):
        j = legendre_to_j(lam)
        found[j.sort_key] = j
    j_invariants = tuple(found[key] for key in sorted(found))
    weights = tuple(_weight(j, N) for j in j_invariants)
    locus = SupersingularLocus(N, F2, j_invariants, weights)

    if (N - 1) % 12 == 0:
        n = (N - 1) // 12
        if locus.size != n:
            raise MassFormulaViolation(
                f"Se encontraron {locus.size} j-invariantes, se esperaban {n}",
                details={"N": N, "found": locus.size, "expected": n},
            )
        special = [list(j.coordinates) for j, w in zip(j_invariants, weights) if w != 1]
        if special:
            raise WeightNotOne(
                "j = 0 o j = 1728 aparece con 12 | N-1",
                details={"N": N, "j_invariants": special},
            )
    logger.info(f"Lugar supersingular N={N}: {locus.size} j-invariantes")
    return locus


def lambda_preimages(j: FieldElement) -> List[FieldElement]:
    """Parámetros λ de Legendre con legendre_to_j(λ) = j."""
    F = j.field
    out = []
    for lam in F.elements():
        if lam.is_zero() or lam == F.one:
            continue
        if legendre_to_j(lam) == j:
            out.append(lam)
    return out
