"""
Cuerpos primos y extensiones cuadráticas; polinomios con coeficientes en ellos.

Un polinomio sobre un cuerpo es una tupla de FieldElement de grado menor a
mayor, sin ceros finales.
"""
import logging
from functools import lru_cache
from typing import List, Sequence, Tuple

from sympy.ntheory import isprime

from core.exceptions import CompositeModulus, UsageError, ZeroPolynomial
from models.fields import Field, FieldElement

logger = logging.getLogger(__name__)

FieldPolynomial = Tuple[FieldElement, ...]


def least_nonresidue(N: int) -> int:
    """Menor entero positivo que no es cuadrado mod N (barrido exhaustivo)."""
    squares = {x * x % N for x in range(1, N)}
    for d in range(2, N):
        if d not in squares:
            return d
    raise CompositeModulus(f"No hay no-residuos módulo {N}")


@lru_cache(maxsize=None)
def make_field(N: int, degree: int = 1) -> Field:
    """
    Construye F_N o F_{N^2}.

    Args:
        N: Característica (debe ser primo)
        degree: 1 ó 2

    Returns:
        Field con el no-residuo mínimo como g^2 cuando degree == 2
    """
    if degree not in (1, 2):
        raise UsageError(f"Grado de cuerpo no soportado: {degree}", details={"degree": degree})
    if not isprime(N):
        raise CompositeModulus(f"{N} no es primo", details={"N": N})
    if degree == 1:
        return Field(N, 1, 0)
    if N == 2:
        # x^2 + x + 1 no es de la forma g^2 - d; característica 2 queda fuera
        raise UsageError("F_4 no se representa como F_2[g]/(g^2 - d)", details={"N": N})
    d = least_nonresidue(N)
    logger.debug(f"F_{N}^2 construido con g^2 = {d}")
    return Field(N, 2, d)


# ==================== POLINOMIOS SOBRE UN CUERPO ====================

def field_poly(F: Field, coeffs: Sequence) -> FieldPolynomial:
    """Normaliza coeficientes (enteros o elementos) a un polinomio canónico sobre F."""
    out = [c if isinstance(c, FieldElement) else F.element(c) for c in coeffs]
    while out and out[-1].is_zero():
        out.pop()
    return tuple(out)


def poly_eval(f: FieldPolynomial, x: FieldElement) -> FieldElement:
    acc = x.field.zero
    for c in reversed(f):
        acc = acc * x + c
    return acc


def deflate(f: FieldPolynomial, r: FieldElement) -> Tuple[FieldPolynomial, FieldElement]:
    """División sintética por (x - r): devuelve (cociente, resto)."""
    if not f:
        return (), r.field.zero
    n = len(f) - 1
    quotient: List[FieldElement] = [r.field.zero] * n
    acc = f[n]
    for k in range(n - 1, -1, -1):
        quotient[k] = acc
        acc = f[k] + acc * r
    return tuple(quotient), acc


def root_multiplicity(f: FieldPolynomial, r: FieldElement) -> int:
    """Multiplicidad de r como raíz de f por deflación repetida."""
    if not f:
        raise ZeroPolynomial("El polinomio cero no tiene multiplicidades finitas")
    m = 0
    while len(f) > 1:
        q, rem = deflate(f, r)
        if not rem.is_zero():
            break
        f = q
        m += 1
    return m


def poly_roots(f: Sequence, F: Field) -> List[Tuple[FieldElement, int]]:
    """
    Raíces de f en F con multiplicidad, por evaluación exhaustiva.

    Args:
        f: Coeficientes de grado menor a mayor (enteros o FieldElement)
        F: Cuerpo donde se buscan las raíces

    Returns:
        Lista de (raíz, multiplicidad) en orden canónico
    """
    f = field_poly(F, f)
    if not f:
        raise ZeroPolynomial("poly_roots requiere un polinomio no nulo")
    roots = []
    remaining = f
    for x in F.elements():
        if len(remaining) <= 1:
            break
        m = 0
        while len(remaining) > 1:
            q, rem = deflate(remaining, x)
            if not rem.is_zero():
                break
            remaining = q
            m += 1
        if m:
            roots.append((x, m))
    return roots


def poly_from_roots(F: Field, roots: Sequence[Tuple[FieldElement, int]]) -> FieldPolynomial:
    """Producto de (x - r)^m."""
    out: FieldPolynomial = (F.one,)
    for r, m in roots:
        for _ in range(m):
            shifted = (F.zero,) + out
            scaled = tuple(c * (-r) for c in out) + (F.zero,)
            out = field_poly(F, [a + b for a, b in zip(shifted, scaled)])
    return out


def poly_divides(g: FieldPolynomial, f: FieldPolynomial) -> bool:
    """True si g divide a f exactamente sobre el cuerpo."""
    if not g:
        return not f
    f = list(f)
    lead_inv = g[-1].inverse()
    while f and len(f) >= len(g):
        c = f[-1] * lead_inv
        shift = len(f) - len(g)
        for k, gk in enumerate(g):
            f[shift + k] = f[shift + k] - c * gk
        while f and f[-1].is_zero():
            f.pop()
    return not f
