"""
Operaciones exactas sobre IntPolynomial: forma canónica de funciones racionales,
conteo de raíces reales por Sturm con extremos a + b*sqrt(d) e interpolación.
"""
import logging
from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple

from sympy import Poly, Symbol
from sympy.polys.domains import QQ, ZZ
from sympy.polys.euclidtools import dup_inner_gcd
from sympy.polys.polyfuncs import interpolate
from sympy.polys.rootisolation import dup_sturm
from sympy.polys.sqfreetools import dup_sqf_list, dup_sqf_part

from core.exceptions import (
    InternalInconsistency,
    InvalidInterval,
    ZeroDenominator,
    ZeroPolynomial,
)
from models.polynomials import IntPolynomial, QuadraticBound, RationalFunction

logger = logging.getLogger(__name__)

_x = Symbol("x")


# ==================== FUNCIONES RACIONALES ====================

def ratfun_normalize(num: IntPolynomial, den: IntPolynomial) -> RationalFunction:
    """
    Forma canónica de num/den.

    Se elimina el mcd sobre Z (incluido el contenido) y se fija el signo para
    que el denominador tenga coeficiente principal positivo.
    """
    if den.is_zero():
        raise ZeroDenominator("Denominador nulo", details={"numerator": list(num.coeffs)})
    if num.is_zero():
        return RationalFunction(IntPolynomial(), IntPolynomial.constant(1))
    _, cff, cfg = dup_inner_gcd(num.to_dup(), den.to_dup(), ZZ)
    num, den = IntPolynomial.from_dup(cff), IntPolynomial.from_dup(cfg)
    if den.leading < 0:
        num, den = -num, -den
    return RationalFunction(num, den)


def ratfun(num: Iterable[int], den: Iterable[int] = (1,)) -> RationalFunction:
    """Atajo: funciones racionales desde listas de coeficientes."""
    return ratfun_normalize(IntPolynomial(tuple(num)), IntPolynomial(tuple(den)))


def one_minus(c: int, degree: int = 1) -> IntPolynomial:
    """1 - c*t^degree"""
    return IntPolynomial((1,) + (0,) * (degree - 1) + (-c,))


# ==================== STURM ====================

def _fraction(c) -> Fraction:
    return Fraction(int(c.numerator), int(c.denominator))


def _eval_at_bound(dup, x: QuadraticBound) -> QuadraticBound:
    acc = QuadraticBound(Fraction(0), Fraction(0), x.d)
    for c in dup:
        acc = acc * x + _fraction(c)
    return acc


def _sign_variations(signs: Sequence[int]) -> int:
    nonzero = [s for s in signs if s != 0]
    return sum(1 for a, b in zip(nonzero, nonzero[1:]) if a != b)


def sturm_root_count(f: IntPolynomial, lo: QuadraticBound, hi: QuadraticBound) -> int:
    """
    Número de raíces reales distintas de f en [lo, hi].

    Args:
        f: Polinomio no nulo; la cadena de dup_sturm termina en mcd(f, f'), así
            que las raíces repetidas cuentan una sola vez
        lo: Extremo inferior exacto
        hi: Extremo superior exacto

    Returns:
        Conteo exacto, sin punto flotante
    """
    if f.is_zero():
        raise ZeroPolynomial("sturm_root_count requiere un polinomio no nulo")
    if lo > hi:
        raise InvalidInterval(f"Intervalo vacío [{lo}, {hi}]", details={"lo": str(lo), "hi": str(hi)})
    if f.degree <= 0:
        return 0
    f_qq = [QQ(int(c)) for c in f.to_dup()]
    chain = dup_sturm(f_qq, QQ)
    v_lo = _sign_variations([_eval_at_bound(g, lo).sign() for g in chain])
    v_hi = _sign_variations([_eval_at_bound(g, hi).sign() for g in chain])
    at_lo = 1 if _eval_at_bound(chain[0], lo).sign() == 0 else 0
    return v_lo - v_hi + at_lo


def squarefree_degree(f: IntPolynomial) -> int:
    return len(dup_sqf_part(f.to_dup(), ZZ)) - 1


def roots_in_window(f: IntPolynomial, lo: QuadraticBound, hi: QuadraticBound) -> Tuple[int, int]:
    """
    Raíces de f contadas con multiplicidad: (dentro de [lo, hi], total real o complejo).

    Usa la factorización libre de cuadrados para ponderar cada raíz distinta.
    """
    if f.is_zero():
        raise ZeroPolynomial("roots_in_window requiere un polinomio no nulo")
    _, factors = dup_sqf_list(f.to_dup(), ZZ)
    inside = 0
    for g, k in factors:
        inside += k * sturm_root_count(IntPolynomial.from_dup(g), lo, hi)
    return inside, f.degree


def symmetric_window(radicand: int) -> Tuple[QuadraticBound, QuadraticBound]:
    """[-2*sqrt(radicand), 2*sqrt(radicand)]"""
    return QuadraticBound.surd(-2, radicand), QuadraticBound.surd(2, radicand)


# ==================== INTERPOLACIÓN ====================

def interpolate_int(points: Sequence[int], values: Sequence[int]) -> IntPolynomial:
    """
    Polinomio entero que pasa por (points[i], values[i]).

    La interpolación es exacta sobre Q; un coeficiente no entero indica un
    error aguas arriba.
    """
    if len(set(points)) != len(points):
        raise InternalInconsistency("Nodos de interpolación repetidos")
    expr = interpolate(list(zip(points, values)), _x)
    coeffs: List = Poly(expr, _x, domain=QQ).all_coeffs()
    if any(c.q != 1 for c in coeffs):
        raise InternalInconsistency(
            "La interpolación produjo coeficientes no enteros",
            details={"values": [str(v) for v in values]},
        )
    return IntPolynomial.from_dup([int(c.p) for c in coeffs])
