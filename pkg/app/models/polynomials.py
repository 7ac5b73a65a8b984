"""
Polinomios enteros, funciones racionales y cotas cuadráticas a + b*sqrt(d).

Los coeficientes se guardan de grado menor a mayor; la aritmética delega en
las rutinas densas de sympy (que usan el orden inverso).
"""
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence, Tuple, Union

from sympy.polys.densearith import dup_add, dup_sub, dup_mul, dup_neg, dup_pow, dup_exquo
from sympy.polys.densetools import dup_diff
from sympy.polys.domains import ZZ
from sympy.polys.polyerrors import ExactQuotientFailed

from core.exceptions import ExactDivisionFailure


def _strip(coeffs: Sequence[int]) -> Tuple[int, ...]:
    coeffs = [int(c) for c in coeffs]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


@dataclass(frozen=True)
class IntPolynomial:
    """Polinomio en Z[t]; el polinomio cero es la tupla vacía."""
    coeffs: Tuple[int, ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _strip(self.coeffs))

    # ==================== CONSTRUCTORES ====================

    @classmethod
    def from_dup(cls, dup) -> "IntPolynomial":
        return cls(tuple(int(c) for c in reversed(dup)))

    @classmethod
    def constant(cls, c: int) -> "IntPolynomial":
        return cls((c,))

    @classmethod
    def monomial(cls, degree: int, c: int = 1) -> "IntPolynomial":
        return cls((0,) * degree + (c,))

    @classmethod
    def linear_root(cls, r: int) -> "IntPolynomial":
        """x - r"""
        return cls((-r, 1))

    def to_dup(self):
        return [ZZ(c) for c in reversed(self.coeffs)]

    # ==================== PROPIEDADES ====================

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def coefficient(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    # ==================== ARITMÉTICA ====================

    def _lift(self, other) -> "IntPolynomial":
        if isinstance(other, IntPolynomial):
            return other
        if isinstance(other, int):
            return IntPolynomial.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return IntPolynomial.from_dup(dup_add(self.to_dup(), other.to_dup(), ZZ))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return IntPolynomial.from_dup(dup_sub(self.to_dup(), other.to_dup(), ZZ))

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return IntPolynomial.from_dup(dup_neg(self.to_dup(), ZZ))

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return IntPolynomial.from_dup(dup_mul(self.to_dup(), other.to_dup(), ZZ))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        return IntPolynomial.from_dup(dup_pow(self.to_dup(), n, ZZ))

    def exact_div(self, other: "IntPolynomial") -> "IntPolynomial":
        """Cociente exacto en Z[t]; ExactDivisionFailure si queda resto."""
        try:
            return IntPolynomial.from_dup(dup_exquo(self.to_dup(), other.to_dup(), ZZ))
        except (ExactQuotientFailed, ZeroDivisionError):
            raise ExactDivisionFailure(
                f"{self} no es divisible exactamente por {other}",
                details={"dividend": list(self.coeffs), "divisor": list(other.coeffs)},
            )

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial.from_dup(dup_diff(self.to_dup(), 1, ZZ))

    def reversed(self, degree: int) -> "IntPolynomial":
        """t^degree * f(1/t)"""
        padded = list(self.coeffs) + [0] * (degree + 1 - len(self.coeffs))
        return IntPolynomial(tuple(reversed(padded)))

    def substitute_scaled(self, c: int) -> "IntPolynomial":
        """f(c*t)"""
        return IntPolynomial(tuple(a * c ** k for k, a in enumerate(self.coeffs)))

    def __call__(self, x: Union[int, Fraction]):
        result = 0
        for c in reversed(self.coeffs):
            result = result * x + c
        return result

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                terms.append(f"{c}")
            elif k == 1:
                terms.append(f"{c}*t")
            else:
                terms.append(f"{c}*t^{k}")
        return " + ".join(terms)


@dataclass(frozen=True)
class RationalFunction:
    """
    numerator / denominator en forma canónica.

    Se construye con ``ratfun_normalize``; con la forma canónica la igualdad
    exacta es igualdad estructural.
    """
    numerator: IntPolynomial
    denominator: IntPolynomial

    def __mul__(self, other: "RationalFunction") -> "RationalFunction":
        from core.polynomials import ratfun_normalize
        return ratfun_normalize(self.numerator * other.numerator, self.denominator * other.denominator)

    def __truediv__(self, other: "RationalFunction") -> "RationalFunction":
        from core.polynomials import ratfun_normalize
        return ratfun_normalize(self.numerator * other.denominator, self.denominator * other.numerator)

    def __pow__(self, n: int) -> "RationalFunction":
        from core.polynomials import ratfun_normalize
        if n >= 0:
            return ratfun_normalize(self.numerator ** n, self.denominator ** n)
        return ratfun_normalize(self.denominator ** -n, self.numerator ** -n)

    def scale_by(self, poly: IntPolynomial) -> "RationalFunction":
        from core.polynomials import ratfun_normalize
        return ratfun_normalize(self.numerator * poly, self.denominator)

    def value_at(self, x: Union[int, Fraction]) -> Fraction:
        den = self.denominator(x)
        if den == 0:
            raise ZeroDivisionError(f"Polo en t={x}")
        return Fraction(self.numerator(x), den)

    def series(self, terms: int):
        """Coeficientes de la serie de potencias en t = 0 (requiere den(0) != 0)."""
        den0 = self.denominator.coefficient(0)
        if den0 == 0:
            raise ZeroDivisionError("El denominador se anula en t=0")
        out = []
        for k in range(terms):
            acc = Fraction(self.numerator.coefficient(k))
            for i in range(1, k + 1):
                acc -= self.denominator.coefficient(i) * out[k - i]
            out.append(acc / den0)
        return out

    def __repr__(self) -> str:
        return f"({self.numerator}) / ({self.denominator})"


@dataclass(frozen=True)
class QuadraticBound:
    """
    Número a + b*sqrt(d) con a, b racionales y d >= 0 entero.

    El signo se decide exactamente comparando a^2 con b^2*d.
    """
    a: Fraction
    b: Fraction = Fraction(0)
    d: int = 0

    def __post_init__(self):
        if self.d < 0:
            raise ValueError("El radicando debe ser no negativo")
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))

    @classmethod
    def rational(cls, a) -> "QuadraticBound":
        return cls(Fraction(a), Fraction(0), 0)

    @classmethod
    def surd(cls, b, d: int) -> "QuadraticBound":
        """b*sqrt(d)"""
        return cls(Fraction(0), Fraction(b), d)

    def _same_radicand(self, other: "QuadraticBound") -> int:
        if self.b == 0:
            return other.d
        if other.b == 0 or other.d == self.d:
            return self.d
        raise ValueError(f"Radicandos distintos: {self.d} y {other.d}")

    def _lift(self, other) -> "QuadraticBound":
        if isinstance(other, QuadraticBound):
            return other
        return QuadraticBound.rational(other)

    def __add__(self, other) -> "QuadraticBound":
        other = self._lift(other)
        d = self._same_radicand(other)
        return QuadraticBound(self.a + other.a, self.b + other.b, d)

    __radd__ = __add__

    def __neg__(self) -> "QuadraticBound":
        return QuadraticBound(-self.a, -self.b, self.d)

    def __sub__(self, other) -> "QuadraticBound":
        return self + (-self._lift(other))

    def __rsub__(self, other) -> "QuadraticBound":
        return (-self) + other

    def __mul__(self, other) -> "QuadraticBound":
        other = self._lift(other)
        d = self._same_radicand(other)
        return QuadraticBound(
            self.a * other.a + self.b * other.b * d,
            self.a * other.b + self.b * other.a,
            d,
        )

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "QuadraticBound":
        result = QuadraticBound(Fraction(1), Fraction(0), self.d)
        for _ in range(n):
            result = result * self
        return result

    def sign(self) -> int:
        sa = (self.a > 0) - (self.a < 0)
        sb = (self.b > 0) - (self.b < 0)
        if sb == 0 or self.d == 0:
            return sa
        if sa == 0 or sa == sb:
            return sb
        # signos opuestos: gana el de mayor cuadrado
        lhs = self.a * self.a
        rhs = self.b * self.b * self.d
        if lhs > rhs:
            return sa
        if lhs < rhs:
            return sb
        return 0

    def __lt__(self, other) -> bool:
        return (self - other).sign() < 0

    def __le__(self, other) -> bool:
        return (self - other).sign() <= 0

    def __gt__(self, other) -> bool:
        return (self - other).sign() > 0

    def __ge__(self, other) -> bool:
        return (self - other).sign() >= 0

    def __repr__(self) -> str:
        if self.b == 0 or self.d == 0:
            return f"{self.a}"
        return f"{self.a} + {self.b}*sqrt({self.d})"
