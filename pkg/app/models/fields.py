"""
Cuerpos finitos F_N y F_{N^2} = F_N[g]/(g^2 - d).
"""
from dataclasses import dataclass
from typing import Iterator, Union


@dataclass(frozen=True)
class Field:
    characteristic: int
    degree: int
    nonresidue: int = 0  # d = g^2, solo cuando degree == 2

    @property
    def order(self) -> int:
        return self.characteristic ** self.degree

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(0, 0, self)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(1, 0, self)

    @property
    def generator(self) -> "FieldElement":
        """g con g^2 = nonresidue (solo grado 2)."""
        if self.degree != 2:
            raise ValueError("El generador g solo existe en F_{N^2}")
        return FieldElement(0, 1, self)

    def element(self, a: int, b: int = 0) -> "FieldElement":
        N = self.characteristic
        if self.degree == 1:
            b = 0
        return FieldElement(a % N, b % N, self)

    def elements(self) -> Iterator["FieldElement"]:
        """Todos los elementos en orden canónico (a, b) lexicográfico."""
        N = self.characteristic
        second = range(N) if self.degree == 2 else range(1)
        for a in range(N):
            for b in second:
                yield FieldElement(a, b, self)

    def __repr__(self) -> str:
        if self.degree == 1:
            return f"F_{self.characteristic}"
        return f"F_{self.characteristic}^2[g^2={self.nonresidue}]"


Scalar = Union[int, "FieldElement"]


@dataclass(frozen=True)
class FieldElement:
    """a + b*g con coordenadas ya reducidas mod N."""
    a: int
    b: int
    field: Field

    # ==================== HELPERS ====================

    def _coerce(self, other: Scalar) -> "FieldElement":
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise ValueError(f"Elementos de cuerpos distintos: {self.field} y {other.field}")
            return other
        if isinstance(other, int):
            return self.field.element(other)
        return NotImplemented

    @property
    def sort_key(self):
        return (self.a, self.b)

    @property
    def coordinates(self):
        return (self.a, self.b)

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def in_prime_field(self) -> bool:
        return self.b == 0

    # ==================== ARITHMETIC ====================

    def __add__(self, other: Scalar) -> "FieldElement":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        N = self.field.characteristic
        return FieldElement((self.a + other.a) % N, (self.b + other.b) % N, self.field)

    __radd__ = __add__

    def __neg__(self) -> "FieldElement":
        N = self.field.characteristic
        return FieldElement(-self.a % N, -self.b % N, self.field)

    def __sub__(self, other: Scalar) -> "FieldElement":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other: Scalar) -> "FieldElement":
        return (-self) + other

    def __mul__(self, other: Scalar) -> "FieldElement":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        N = self.field.characteristic
        d = self.field.nonresidue
        a = (self.a * other.a + d * self.b * other.b) % N
        b = (self.a * other.b + self.b * other.a) % N
        return FieldElement(a, b, self.field)

    __rmul__ = __mul__

    def norm(self) -> int:
        """Norma a^2 - d b^2 en F_N."""
        N = self.field.characteristic
        return (self.a * self.a - self.field.nonresidue * self.b * self.b) % N

    def inverse(self) -> "FieldElement":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError(f"{self} no es invertible")
        N = self.field.characteristic
        inv = pow(n, -1, N)
        return FieldElement(self.a * inv % N, -self.b * inv % N, self.field)

    def __truediv__(self, other: Scalar) -> "FieldElement":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other: Scalar) -> "FieldElement":
        return self.inverse() * other

    def __pow__(self, exponent: int) -> "FieldElement":
        base = self if exponent >= 0 else self.inverse()
        exponent = abs(exponent)
        result = self.field.one
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __repr__(self) -> str:
        if self.field.degree == 1:
            return str(self.a)
        return f"({self.a},{self.b})"
