"""
Coeficientes a_p(f_i) tabulados para niveles 37, 61 y 73.

Una forma con coeficientes irracionales se guarda como órbita: el polinomio
mínimo de una raíz θ y, para cada p, a_p como polinomio en θ (grado menor a
mayor). Solo se usan sus funciones simétricas (traza, norma), nunca los
valores individuales.
"""
from dataclasses import dataclass, field
from typing import Dict, Optional, Tuple


@dataclass(frozen=True)
class EigenformOrbit:
    label: str
    minimal_polynomial: Optional[Tuple[int, ...]]  # None: coeficientes racionales
    coefficients: Dict[int, Tuple[int, ...]] = field(default_factory=dict)

    @property
    def degree(self) -> int:
        if self.minimal_polynomial is None:
            return 1
        return len(self.minimal_polynomial) - 1


@dataclass(frozen=True)
class EigenformFixture:
    N: int
    orbits: Tuple[EigenformOrbit, ...]
    printed_mu: Dict[int, int]

    @property
    def dimension(self) -> int:
        """n - 1 = dim S_2(Γ0(N))"""
        return sum(o.degree for o in self.orbits)

    @property
    def primes(self) -> Tuple[int, ...]:
        return tuple(sorted(self.printed_mu))


def _rational(label: str, values: Dict[int, int]) -> EigenformOrbit:
    return EigenformOrbit(label, None, {p: (a,) for p, a in values.items()})


LEVEL_37 = EigenformFixture(
    N=37,
    orbits=(
        _rational("37a", {5: -2, 11: -5, 17: 0, 23: 2, 29: 6, 41: -9, 47: -9}),
        _rational("37b", {5: 0, 11: 3, 17: 6, 23: 6, 29: -6, 41: -9, 47: 3}),
    ),
    # p = 29: el producto de los a_p es -36
    printed_mu={5: 0, 11: -15, 17: 0, 23: 12, 29: 36, 41: 81, 47: -27},
)

LEVEL_61 = EigenformFixture(
    N=61,
    orbits=(
        _rational("61a", {19: 4, 29: -6, 59: 9, 79: 3, 89: -4}),
        EigenformOrbit(
            "61b",
            (1, -3, -1, 1),  # γ^3 - γ^2 - 3γ + 1
            {
                19: (-7, 3),
                29: (3, 2, -1),
                59: (13, -3, -1),
                79: (14, -1, -4),
                89: (-10, -2, 4),
            },
        ),
    ),
    # p = 19: los a_p dan -136, la fila impresa dice 80
    printed_mu={19: 80, 29: 120, 59: 2925, 79: -1875, 89: 320},
)

LEVEL_73 = EigenformFixture(
    N=73,
    orbits=(
        _rational("73a", {5: 2, 11: -2, 17: 2, 23: 4, 29: 2, 41: 6, 47: 6, 53: 10}),
        EigenformOrbit(
            "73b",
            (1, 3, 1),  # α^2 + 3α + 1
            {
                5: (0, 1),
                11: (-3, -1),
                17: (-9, -6),
                23: (-6, 1),
                29: (-3, -4),
                41: (6, 4),
                47: (-9, -4),
                53: (15, 8),
            },
        ),
        EigenformOrbit(
            "73c",
            (-3, -1, 1),  # β^2 - β - 3
            {
                5: (0, -1),
                11: (3, 1),
                17: (-3, 2),
                23: (6, 1),
                29: (3, -4),
                41: (-6,),
                47: (9,),
                53: (-3, 4),
            },
        ),
    ),
    printed_mu={5: -6, 11: -18, 17: 810, 23: 8580, 29: 1122, 41: 720, 47: 396, 53: 36210},
)

FIXTURES: Dict[int, EigenformFixture] = {f.N: f for f in (LEVEL_37, LEVEL_61, LEVEL_73)}
