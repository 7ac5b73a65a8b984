"""
Tests del lugar supersingular vía el polinomio de Hasse.
Ejecutar con: pytest tests/test_supersingular.py -v
"""
from fractions import Fraction

import pytest

from core.exceptions import CompositeModulus, EvenCharacteristic, SingularLambda, UsageError
from core.finite_fields import make_field
from core.supersingular_service import (
    hasse_polynomial,
    lambda_preimages,
    legendre_to_j,
    supersingular_locus,
)


class TestHassePolynomial:
    """H_N(λ) = Σ C(m,i)^2 λ^i"""

    def test_coefficients_mod_13(self):
        H = hasse_polynomial(13)
        assert [c.a for c in H] == [1, 10, 4, 10, 4, 10, 1]

    def test_even_characteristic(self):
        with pytest.raises(EvenCharacteristic):
            hasse_polynomial(2)

    def test_composite(self):
        with pytest.raises(CompositeModulus):
            hasse_polynomial(15)


class TestLegendre:
    """Cambio λ -> j"""

    def test_minus_one_is_1728(self):
        F = make_field(13, 2)
        assert legendre_to_j(F.element(-1)) == F.element(1728)

    def test_singular_lambda(self):
        F = make_field(13, 2)
        with pytest.raises(SingularLambda):
            legendre_to_j(F.zero)
        with pytest.raises(SingularLambda):
            legendre_to_j(F.one)

    def test_preimages_of_1728(self):
        """λ ∈ {-1, 2, 1/2}"""
        F = make_field(13, 2)
        preimages = lambda_preimages(F.element(1728))
        assert len(preimages) == 3
        assert F.element(-1) in preimages
        assert F.element(2) in preimages


class TestSupersingularLocus:
    """Enumeración, orden canónico y fórmula de masa"""

    @pytest.mark.parametrize("N, n", [(13, 1), (37, 3), (61, 5), (73, 6)])
    def test_sizes(self, N, n):
        locus = supersingular_locus(N)
        assert locus.size == n == (N - 1) // 12
        assert all(w == 1 for w in locus.weights)
        assert locus.mass == Fraction(N - 1, 12)

    def test_level_13(self):
        locus = supersingular_locus(13)
        assert [j.coordinates for j in locus.j_invariants] == [(5, 0)]

    def test_level_37_canonical_order(self):
        """j = 8 y j = 3 ± √15 con √15 = ±10g, g^2 = 2"""
        locus = supersingular_locus(37)
        assert locus.field.nonresidue == 2
        assert [j.coordinates for j in locus.j_invariants] == [(3, 10), (3, 27), (8, 0)]

    def test_conjugates_are_closed_under_frobenius(self):
        locus = supersingular_locus(61)
        found = set(locus.j_invariants)
        for j in locus.j_invariants:
            assert j ** 61 in found

    def test_level_11_has_special_j(self):
        """12 ∤ N-1: aparecen j = 0 y j = 1728 con sus pesos"""
        locus = supersingular_locus(11)
        assert [j.coordinates for j in locus.j_invariants] == [(0, 0), (1, 0)]
        assert locus.weights == (3, 2)
        assert locus.mass == Fraction(5, 6)

    def test_index_of(self):
        locus = supersingular_locus(37)
        assert locus.index_of(locus.field.element(8)) == 2
        assert locus.index_of(locus.field.element(9)) is None

    @pytest.mark.parametrize("N", [2, 3])
    def test_small_characteristic_rejected(self, N):
        with pytest.raises(UsageError):
            supersingular_locus(N)

    def test_composite_rejected(self):
        with pytest.raises(CompositeModulus):
            supersingular_locus(25)
