"""
Tests de la zeta de Hasse-Weil, μ_N(p), la verificación completa y las tablas.
Ejecutar con: pytest tests/test_correspondence.py -v
"""
from fractions import Fraction

import pytest

from core.brandt_service import brandt_matrix
from core.correspondence_service import (
    brandt_weil_polynomial,
    eichler_mass_check,
    fixture_values,
    hasse_weil_zeta,
    hecke_charpoly_s2,
    mu,
    point_count,
    primes_up_to,
    table_report,
    verify_theorems,
    weil_polynomial,
)
from core.exceptions import (
    CompositeModulus,
    ExactDivisionFailure,
    InternalInconsistency,
    NotCongruentOneMod12,
)
from core.selftest import TABLE_MU
from core.supersingular_service import supersingular_locus
from models.arithmetic import BrandtMatrix
from models.polynomials import IntPolynomial
from schemas.reports import CLAIM_STATEMENTS, ClaimStatus


@pytest.fixture(scope="module")
def b37_5():
    return brandt_matrix(37, 5)


class TestHasseWeil:
    """P(t) = det[1 - Bt + pt^2] / ((1-t)(1-pt))"""

    def test_level_37_p_5(self, b37_5):
        """(1 + 2t + 5t^2)(1 + 5t^2) con a_5 = -2 y 0"""
        assert hecke_charpoly_s2(b37_5).coeffs == (1, 2, 10, 10, 25)

    def test_point_counts(self, b37_5):
        W = hasse_weil_zeta(b37_5)
        assert W.numerator.degree == 4
        assert point_count(W, 1) == 8
        assert point_count(W, 2) == 42

    def test_level_13_is_genus_zero(self):
        W = hasse_weil_zeta(brandt_matrix(13, 2))
        assert W.numerator == IntPolynomial.constant(1)
        assert point_count(W, 1) == 3


class TestWeilPolynomial:
    """R(x) = Π (x - a_p)"""

    def test_from_hecke_polynomial(self, b37_5):
        R = weil_polynomial(hecke_charpoly_s2(b37_5), 5)
        assert R.coeffs == (0, 2, 1)
        assert R == brandt_weil_polynomial(b37_5)

    def test_odd_degree(self):
        with pytest.raises(InternalInconsistency):
            weil_polynomial(IntPolynomial((1, 1)), 5)

    def test_not_of_weil_form(self):
        with pytest.raises(InternalInconsistency):
            weil_polynomial(IntPolynomial((1, 0, 1)), 5)


class TestMu:
    """μ_N(p) = det B(p) / (p+1)"""

    @pytest.mark.parametrize("p, expected", [(5, 0), (11, -15)])
    def test_level_37(self, p, expected):
        assert mu(brandt_matrix(37, p)) == expected

    def test_level_13_is_one(self):
        assert mu(brandt_matrix(13, 7)) == 1

    def test_not_divisible(self):
        js = supersingular_locus(37).j_invariants
        B = BrandtMatrix(37, 2, js, ((2, 1, 0), (1, 1, 1), (0, 1, 1)))
        with pytest.raises(ExactDivisionFailure):
            mu(B)


class TestMassCheck:
    def test_level_37(self):
        result = eichler_mass_check(37)
        assert result.status == ClaimStatus.PASS
        assert result.computed == {"n": 3, "mass": "3"}

    def test_level_13(self):
        assert eichler_mass_check(13).status == ClaimStatus.PASS

    def test_skipped_when_12_does_not_divide(self):
        result = eichler_mass_check(11)
        assert result.status == ClaimStatus.SKIP
        assert result.expected == str(Fraction(10, 12))


class TestVerifyTheorems:
    """Reporte completo para (N, p)"""

    def test_level_37_p_5(self):
        report = verify_theorems(37, 5)
        assert report.passed
        assert report.claim("brandt.even_diagonal").status == ClaimStatus.FINDING
        assert report.claim("graph.ramanujan").status == ClaimStatus.SKIP
        assert report.claim("zeta.reciprocity").status == ClaimStatus.PASS
        assert report.claim("zeta.residue").computed == "12"
        assert report.claim("mu.divisibility").computed == {"mu": 0, "n": 3}
        assert report.claim("hecke.tree_count").computed["tau"] == 16
        assert report.claim("weil.window").computed["matches_brandt"] is True
        assert report.discrepancies == []

    def test_level_13_uses_squared_form(self):
        report = verify_theorems(13, 2)
        assert report.claim("brandt.even_diagonal").status == ClaimStatus.FINDING
        assert report.claim("zeta.reciprocity").status == ClaimStatus.PASS
        assert "forma cuadrada" in report.claim("zeta.reciprocity").note
        assert report.claim("graph.ramanujan").status == ClaimStatus.SKIP
        assert report.passed

    def test_sign_discrepancy_level_37_p_29(self):
        report = verify_theorems(37, 29)
        assert report.claim("mu.divisibility").computed["mu"] == -36
        flagged = [d for d in report.discrepancies if d.claim == "mu.divisibility"]
        assert flagged and flagged[0].computed == -36 and flagged[0].expected == 36

    def test_level_61_p_19_reports_both_values(self):
        report = verify_theorems(61, 19)
        assert report.claim("mu.divisibility").status == ClaimStatus.PASS
        assert report.claim("mu.divisibility").computed["mu"] % 5 == 0
        assert report.discrepancies
        assert report.passed

    def test_not_one_mod_12(self):
        with pytest.raises(NotCongruentOneMod12):
            verify_theorems(11, 2)

    def test_each_claim_has_one_statement(self):
        report = verify_theorems(37, 5)
        ids = [c.id for c in report.claims]
        assert len(ids) == len(set(ids))
        assert set(ids) == set(CLAIM_STATEMENTS)
        for claim in report.claims:
            assert claim.statement == CLAIM_STATEMENTS[claim.id]
        assert len(set(CLAIM_STATEMENTS.values())) == len(CLAIM_STATEMENTS)


class TestFixtures:
    def test_level_37_p_29(self):
        fx = fixture_values(37, 29)
        assert fx.product == -36
        assert fx.printed_mu == 36
        assert fx.trace_sum == 0

    def test_level_61_p_19_orbit_norm(self):
        fx = fixture_values(61, 19)
        assert fx.polynomial.degree == 4
        assert fx.product == -136
        assert fx.printed_mu == 80

    def test_unknown_level(self):
        assert fixture_values(13, 2) is None


class TestTables:
    """Una fila por primo p != N"""

    def test_primes_up_to(self):
        assert primes_up_to(12, exclude=(5,)) == [2, 3, 7, 11]

    @pytest.mark.parametrize("N", sorted(TABLE_MU))
    def test_tabulated_mu(self, N):
        expected = TABLE_MU[N]
        report = table_report(N, sorted(expected))
        assert {r.p: r.mu for r in report.rows} == expected
        assert all(r.divisible is not False for r in report.rows)

    def test_level_excluded_and_divisibility(self):
        report = table_report(37, [5, 11, 37])
        assert [r.p for r in report.rows] == [5, 11]
        assert all(r.divisible is True for r in report.rows)
        assert all(r.fixture_match is True for r in report.rows)

    def test_missing_data_row_is_skipped(self, isolated_settings, tmp_path):
        isolated_settings.MODPOLY_GENERATE = False
        report = table_report(37, [5], data_dir=str(tmp_path))
        assert report.rows[0].status == ClaimStatus.SKIP
        assert report.rows[0].mu is None

    def test_bad_levels(self):
        with pytest.raises(CompositeModulus):
            table_report(15, [2])
        with pytest.raises(NotCongruentOneMod12):
            table_report(11, [2])
