"""
Tests del formato de Φ_p, la búsqueda en disco y la generación mod N.
Ejecutar con: pytest tests/test_modular_polynomials.py -v
"""
import warnings

import pytest

from core.config import DEFAULT_DATA_DIR
from core.exceptions import LevelMismatch, MissingModularPolynomial, ParseError, SymmetryViolation
from core.finite_fields import make_field
from core.modular_polynomials import (
    find_modular_polynomial,
    format_modular_polynomial,
    generate_modular_polynomial_mod,
    j_series_mod,
    load_modular_polynomial,
    parse_modular_polynomial,
    specialize,
    write_modular_polynomial,
)


@pytest.fixture
def phi_2():
    return load_modular_polynomial(2, DEFAULT_DATA_DIR / "phi_2.txt")


@pytest.fixture
def phi_3():
    return load_modular_polynomial(3, DEFAULT_DATA_DIR / "phi_3.txt")


class TestShippedFiles:
    """Φ_2 y Φ_3 sobre Z incluidos en el repositorio"""

    def test_phi_2(self, phi_2):
        assert phi_2.modulus is None
        assert phi_2.degree == 3
        assert phi_2.coefficient(3, 0) == phi_2.coefficient(0, 3) == 1
        assert phi_2.coefficient(2, 2) == -1
        assert phi_2.coefficient(2, 1) == phi_2.coefficient(1, 2) == 1488
        assert phi_2.coefficient(0, 0) == -157464000000000

    def test_phi_3(self, phi_3):
        assert phi_3.degree == 4
        assert phi_3.coefficient(4, 0) == 1
        assert phi_3.coefficient(3, 3) == -1
        assert phi_3.coefficient(2, 2) == 2587918086
        assert phi_3.coefficient(0, 0) == 0

    def test_reduce(self, phi_2):
        reduced = phi_2.reduce(37)
        assert reduced.modulus == 37
        assert reduced.coefficient(2, 2) == 36
        assert all(0 < c < 37 for _, _, c in reduced.terms)

    def test_format_parses_back(self, phi_3):
        text = format_modular_polynomial(phi_3)
        assert parse_modular_polynomial(text, 3) == phi_3


class TestParser:
    """Errores de formato"""

    def test_comments_and_blank_lines(self):
        phi = parse_modular_polynomial("# Φ_2 parcial\n\np 2\n3 0 1   # líder\n", 2)
        assert phi.terms == ((3, 0, 1),)

    def test_bad_line(self):
        with pytest.raises(ParseError):
            parse_modular_polynomial("p 2\n3 0 1\nfoo bar\n", 2)

    def test_missing_header(self):
        with pytest.raises(ParseError):
            parse_modular_polynomial("3 0 1\n", 2)

    def test_not_monic(self):
        with pytest.raises(ParseError):
            parse_modular_polynomial("p 2\n3 0 2\n", 2)

    def test_exponent_out_of_range(self):
        with pytest.raises(ParseError):
            parse_modular_polynomial("p 2\n3 0 1\n4 0 1\n", 2)

    def test_level_mismatch(self):
        with pytest.raises(LevelMismatch):
            parse_modular_polynomial("p 3\n4 0 1\n", 2)

    def test_symmetry_violation(self):
        with pytest.raises(SymmetryViolation):
            parse_modular_polynomial("p 2\n3 0 1\n2 1 5\n1 2 6\n", 2)

    def test_modulus_header_reduces(self):
        phi = parse_modular_polynomial("p 2\nmodulus 37\n3 0 1\n2 2 -1\n", 2)
        assert phi.modulus == 37
        assert phi.coefficient(2, 2) == 36

    def test_unreadable_file(self, tmp_path):
        with pytest.raises(MissingModularPolynomial):
            load_modular_polynomial(5, tmp_path / "phi_5.txt")


class TestGeneration:
    """Φ_p mod N desde la q-expansión de j"""

    def test_j_series(self):
        """q j(q) = 1 + 744 q + 196884 q^2 + 21493760 q^3 + ..."""
        s = j_series_mod(10007, 4)
        assert [int(x) for x in s] == [1, 744, 196884 % 10007, 21493760 % 10007]

    def test_j_series_without_deprecations(self):
        with warnings.catch_warnings():
            warnings.simplefilter("error")
            s = j_series_mod(37, 200)
        assert len(s) == 200
        assert int(s[1]) == 744 % 37

    def test_generation_runs_once_per_pair(self):
        generate_modular_polynomial_mod(5, 61)
        hits = generate_modular_polynomial_mod.cache_info().hits
        assert generate_modular_polynomial_mod(5, 61) is generate_modular_polynomial_mod(5, 61)
        assert generate_modular_polynomial_mod.cache_info().hits == hits + 2

    @pytest.mark.parametrize("p, N", [(2, 37), (3, 37), (2, 61), (3, 73)])
    def test_matches_integral_files(self, p, N):
        shipped = load_modular_polynomial(p, DEFAULT_DATA_DIR / f"phi_{p}.txt").reduce(N)
        assert generate_modular_polynomial_mod(p, N) == shipped


class TestLookup:
    """Orden de búsqueda: exacto, reducido, caché, generación"""

    def test_integral_file_first(self, isolated_settings, phi_2):
        assert find_modular_polynomial(2, 37) == phi_2.reduce(37)

    def test_reduced_file(self, isolated_settings, tmp_path):
        phi = generate_modular_polynomial_mod(5, 37)
        write_modular_polynomial(phi, tmp_path)
        assert (tmp_path / "phi_5_mod37.txt").is_file()
        isolated_settings.MODPOLY_GENERATE = False
        assert find_modular_polynomial(5, 37, str(tmp_path)) == phi

    def test_reduced_file_wrong_modulus(self, isolated_settings, tmp_path):
        (tmp_path / "phi_2_mod37.txt").write_text("p 2\nmodulus 61\n3 0 1\n", encoding="utf-8")
        with pytest.raises(ParseError):
            find_modular_polynomial(2, 37, str(tmp_path))

    def test_generation_writes_cache(self, isolated_settings, tmp_path):
        cache = tmp_path / "cache"
        isolated_settings.MODPOLY_CACHE_DIR = str(cache)
        phi = find_modular_polynomial(5, 37, str(tmp_path / "empty"))
        assert phi.modulus == 37
        assert phi.coefficient(6, 0) == 1
        assert (cache / "phi_5_mod37.txt").is_file()

    def test_missing_without_generation(self, isolated_settings, tmp_path):
        isolated_settings.MODPOLY_GENERATE = False
        with pytest.raises(MissingModularPolynomial) as exc:
            find_modular_polynomial(5, 37, str(tmp_path))
        assert exc.value.exit_code == 3

    def test_generation_level_cap(self, isolated_settings, tmp_path, monkeypatch):
        monkeypatch.setattr(isolated_settings, "MODPOLY_GENERATE_MAX_LEVEL", 3)
        with pytest.raises(MissingModularPolynomial):
            find_modular_polynomial(5, 37, str(tmp_path))


class TestSpecialize:
    def test_degree_and_leading_coefficient(self, phi_2):
        F = make_field(37, 2)
        f = specialize(phi_2.reduce(37), F.element(8))
        assert len(f) == 4
        assert f[-1] == F.one
