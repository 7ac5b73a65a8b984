"""
Tests de la CLI: códigos de salida, formatos y errores en stderr.
Ejecutar con: pytest tests/test_cli.py -v
"""
import json

import pytest
from click.testing import CliRunner

from main import cli, run


def _stderr_detail(capsys):
    err = capsys.readouterr().err.strip().splitlines()
    return json.loads(err[-1])


class TestExitCodes:
    """0 ok, 1 uso, 2 enunciado fallido, 3 faltan datos, 4 obstrucción"""

    def test_composite_level_is_usage_error(self, capsys):
        assert run(["ss-enum", "--N", "12", "--format", "json"]) == 1
        detail = _stderr_detail(capsys)
        assert detail["exit_code"] == 1
        assert detail["details"]["errors"][0]["field"] == "N"

    def test_same_prime_is_usage_error(self, capsys):
        assert run(["verify", "--N", "37", "--p", "37", "--format", "json"]) == 1
        assert _stderr_detail(capsys)["error"] == "USAGE_ERROR"

    def test_level_not_one_mod_12(self, capsys):
        assert run(["verify", "--N", "11", "--p", "2", "--format", "json"]) == 1
        assert _stderr_detail(capsys)["error"] == "NOT_CONGRUENT_ONE_MOD_12"

    def test_unknown_option(self):
        assert run(["ss-enum", "--bogus"]) == 1

    def test_graph_with_odd_diagonal(self, capsys):
        assert run(["emit", "graph", "--N", "13", "--p", "2", "--format", "dot"]) == 4
        detail = _stderr_detail(capsys)
        assert detail["error"] == "PARITY_OBSTRUCTION"
        assert detail["details"]["diagonal"] == [3]

    def test_formal_zeta_not_realizable(self, capsys):
        """m(2 - k) = -1 es impar"""
        assert run(["emit", "zeta", "--N", "13", "--p", "2", "--format", "json"]) == 4
        assert _stderr_detail(capsys)["error"] == "NOT_REALIZABLE"

    def test_missing_modular_polynomial(self, capsys, isolated_settings, tmp_path):
        isolated_settings.MODPOLY_GENERATE = False
        code = run(["emit", "brandt", "--N", "37", "--p", "5", "--data-dir", str(tmp_path), "--format", "json"])
        assert code == 3
        assert _stderr_detail(capsys)["error"] == "MISSING_MODULAR_POLYNOMIAL"

    def test_format_not_supported(self, capsys):
        assert run(["verify", "--N", "37", "--p", "5", "--format", "dot"]) == 1

    def test_version(self, capsys):
        assert run(["--version"]) == 0
        assert "brandt-zeta" in capsys.readouterr().out


class TestCommands:
    """Salidas de los comandos"""

    def test_ss_enum_json(self, capsys):
        assert run(["ss-enum", "--N", "37", "--format", "json"]) == 0
        listing = json.loads(capsys.readouterr().out)
        assert listing["count"] == 3
        assert listing["j_invariants"] == [[3, 10], [3, 27], [8, 0]]
        assert listing["nonresidue"] == 2
        assert listing["mass_check"] == "pass"

    def test_ss_enum_csv(self, capsys):
        assert run(["ss-enum", "--N", "13", "--format", "csv"]) == 0
        assert capsys.readouterr().out == "index,a,b\n0,5,0\n"

    def test_ss_enum_without_mass_formula(self, capsys):
        assert run(["ss-enum", "--N", "11", "--format", "json"]) == 0
        listing = json.loads(capsys.readouterr().out)
        assert listing["count"] == 2
        assert listing["mass_check"] == "skip"
        assert listing["expected"] is None

    def test_brandt_validate_finding_exits_zero(self, capsys):
        assert run(["brandt-validate", "--N", "13", "--p", "2", "--format", "json"]) == 0
        report = json.loads(capsys.readouterr().out)
        parity = [c for c in report["claims"] if c["id"] == "brandt.even_diagonal"][0]
        assert parity["status"] == "finding"

    def test_emit_graph_dot(self, capsys):
        assert run(["emit", "graph", "--N", "13", "--p", "3", "--format", "dot"]) == 0
        out = capsys.readouterr().out
        assert out.startswith("graph G_13_3 {")
        assert out.count("0 -- 0;") == 2

    def test_emit_brandt(self, capsys):
        assert run(["emit", "brandt", "--N", "37", "--p", "5", "--format", "json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["matrix"] == [[1, 3, 2], [3, 1, 2], [2, 2, 2]]

    def test_emit_hasse_weil(self, capsys):
        assert run(["emit", "hasse-weil", "--N", "37", "--p", "5", "--format", "json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["zeta"]["numerator"] == [1, 2, 10, 10, 25]
        assert payload["point_counts"][:2] == [8, 42]

    def test_verify_is_deterministic(self, capsys):
        assert run(["verify", "--N", "37", "--p", "5", "--format", "json"]) == 0
        first = capsys.readouterr().out
        assert run(["verify", "--N", "37", "--p", "5", "--format", "json"]) == 0
        assert capsys.readouterr().out == first
        assert json.loads(first)["N"] == 37

    def test_table_csv(self, capsys):
        assert run(["table", "--N", "37", "--p-max", "11", "--format", "csv"]) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert lines[0].startswith("p,status,sum_a_p,mu")
        assert [line.split(",")[0] for line in lines[1:]] == ["2", "3", "5", "7", "11"]

    def test_out_file(self, tmp_path):
        target = tmp_path / "locus.json"
        assert run(["ss-enum", "--N", "61", "--format", "json", "--out", str(target)]) == 0
        assert json.loads(target.read_text(encoding="utf-8"))["count"] == 5


class TestZetaCommand:
    """zeta sobre un grafo leído de JSON"""

    @pytest.fixture
    def k4_file(self, tmp_path, k4):
        path = tmp_path / "k4.json"
        path.write_text(json.dumps({"vertices": 4, "adjacency": [list(r) for r in k4]}), encoding="utf-8")
        return path

    def test_with_oracle_and_certificate(self, k4_file):
        result = CliRunner().invoke(cli, ["zeta", str(k4_file), "--oracle", "hashimoto", "--ramanujan", "--format", "json"])
        assert result.exit_code == 0
        payload = json.loads(result.stdout)
        assert payload["hashimoto_agrees"] is True
        assert payload["ramanujan"]["is_ramanujan"] is True
        assert payload["euler_characteristic"] == -2

    def test_invalid_graph_file(self, tmp_path, capsys):
        path = tmp_path / "bad.json"
        path.write_text('{"vertices": "x"}', encoding="utf-8")
        assert run(["zeta", str(path), "--format", "json"]) == 1

    def test_ragged_adjacency_is_usage_error(self, tmp_path, capsys):
        path = tmp_path / "ragged.json"
        path.write_text('{"vertices": 2, "adjacency": [[0, 1], [1]]}', encoding="utf-8")
        assert run(["zeta", str(path), "--format", "json"]) == 1
        assert _stderr_detail(capsys)["error"] == "USAGE_ERROR"

    def test_text_output(self, k4_file):
        result = CliRunner().invoke(cli, ["zeta", str(k4_file), "--format", "text"])
        assert result.exit_code == 0
        assert result.stdout.startswith("Z(G;t) = ")
