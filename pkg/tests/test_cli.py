"""Command-line interface tests: schemas, exit codes, config precedence."""

import json

import pytest

from coeffatlas import cli

FAST_VERIFY = [
    "verify",
    "--functional",
    "gamma1",
    "--coarse-grid",
    "8",
    "--refine-iters",
    "60",
    "--seeds",
    "5",
]


def run_cli(argv, capsys):
    code = cli.main(argv)
    return code, capsys.readouterr().out


class TestVerify:
    def test_single_functional_json(self, capsys):
        code, out = run_cli(FAST_VERIFY + ["--format", "json"], capsys)
        doc = json.loads(out)
        assert code == 0
        assert doc["schema_version"] == cli.SCHEMA_VERSION
        assert doc["command"] == "verify"
        (entry,) = doc["results"]
        assert entry["name"] == "gamma1"
        assert entry["paper_value"] == 0.25
        assert entry["passed"] is True
        assert set(entry) == {
            "name",
            "paper_value",
            "numeric_value",
            "gap",
            "attaining_params",
            "passed",
        }
        assert set(entry["attaining_params"]) == {"tau1", "tau2", "tau3"}

    def test_timing_flag_adds_wall_ms(self, capsys):
        code, out = run_cli(FAST_VERIFY + ["--format", "json", "--timing"], capsys)
        doc = json.loads(out)
        assert code == 0
        assert "wall_ms" in doc["results"][0]

    def test_byte_identical_reruns(self, capsys):
        args = FAST_VERIFY + ["--seed", "7", "--format", "json"]
        _, first = run_cli(args, capsys)
        _, second = run_cli(args, capsys)
        assert first == second

    def test_failure_exit_code(self, capsys):
        code, out = run_cli(
            [
                "verify",
                "--functional",
                "gamma_diff",
                "--coarse-grid",
                "8",
                "--refine-iters",
                "60",
                "--seeds",
                "5",
                "--format",
                "json",
            ],
            capsys,
        )
        doc = json.loads(out)
        # the reported lower constant is not attained by the class
        # infimum, so the min half of the pair honestly fails
        by_name = {r["name"]: r for r in doc["results"]}
        assert by_name["gamma_diff_max"]["passed"] is True
        assert by_name["gamma_diff_min"]["passed"] is False
        assert code == 1

    def test_usage_error_exit_code(self, capsys):
        with pytest.raises(SystemExit) as err:
            cli.main(["verify", "--functional", "bogus"])
        assert err.value.code == 2

    def test_csv_format(self, capsys):
        code, out = run_cli(FAST_VERIFY + ["--format", "csv"], capsys)
        lines = out.strip().splitlines()
        assert lines[0] == "name,paper_value,numeric_value,gap,passed"
        assert lines[1].startswith("gamma1,0.25,")


class TestExtremal:
    def test_f1_values(self, capsys):
        code, out = run_cli(
            ["extremal", "--name", "f1", "--order", "8", "--format", "json"], capsys
        )
        doc = json.loads(out)
        assert code == 0
        by_name = {r["name"]: r for r in doc["results"]}
        assert by_name["a3"]["numeric_value"] == pytest.approx(1 / 6)
        assert by_name["a5"]["numeric_value"] == pytest.approx(1 / 20)
        assert by_name["a7"]["numeric_value"] == pytest.approx(1 / 63)
        assert by_name["gamma2"]["passed"] is True

    def test_f4_hankel(self, capsys):
        code, out = run_cli(
            ["extremal", "--name", "f4", "--order", "5", "--format", "json"], capsys
        )
        doc = json.loads(out)
        assert code == 0
        by_name = {r["name"]: r for r in doc["results"]}
        assert by_name["hankel21"]["numeric_value"] == pytest.approx(
            85 / 12096, abs=1e-9
        )

    def test_fekete_row_when_params_given(self, capsys):
        code, out = run_cli(
            [
                "extremal",
                "--name",
                "f0",
                "--order",
                "6",
                "--lambda-re",
                "1",
                "--mu",
                "1",
                "--format",
                "json",
            ],
            capsys,
        )
        doc = json.loads(out)
        by_name = {r["name"]: r for r in doc["results"]}
        assert by_name["fekete"]["numeric_value"] == pytest.approx(-0.5)

    def test_unknown_name_is_usage_error(self, capsys):
        with pytest.raises(SystemExit) as err:
            cli.main(["extremal", "--name", "f9"])
        assert err.value.code == 2


class TestIdentities:
    def test_small_run(self, capsys):
        code, out = run_cli(
            ["identities", "--samples", "200", "--seed", "1", "--format", "json"],
            capsys,
        )
        doc = json.loads(out)
        assert code == 0
        assert len(doc["results"]) == 4
        assert all(r["passed"] for r in doc["results"])


class TestYOracle:
    def test_small_fuzz(self, capsys):
        code, out = run_cli(
            ["y-oracle", "--samples", "50", "--seed", "2", "--format", "json"], capsys
        )
        doc = json.loads(out)
        assert code == 0
        by_name = {r["name"]: r for r in doc["results"]}
        assert by_name["y-closed vs grid oracle"]["numeric_value"] <= 5e-3


class TestConfigPrecedence:
    def test_env_overrides_default(self, capsys, monkeypatch):
        monkeypatch.setenv("COEFFATLAS_SEED", "42")
        _, out = run_cli(FAST_VERIFY + ["--format", "json"], capsys)
        assert json.loads(out)["seed"] == 42

    def test_flag_overrides_env(self, capsys, monkeypatch):
        monkeypatch.setenv("COEFFATLAS_SEED", "42")
        _, out = run_cli(FAST_VERIFY + ["--seed", "3", "--format", "json"], capsys)
        assert json.loads(out)["seed"] == 3

    def test_config_file_used(self, capsys, monkeypatch, tmp_path):
        (tmp_path / "coeffatlas.toml").write_text('seed = 9\nformat = "json"\n')
        monkeypatch.chdir(tmp_path)
        code = cli.main(FAST_VERIFY)
        out = capsys.readouterr().out
        assert json.loads(out)["seed"] == 9

    def test_env_overrides_config_file(self, capsys, monkeypatch, tmp_path):
        (tmp_path / "coeffatlas.toml").write_text("seed = 9\n")
        monkeypatch.chdir(tmp_path)
        monkeypatch.setenv("COEFFATLAS_SEED", "42")
        _, out = run_cli(FAST_VERIFY + ["--format", "json"], capsys)
        assert json.loads(out)["seed"] == 42
