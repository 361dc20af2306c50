"""
Tests for the command line.
"""

import pytest
from click.testing import CliRunner

from app.config import Settings
from app.schemas.bench import CSV_HEADER
from main import cli


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def k4_files(runner, tmp_path):
    """K'_4 graph and original-vertex IS written by gen-graph."""
    graph = tmp_path / "k4.txt"
    seed_is = tmp_path / "k4.is"
    result = runner.invoke(
        cli, ["gen-graph", "--family", "kclique", "-n", "4", "--out", str(graph), "--is-out", str(seed_is)]
    )
    assert result.exit_code == 0, result.output
    return str(graph), str(seed_is)


@pytest.mark.integration
class TestCommands:
    """Tests for each subcommand."""

    def test_run_fixed_point(self, runner, k4_files):
        """Test a zero-op TwoSwap run on K'_4."""
        graph, seed_is = k4_files
        result = runner.invoke(
            cli, ["run", "--engine", "twoswap", "--graph", graph, "--init", "file", "--init-file", seed_is]
        )
        assert result.exit_code == 0, result.output
        lines = result.stdout.splitlines()
        assert lines[0] == CSV_HEADER
        assert "total_swaps=0" in lines[-1]
        assert "final_is_size=4" in lines[-1]

    def test_run_to_csv_file(self, runner, k4_files, tmp_path):
        """Test --csv-out with generated ops and checks."""
        graph, _ = k4_files
        out = tmp_path / "metrics.csv"
        result = runner.invoke(
            cli,
            ["run", "--graph", graph, "--gen-ops", "30", "--check-every", "10", "--seed", "5", "--csv-out", str(out)],
        )
        assert result.exit_code == 0, result.output
        lines = out.read_text().splitlines()
        assert len(lines) == 32
        assert lines[10].endswith(",ok")

    def test_gap(self, runner, k4_files):
        """Test the gap report on K'_4."""
        graph, seed_is = k4_files
        result = runner.invoke(cli, ["gap", "--graph", graph, "--is", seed_is])
        assert result.exit_code == 0, result.output
        assert result.stdout.strip() == "alpha=6 is_size=4 gap=2 gamma=1.500000"

    def test_certify_ok(self, runner, k4_files):
        """Test that K'_4 originals certify as 2-swap-free."""
        graph, seed_is = k4_files
        result = runner.invoke(cli, ["certify", "--graph", graph, "--is", seed_is, "-k", "2"])
        assert result.exit_code == 0
        assert result.stdout.strip() == "OK"

    def test_certify_witness_exit_code(self, runner, tmp_path):
        """Test that a swap witness exits with the invariant code."""
        graph = tmp_path / "p.txt"
        graph.write_text("0 1\n1 2\n")
        members = tmp_path / "p.is"
        members.write_text("1\n")
        result = runner.invoke(cli, ["certify", "--graph", str(graph), "--is", str(members), "-k", "1"])
        assert result.exit_code == 5
        assert "level-1 swap" in result.output

    def test_gen_ops(self, runner, k4_files):
        """Test that gen-ops emits the requested number of lines."""
        graph, _ = k4_files
        result = runner.invoke(cli, ["gen-ops", "--graph", graph, "--count", "12", "--seed", "1"])
        assert result.exit_code == 0
        assert len(result.stdout.splitlines()) == 12

    def test_gen_plr_needs_parameters(self, runner):
        """Test the usage error for a PLR graph without alpha/beta."""
        result = runner.invoke(cli, ["gen-graph", "--family", "plr"])
        assert result.exit_code == 2


@pytest.mark.integration
class TestExitCodes:
    """Tests for error-to-exit-code mapping."""

    def test_parse_error(self, runner, tmp_path):
        """Test that a malformed graph file exits 3 with the line number."""
        graph = tmp_path / "bad.txt"
        graph.write_text("0 1\nzz\n")
        result = runner.invoke(cli, ["run", "--graph", str(graph)])
        assert result.exit_code == 3
        assert "line 2" in result.output

    def test_strict_op_failure(self, runner, k4_files, tmp_path):
        """Test that an invalid op exits 4 in strict mode and 0 when lenient."""
        graph, _ = k4_files
        ops = tmp_path / "ops.txt"
        ops.write_text("re 0 1\n")
        assert runner.invoke(cli, ["run", "--graph", graph, "--ops", str(ops)]).exit_code == 4
        assert runner.invoke(cli, ["run", "--graph", graph, "--ops", str(ops), "--lenient"]).exit_code == 0

    def test_missing_file(self, runner):
        """Test an unreadable graph path."""
        result = runner.invoke(cli, ["run", "--graph", "does-not-exist.txt"])
        assert result.exit_code == 3

    def test_bad_mix(self, runner, k4_files):
        """Test that an invalid op mix is a usage-level failure."""
        graph, _ = k4_files
        result = runner.invoke(cli, ["run", "--graph", graph, "--gen-ops", "5", "--mix", "1,1"])
        assert result.exit_code == 2


@pytest.mark.unit
class TestSettings:
    """Tests for environment overrides."""

    def test_env_prefix(self, monkeypatch):
        """Test that DYNMIS_ variables override defaults."""
        monkeypatch.setenv("DYNMIS_ENGINE", "twoswap")
        monkeypatch.setenv("DYNMIS_CHECK_EVERY", "7")
        monkeypatch.setenv("DYNMIS_MIX", "0,0,0.5,0.5")
        monkeypatch.setenv("DYNMIS_REPEAT", "3")
        s = Settings()
        assert s.ENGINE == "twoswap"
        assert s.CHECK_EVERY == 7
        assert (s.MIX, s.REPEAT) == ("0,0,0.5,0.5", 3)

    def test_run_options_from_env(self, runner, k4_files):
        """Test a run configured entirely through DYNMIS_ variables."""
        graph, seed_is = k4_files
        env = {
            "DYNMIS_GRAPH": graph,
            "DYNMIS_ENGINE": "twoswap",
            "DYNMIS_INIT": "file",
            "DYNMIS_INIT_FILE": seed_is,
            "DYNMIS_GEN_OPS": "12",
            "DYNMIS_MIX": "0,0,0.5,0.5",
            "DYNMIS_CHECK_EVERY": "4",
            "DYNMIS_SEED": "2",
        }
        result = runner.invoke(cli, ["run"], env=env)
        assert result.exit_code == 0, result.output
        lines = result.stdout.splitlines()
        assert len(lines) == 14
        assert lines[4].endswith(",ok")
        assert lines[-1].startswith("# steps=12 ")

    def test_flag_beats_env(self, runner, k4_files):
        """Test that an explicit option wins over its variable."""
        graph, _ = k4_files
        result = runner.invoke(cli, ["run", "--graph", graph, "--gen-ops", "3"], env={"DYNMIS_GEN_OPS": "9"})
        assert result.exit_code == 0, result.output
        assert "# steps=3 " in result.stdout

    def test_defaults(self):
        """Test the oracle caps."""
        s = Settings(_env_file=None)
        assert (s.ORACLE_CAP, s.NAIVE_CAP) == (40, 24)
