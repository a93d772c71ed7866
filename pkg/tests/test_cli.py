import logging

import pytest
from click.testing import CliRunner

from nsf_rarefaction import __version__
from nsf_rarefaction.main import cli

pytestmark = pytest.mark.integration


@pytest.fixture(autouse=True)
def restore_logging():
    """The CLI reconfigures the root logger; undo it after each invocation."""
    root = logging.getLogger()
    handlers, level = root.handlers[:], root.level
    yield
    root.handlers[:] = handlers
    root.setLevel(level)


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def wave_config(tmp_path, minimal_ini):
    path = tmp_path / "wave.ini"
    path.write_text(minimal_ini, encoding="utf-8")
    return path


def test_help_lists_config_defaults(runner):
    result = runner.invoke(cli, ["--help"])
    assert result.exit_code == 0
    assert "grid.N" in result.output
    assert "1600" in result.output
    assert "wave.rho_R" in result.output


def test_version(runner):
    result = runner.invoke(cli, ["--version"])
    assert result.exit_code == 0
    assert __version__ in result.output


def test_verify_inequality(runner, tmp_path):
    out = tmp_path / "ineq"
    result = runner.invoke(cli, ["verify-inequality", "--ztilde", "1.0", "--points", "201", "--out", str(out)])
    assert result.exit_code == 0, result.output
    assert "RESULT: PASS" in result.output
    assert (out / "verify_inequality_Ztilde_1.0.csv").exists()
    assert (out / "verify_inequality_Ztilde_1.0.txt").exists()


def test_verify_eos(runner, tmp_path):
    result = runner.invoke(
        cli,
        ["verify-eos", "--samples", "1000", "--bregman-samples", "2000", "--out", str(tmp_path)],
    )
    assert result.exit_code == 0, result.output
    assert (tmp_path / "verify_eos.csv").exists()
    assert (tmp_path / "verify_bregman.csv").exists()


def test_wave(runner, wave_config, tmp_path):
    result = runner.invoke(cli, ["wave", "--config", str(wave_config), "--t", "0.5", "--out", str(tmp_path)])
    assert result.exit_code == 0, result.output
    assert "family 1" in result.output
    lines = (tmp_path / "wave_t_0.5.csv").read_text(encoding="utf-8").splitlines()
    assert lines[0] == "t,x1,rho,theta,u"
    assert len(lines) == 1 + 1600


def test_simulate(runner, config_file, tmp_path):
    result = runner.invoke(cli, ["simulate", "--config", str(config_file), "--eps", "0.1"])
    assert result.exit_code == 0, result.output
    assert "completed at t=0.1" in result.output
    out = tmp_path / "results"
    assert (out / "runs" / "run_eps_0.1.csv").exists()
    assert (out / "snapshots_eps_0.1.csv").exists()


def test_sweep_and_report(runner, config_file, tmp_path):
    result = runner.invoke(cli, ["sweep", "--config", str(config_file), "--workers", "1"])
    assert result.exit_code in (0, 1), result.output
    assert result.output.rstrip().endswith(("RESULT: PASS", "RESULT: FAIL"))
    assert result.output.count("completed at") == 3
    out = tmp_path / "results"
    assert (out / "aggregate.csv").exists()

    (out / "rates.csv").unlink()
    rebuilt = runner.invoke(cli, ["report", "--in", str(out)])
    assert rebuilt.exit_code == result.exit_code, rebuilt.output
    assert "12 aggregate rows" in rebuilt.output
    assert (out / "rates.csv").exists()


@pytest.mark.parametrize(
    "args",
    [
        ["wave", "--config", "does-not-exist.ini", "--t", "0.1"],
        ["report", "--in", "no-such-directory"],
        ["verify-inequality", "--points", "10"],
    ],
)
def test_domain_errors_exit_with_two(runner, args):
    result = runner.invoke(cli, args)
    assert result.exit_code == 2
    assert "Error:" in result.output


def test_negative_eps_is_rejected(runner, config_file):
    result = runner.invoke(cli, ["simulate", "--config", str(config_file), "--eps=-0.1"])
    assert result.exit_code == 2
    assert "eps" in result.output
