import pytest

from nsf_rarefaction.application.harness.commands.rebuild_report import (
    RebuildReportCommand,
    RebuildReportHandler,
)
from nsf_rarefaction.application.harness.commands.run_sweep import (
    RunSweepCommand,
    RunSweepHandler,
    monotonicity_witnesses,
    probe_rows,
    run_single,
)
from nsf_rarefaction.core.enums import RunStatus
from nsf_rarefaction.domain.energy import EnergyReport
from nsf_rarefaction.domain.shared.exceptions import BusinessRuleViolation
from nsf_rarefaction.infrastructure.event_bus import EventBus
from nsf_rarefaction.infrastructure.persistence import CsvReportRepository, parse_config_text

pytestmark = pytest.mark.integration


def _row(eps, t, value):
    return EnergyReport(eps, t, value, value, value, value, 1.0, 0.0)


@pytest.fixture
def collected():
    bus = EventBus()
    seen = []
    for name in ("RunStarted", "RunCompleted", "PositivityLost"):
        bus.register(name, seen.append)
    return bus, seen


def test_probe_rows_and_witnesses():
    reports = [_row(0.1, t, 1.0) for t in (0.0, 0.1, 0.2 + 1e-15, 0.3)]
    assert [r.t for r in probe_rows(reports, [0.1, 0.2])] == [0.1, 0.2 + 1e-15]

    table = [_row(0.2, 0.1, 1.0), _row(0.1, 0.1, 2.0), _row(0.05, 0.1, 0.5)]
    witnesses = monotonicity_witnesses(table, [0.2, 0.1, 0.05])
    assert {w["metric"] for w in witnesses} == set(EnergyReport.METRICS)
    assert all(w["eps"] == (0.2, 0.1) for w in witnesses)


def test_run_single(small_config):
    outcome = run_single(small_config, 0.1, keep_snapshots=True)
    assert outcome.status is RunStatus.COMPLETED
    assert not outcome.aborted
    assert [r.t for r in outcome.reports] == pytest.approx([0.0, 0.02, 0.04, 0.06, 0.08, 0.1])
    assert outcome.mass_closure <= 1e-10
    assert len(outcome.snapshots) == len(outcome.reports)
    assert outcome.events[-1].event_name == "RunCompleted"


def test_sweep_writes_every_table(small_config, tmp_path, collected):
    bus, seen = collected
    repository = CsvReportRepository(tmp_path)
    result = RunSweepHandler(repository, bus).handle(RunSweepCommand(small_config, workers=1))

    assert result.aborts == []
    assert len(result.table) == 3 * 4
    assert [(r.eps, r.t) for r in result.table] == [
        (eps, t) for eps in (0.2, 0.1, 0.05) for t in small_config.sweep.probe_times
    ]
    assert all(closure <= 1e-10 for closure in result.mass_closure.values())
    assert len(result.rates) == 4 * len(EnergyReport.METRICS)
    assert result.bound is not None and result.bound_without_dissipation is not None
    assert result.summary().splitlines()[-1] in ("RESULT: PASS", "RESULT: FAIL")

    assert [e["event_name"] for e in seen].count("RunCompleted") == 3
    for name in ("aggregate.csv", "rates.csv", "long.csv", "aborted.csv", "README.md"):
        assert (tmp_path / name).exists(), name
    assert sorted(p.name for p in (tmp_path / "runs").iterdir()) == [
        "run_eps_0.05.csv",
        "run_eps_0.1.csv",
        "run_eps_0.2.csv",
    ]
    assert repository.load_aggregate() == result.table

    rebuilt = RebuildReportHandler(repository).handle(RebuildReportCommand())
    assert rebuilt.table == result.table
    assert [r.slope for r in rebuilt.rates] == pytest.approx([r.slope for r in result.rates], nan_ok=True)
    assert rebuilt.bound.C == pytest.approx(result.bound.C)


def test_sweep_is_independent_of_worker_count(small_config):
    serial = RunSweepHandler(None, EventBus()).handle(RunSweepCommand(small_config, workers=1))
    parallel = RunSweepHandler(None, EventBus()).handle(RunSweepCommand(small_config, workers=2))
    assert parallel.table == serial.table
    assert parallel.mass_closure == serial.mass_closure


def test_two_eps_sweep_skips_rates(small_ini):
    config = parse_config_text(small_ini.replace("eps = 0.2, 0.1, 0.05", "eps = 0.2, 0.1"))
    result = RunSweepHandler(None, EventBus()).handle(RunSweepCommand(config, workers=1))
    assert result.rates == []
    assert len(result.table) == 2 * 4


def test_under_resolved_grid_warns(small_ini):
    config = parse_config_text(small_ini.replace("eps = 0.2, 0.1, 0.05", "eps = 0.01"))
    result = RunSweepHandler(None, EventBus()).handle(RunSweepCommand(config, workers=1))
    assert any("under-resolved" in text for text in result.warnings)


def test_rebuild_needs_stored_sweep(tmp_path):
    with pytest.raises(BusinessRuleViolation):
        RebuildReportHandler(CsvReportRepository(tmp_path)).handle(RebuildReportCommand())


@pytest.mark.slow
def test_default_sweep_converges(minimal_ini):
    """Default wave, N = 1600, eps 0.2 ... 0.025: metrics shrink with eps at every probe time."""
    config = parse_config_text(minimal_ini + "\n[sweep]\neps = 0.2, 0.1, 0.05, 0.025\n")
    result = RunSweepHandler(None, EventBus()).handle(RunSweepCommand(config))
    assert result.aborts == []
    assert monotonicity_witnesses(result.table, config.sweep.eps) == []
    slopes = [r.slope for r in result.rates if r.metric == "E_rel_total"]
    assert len(slopes) == 4
    assert all(slope > 0 for slope in slopes)
    assert all(not r.degenerate for r in result.rates if r.metric == "E_rel_total")
    assert result.bound.passed, result.bound.summary()
    assert result.passed
