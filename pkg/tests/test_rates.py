import math

import pytest

from nsf_rarefaction.application.harness.queries.estimate_rates import (
    EstimateRatesQuery,
    RateQueryHandler,
    estimate_rates,
)
from nsf_rarefaction.domain.energy import EnergyReport
from nsf_rarefaction.domain.shared.exceptions import BusinessRuleViolation
from nsf_rarefaction.infrastructure.persistence import CsvReportRepository

pytestmark = pytest.mark.unit

EPS = (0.2, 0.1, 0.05, 0.025)


def _row(eps, t, e_rel, l1_rho, l1_theta=0.0, l1_m=1.0):
    return EnergyReport(
        eps=eps,
        t=t,
        E_rel_total=e_rel,
        L1_rho=l1_rho,
        L1_theta=l1_theta,
        L1_m=l1_m,
        ballistic_total=1.0,
        dissipation_accum=0.0,
    )


@pytest.fixture
def table():
    """E_rel = eps, L1_rho = 3 sqrt(eps), L1_theta = 0, L1_m constant."""
    return [_row(eps, t, eps, 3.0 * math.sqrt(eps)) for eps in EPS for t in (0.1, 0.2)]


def _by_key(rates):
    return {(r.metric, r.t): r for r in rates}


def test_slopes(table):
    rates = _by_key(estimate_rates(table))
    for t in (0.1, 0.2):
        assert rates[("E_rel_total", t)].slope == pytest.approx(1.0, abs=1e-10)
        assert rates[("E_rel_total", t)].residual_rms == pytest.approx(0.0, abs=1e-10)
        assert rates[("L1_rho", t)].slope == pytest.approx(0.5, abs=1e-10)
        assert rates[("L1_rho", t)].intercept == pytest.approx(math.log(3.0), abs=1e-10)
        assert rates[("L1_m", t)].slope == pytest.approx(0.0, abs=1e-10)
        assert rates[("E_rel_total", t)].n_points == 4


def test_order_is_by_time_then_metric(table):
    rates = estimate_rates(list(reversed(table)))
    assert [(r.t, r.metric) for r in rates] == [
        (t, metric) for t in (0.1, 0.2) for metric in EnergyReport.METRICS
    ]


def test_zero_values_are_excluded(table):
    rates = _by_key(estimate_rates(table))
    degenerate = rates[("L1_theta", 0.1)]
    assert degenerate.degenerate
    assert degenerate.n_points == 0
    assert "excluded" in degenerate.note

    # one zero out of four still leaves a fit
    table[0] = _row(0.2, 0.1, 0.0, 3.0 * math.sqrt(0.2))
    rates = _by_key(estimate_rates(table))
    partial = rates[("E_rel_total", 0.1)]
    assert partial.n_points == 3
    assert partial.slope == pytest.approx(1.0, abs=1e-10)
    assert "1 zero" in partial.note


def test_sparse_probe_time_gives_nan(table):
    table.append(_row(0.2, 0.3, 0.2, 1.0))
    rates = _by_key(estimate_rates(table))
    assert rates[("E_rel_total", 0.3)].degenerate
    assert "fewer than 3" in rates[("E_rel_total", 0.3)].note


def test_needs_three_eps_values():
    with pytest.raises(BusinessRuleViolation):
        estimate_rates([_row(eps, 0.1, eps, eps) for eps in (0.2, 0.1)])


def test_query_handler_reads_aggregate(table, tmp_path):
    repository = CsvReportRepository(tmp_path)
    repository.save_aggregate(table)
    rates = RateQueryHandler(repository).handle(EstimateRatesQuery(metrics=["L1_rho"]))
    assert [r.metric for r in rates] == ["L1_rho", "L1_rho"]
    assert rates[0].slope == pytest.approx(0.5, abs=1e-10)
