"""Command for rebuilding derived tables of a stored sweep."""

import logging
from dataclasses import dataclass
from typing import List, Optional

from nsf_rarefaction.domain.energy import EnergyReport, UniformBoundVerdict, uniform_bound_probe
from nsf_rarefaction.domain.reports import RateEstimate, ReportRepository
from nsf_rarefaction.domain.shared.exceptions import BusinessRuleViolation
from nsf_rarefaction.application.harness.queries.estimate_rates import MIN_EPS, estimate_rates

logger = logging.getLogger(__name__)


@dataclass
class RebuiltReport:
    table: List[EnergyReport]
    rates: List[RateEstimate]
    bound: Optional[UniformBoundVerdict]

    @property
    def passed(self) -> bool:
        return self.bound is None or self.bound.passed

    def summary(self) -> str:
        lines = [f"{len(self.table)} aggregate rows, {len(self.rates)} rate estimates"]
        for rate in self.rates:
            slope = "nan" if rate.degenerate else f"{rate.slope:.4f}"
            lines.append(f"  {rate.metric:<12} t={rate.t:<8g} slope={slope} rms={rate.residual_rms:.3g} {rate.note}".rstrip())
        if self.bound is not None:
            lines.append(self.bound.summary())
        lines.append("RESULT: " + ("PASS" if self.passed else "FAIL"))
        return "\n".join(lines)


@dataclass
class RebuildReportCommand:
    """Command to recompute rates, long format and README from stored runs."""

    pass


class RebuildReportHandler:
    """Handler for RebuildReportCommand."""

    def __init__(self, repository: ReportRepository):
        self.repository = repository

    def handle(self, command: RebuildReportCommand) -> RebuiltReport:
        table = self.repository.load_aggregate()
        runs = self.repository.load_runs()
        if not table and not runs:
            raise BusinessRuleViolation("No stored sweep found (aggregate.csv and runs/ are empty or missing).")

        rates: List[RateEstimate] = []
        if len({r.eps for r in table}) >= MIN_EPS:
            rates = estimate_rates(table)
        else:
            logger.info("Fewer than %d eps values in the aggregate table; rates not estimated", MIN_EPS)
        bound = uniform_bound_probe(runs) if runs else None

        self.repository.save_rates(rates)
        self.repository.save_long(table)
        self.repository.save_readme()
        return RebuiltReport(table=table, rates=rates, bound=bound)
