"""Queries over sweep tables: convergence rates in eps."""

import logging
import math
from collections import defaultdict
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence

import numpy as np

from nsf_rarefaction.domain.energy import EnergyReport
from nsf_rarefaction.domain.reports import RateEstimate, ReportRepository
from nsf_rarefaction.domain.shared.exceptions import BusinessRuleViolation

logger = logging.getLogger(__name__)

MIN_EPS = 3


def _fit(metric: str, t: float, points: Dict[float, float]) -> RateEstimate:
    usable = {eps: v for eps, v in points.items() if v > 0 and math.isfinite(v)}
    dropped = len(points) - len(usable)
    note = f"{dropped} zero or non-finite value(s) excluded" if dropped else ""
    if len(usable) < MIN_EPS:
        note = "; ".join(filter(None, [note, f"fewer than {MIN_EPS} usable eps values"]))
        return RateEstimate(metric, t, float("nan"), float("nan"), float("nan"), len(usable), note)

    x = np.log(np.array(sorted(usable)))
    y = np.log(np.array([usable[eps] for eps in sorted(usable)]))
    slope, intercept = np.polyfit(x, y, 1)
    residual = y - (slope * x + intercept)
    rms = float(np.sqrt(np.mean(residual ** 2)))
    return RateEstimate(metric, float(t), float(slope), float(intercept), rms, len(usable), note)


def estimate_rates(
    table: Sequence[EnergyReport],
    metrics: Sequence[str] = EnergyReport.METRICS,
) -> List[RateEstimate]:
    """Least-squares slope of log(metric) against log(eps) per probe time and metric.

    Zero metrics are excluded from the fit with a note; a probe time left with
    fewer than three eps values yields a nan slope.
    """
    by_time: Dict[float, Dict[float, EnergyReport]] = defaultdict(dict)
    for report in table:
        by_time[report.t][report.eps] = report
    if not any(len(rows) >= MIN_EPS for rows in by_time.values()):
        raise BusinessRuleViolation(
            f"Rate estimation needs at least {MIN_EPS} eps values at a common probe time."
        )

    rates = []
    for t in sorted(by_time):
        rows = by_time[t]
        for metric in metrics:
            estimate = _fit(metric, t, {eps: float(getattr(r, metric)) for eps, r in rows.items()})
            if estimate.note:
                logger.info("Rate %s at t=%g: %s", metric, t, estimate.note)
            rates.append(estimate)
    return rates


@dataclass
class EstimateRatesQuery:
    """Query the rates of a stored sweep."""

    metrics: Optional[Sequence[str]] = None


class RateQueryHandler:
    """Handler for rate queries over a stored aggregate table."""

    def __init__(self, repository: ReportRepository):
        self.repository = repository

    def handle(self, query: EstimateRatesQuery) -> List[RateEstimate]:
        table = self.repository.load_aggregate()
        return estimate_rates(table, query.metrics or EnergyReport.METRICS)
