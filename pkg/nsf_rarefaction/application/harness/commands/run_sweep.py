"""Command for the eps-sweep convergence experiment."""

import logging
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import repeat
from typing import Dict, List, Optional, Sequence

from nsf_rarefaction.core.enums import RunStatus
from nsf_rarefaction.domain.energy import EnergyProbe, EnergyReport, UniformBoundVerdict, uniform_bound_probe
from nsf_rarefaction.domain.flow import Grid, SimulationRun, Snapshot, SolverConfig
from nsf_rarefaction.domain.reports import RateEstimate, ReportRepository
from nsf_rarefaction.domain.shared import DomainEvent
from nsf_rarefaction.domain.shared.exceptions import PositivityFailure
from nsf_rarefaction.infrastructure.event_bus import EventBus
from nsf_rarefaction.schemas import SweepConfig
from nsf_rarefaction.application.harness.queries.estimate_rates import estimate_rates

logger = logging.getLogger(__name__)

# ratio h / min(eps) above which dissipation layers are under-resolved
RESOLUTION_RATIO = 0.25


@dataclass
class RunOutcome:
    """Result of one run, returned across the process boundary."""

    eps: float
    status: RunStatus
    reports: List[EnergyReport]
    steps: int
    mass_closure: Optional[float] = None
    failure: Optional[dict] = None
    events: List[DomainEvent] = field(default_factory=list)
    snapshots: List[Snapshot] = field(default_factory=list)

    @property
    def aborted(self) -> bool:
        return self.status is RunStatus.ABORTED


def solver_config(config: SweepConfig, eps: float) -> SolverConfig:
    wave = config.build_wave()
    return SolverConfig.for_wave(
        wave,
        config.eos_params(eps),
        N=config.grid.N,
        T=config.grid.T,
        cfl=config.grid.cfl,
        init_mode=config.sweep.init_mode,
        width=config.sweep.width,
        t0=config.sweep.t0,
        output_times=tuple(config.sweep.probe_times),
        reconstruction=config.grid.reconstruction,
    )


def run_single(config: SweepConfig, eps: float, keep_snapshots: bool = False) -> RunOutcome:
    """Integrate one eps of the sweep. Top-level so worker processes can import it."""
    wave = config.build_wave()
    settings = solver_config(config, eps)
    probe = EnergyProbe(wave, settings.params, settings.grid)
    run = SimulationRun(settings, wave, probe, keep_snapshots=keep_snapshots)
    try:
        run.run()
    except PositivityFailure as exc:
        logger.warning("Run eps=%g aborted: %s", eps, exc.message)
    failure = {"eps": eps, **run.failure} if run.failure else None
    return RunOutcome(
        eps=eps,
        status=run.status,
        reports=list(run.reports),
        steps=run.steps,
        mass_closure=run.ledger.closure if run.status is RunStatus.COMPLETED else None,
        failure=failure,
        events=run.pull_events(),
        snapshots=run.snapshots,
    )


def probe_rows(reports: Sequence[EnergyReport], probe_times: Sequence[float]) -> List[EnergyReport]:
    """Reports taken at the configured probe times."""
    return [r for r in reports if any(math.isclose(r.t, t, rel_tol=1e-12, abs_tol=0.0) for t in probe_times)]


def monotonicity_witnesses(table: Sequence[EnergyReport], eps_order: Sequence[float]) -> List[dict]:
    """Pairs of consecutive eps at which a metric grows as eps decreases."""
    by_key: Dict[tuple, EnergyReport] = {(r.eps, r.t): r for r in table}
    times = sorted({r.t for r in table})
    witnesses = []
    for t in times:
        present = [eps for eps in eps_order if (eps, t) in by_key]
        for a, b in zip(present, present[1:]):
            for metric in EnergyReport.METRICS:
                va = getattr(by_key[(a, t)], metric)
                vb = getattr(by_key[(b, t)], metric)
                if vb > va:
                    witnesses.append({"metric": metric, "t": t, "eps": (a, b), "values": (va, vb)})
    return witnesses


@dataclass
class SweepResult:
    eps: List[float]
    table: List[EnergyReport]
    trajectories: Dict[float, List[EnergyReport]]
    aborts: List[dict]
    rates: List[RateEstimate]
    bound: Optional[UniformBoundVerdict]
    bound_without_dissipation: Optional[UniformBoundVerdict]
    mass_closure: Dict[float, float]
    warnings: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        """No run aborted and the uniform bound held."""
        return not self.aborts and (self.bound is None or self.bound.passed)

    def summary(self) -> str:
        lines = [f"sweep over eps={self.eps}"]
        for eps, closure in self.mass_closure.items():
            lines.append(f"  eps={eps:g}: mass closure {closure:.3e}")
        for record in self.aborts:
            lines.append(f"  eps={record['eps']:g}: ABORTED at t={record['t']:.6g} cell {record['cell']}")
        for rate in self.rates:
            if rate.metric == "E_rel_total":
                slope = "nan" if rate.degenerate else f"{rate.slope:.4f}"
                lines.append(f"  rate E_rel_total t={rate.t:g}: slope {slope}")
        for text in self.warnings:
            lines.append(f"  warning: {text}")
        if self.bound is not None:
            lines.append(self.bound.summary())
        lines.append("RESULT: " + ("PASS" if self.passed else "FAIL"))
        return "\n".join(lines)


@dataclass
class RunSweepCommand:
    """Command to run the sweep of a validated configuration."""

    config: SweepConfig
    workers: int = 0


class RunSweepHandler:
    """Handler for RunSweepCommand."""

    def __init__(self, repository: Optional[ReportRepository], event_bus: EventBus):
        self.repository = repository
        self.event_bus = event_bus

    def _outcomes(self, config: SweepConfig, workers: int) -> List[RunOutcome]:
        eps_list = list(config.sweep.eps)
        if workers <= 0:
            workers = min(len(eps_list), os.cpu_count() or 1)
        if workers == 1 or len(eps_list) == 1:
            return [run_single(config, eps) for eps in eps_list]
        logger.info("Running %d eps values on %d workers", len(eps_list), workers)
        with ProcessPoolExecutor(max_workers=workers) as executor:
            # map keeps the configured eps order
            return list(executor.map(run_single, repeat(config), eps_list))

    def handle(self, command: RunSweepCommand) -> SweepResult:
        config = command.config
        warnings: List[str] = []

        h = Grid(L=config.build_wave().L, N=config.grid.N).h
        if h > RESOLUTION_RATIO * min(config.sweep.eps):
            text = f"h={h:.4g} exceeds min(eps)/4={RESOLUTION_RATIO * min(config.sweep.eps):.4g}; dissipation layers are under-resolved"
            logger.warning(text)
            warnings.append(text)

        outcomes = self._outcomes(config, command.workers)
        for outcome in outcomes:
            self.event_bus.publish_all(outcome.events)

        completed = [o for o in outcomes if not o.aborted]
        aborts = [o.failure for o in outcomes if o.aborted]
        trajectories = {o.eps: o.reports for o in completed}
        table = [r for o in completed for r in probe_rows(o.reports, config.sweep.probe_times)]

        for witness in monotonicity_witnesses(table, config.sweep.eps):
            (a, b), (va, vb) = witness["eps"], witness["values"]
            text = f"{witness['metric']} at t={witness['t']:g} grows from {va:.6g} (eps={a:g}) to {vb:.6g} (eps={b:g})"
            logger.warning("Monotonicity: %s", text)
            warnings.append(text)

        rates: List[RateEstimate] = []
        if len(completed) >= 3:
            rates = estimate_rates(table)
            for rate in rates:
                if rate.metric == "E_rel_total" and not rate.degenerate and rate.slope <= 0:
                    text = f"non-positive E_rel_total rate {rate.slope:.4g} at t={rate.t:g}"
                    logger.warning(text)
                    warnings.append(text)
        else:
            logger.info("Fewer than 3 completed runs; rates not estimated")

        bound = bound_plain = None
        if trajectories:
            bound = uniform_bound_probe(trajectories, include_dissipation=True)
            bound_plain = uniform_bound_probe(trajectories, include_dissipation=False)

        result = SweepResult(
            eps=list(config.sweep.eps),
            table=table,
            trajectories=trajectories,
            aborts=aborts,
            rates=rates,
            bound=bound,
            bound_without_dissipation=bound_plain,
            mass_closure={o.eps: o.mass_closure for o in completed},
            warnings=warnings,
        )
        if self.repository is not None:
            self._save(result)
        return result

    def _save(self, result: SweepResult) -> None:
        repository = self.repository
        for eps, reports in result.trajectories.items():
            repository.save_run(eps, reports)
        repository.save_aggregate(result.table)
        repository.save_rates(result.rates)
        repository.save_long(result.table)
        repository.save_aborts(result.aborts)
        repository.save_readme()

