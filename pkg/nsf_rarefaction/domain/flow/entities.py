"""Simulation run aggregate."""

import logging
from dataclasses import dataclass
from typing import List, Optional, Protocol

import numpy as np

from nsf_rarefaction.core.enums import RunStatus
from nsf_rarefaction.domain.flow.events import PositivityLost, ReportRecorded, RunCompleted, RunStarted
from nsf_rarefaction.domain.flow.field import FluidField
from nsf_rarefaction.domain.flow.fluxes import FaceGradients
from nsf_rarefaction.domain.flow.solver import NsfSolver, initialize
from nsf_rarefaction.domain.flow.value_objects import SolverConfig
from nsf_rarefaction.domain.shared import Entity
from nsf_rarefaction.domain.shared.exceptions import BusinessRuleViolation, PositivityFailure
from nsf_rarefaction.domain.wave import RarefactionWave

logger = logging.getLogger(__name__)

# remaining time below this fraction of T counts as arrival
TIME_SNAP = 1e-12


class Probe(Protocol):
    """Diagnostics invoked by the run: per-step accumulation and timed reports."""

    def accumulate(self, faces: FaceGradients, dt: float) -> None:
        ...

    def report(self, field: FluidField, t: float):
        ...


@dataclass(frozen=True)
class Snapshot:
    t: float
    x: np.ndarray
    rho: np.ndarray
    u: np.ndarray
    theta: np.ndarray


@dataclass
class MassLedger:
    """Interior mass against the time-integrated boundary mass fluxes."""

    initial: float
    inflow: float = 0.0
    outflow: float = 0.0
    interior: float = 0.0

    @property
    def closure(self) -> float:
        """Relative defect of interior + outflow = initial + inflow."""
        return abs(self.interior + self.outflow - self.initial - self.inflow) / self.initial


class SimulationRun(Entity):
    """One integration of the NSF system from initialization to the final time."""

    def __init__(
        self,
        config: SolverConfig,
        wave: RarefactionWave,
        probe: Probe,
        run_id: Optional[str] = None,
        keep_snapshots: bool = False,
    ):
        super().__init__(run_id or f"eps={config.params.eps!r}")
        self.config = config
        self.wave = wave
        self.probe = probe
        self.keep_snapshots = keep_snapshots
        self.solver = NsfSolver(config)
        self.status = RunStatus.PENDING
        self.t = config.t_start
        self.steps = 0
        self.reports: List = []
        self.snapshots: List[Snapshot] = []
        self.failure: Optional[dict] = None
        self.field: Optional[FluidField] = None
        self.ledger: Optional[MassLedger] = None

    @property
    def eps(self) -> float:
        return self.config.params.eps

    def _record(self, field: FluidField) -> None:
        report = self.probe.report(field, self.t)
        self.reports.append(report)
        if self.keep_snapshots:
            rho, u, theta = field.primitives
            self.snapshots.append(Snapshot(self.t, field.grid.centers, rho.copy(), u.copy(), theta.copy()))
        self._raise_event(ReportRecorded(self.id, self.t, report.E_rel_total, self.steps))

    def run(self) -> List:
        """Integrate to T; returns the trajectory of reports.

        A positivity failure marks the run aborted, raises PositivityLost and
        propagates.
        """
        if self.status is not RunStatus.PENDING:
            raise BusinessRuleViolation(f"Run {self.id} was already executed ({self.status.value}).")
        config = self.config
        self.status = RunStatus.RUNNING
        self._raise_event(RunStarted(self.id, self.eps, config.grid.N, config.T, t=self.t))

        field = initialize(config, self.wave)
        self.field = field
        self.ledger = MassLedger(initial=field.total_mass(), interior=field.total_mass())
        self._record(field)

        snap = TIME_SNAP * max(config.T, 1.0)
        try:
            for target in config.report_times():
                while self.t < target:
                    dt = self.solver.stable_dt(field, target - self.t)
                    result = self.solver.step(field, self.t, dt)
                    self.probe.accumulate(result.faces, dt)
                    field = result.field
                    self.ledger.inflow += result.mass_in
                    self.ledger.outflow += result.mass_out
                    self.steps += 1
                    self.t = target if target - (self.t + dt) <= snap else self.t + dt
                self.field = field
                self._record(field)
        except PositivityFailure as exc:
            self.status = RunStatus.ABORTED
            self.failure = exc.to_record()
            self.field = field
            self._raise_event(PositivityLost(self.id, self.eps, self.failure))
            raise

        self.ledger.interior = field.total_mass()
        self.status = RunStatus.COMPLETED
        self._raise_event(RunCompleted(self.id, self.t, self.steps, self.ledger.closure))
        return self.reports


def run(config: SolverConfig, wave: RarefactionWave, probe: Probe) -> List:
    """Integrate one configuration and return its trajectory of reports."""
    return SimulationRun(config, wave, probe).run()
