"""Command for a single run of the NSF integrator."""

import logging
from dataclasses import dataclass
from typing import Optional

from nsf_rarefaction.domain.reports import ReportRepository
from nsf_rarefaction.domain.shared.exceptions import InvalidValueException
from nsf_rarefaction.infrastructure.event_bus import EventBus
from nsf_rarefaction.schemas import SweepConfig
from nsf_rarefaction.application.harness.commands.run_sweep import RunOutcome, run_single

logger = logging.getLogger(__name__)


@dataclass
class SimulateCommand:
    """Command to integrate one eps of a configuration, keeping snapshots."""

    config: SweepConfig
    eps: float
    snapshots: bool = True


class SimulateHandler:
    """Handler for SimulateCommand."""

    def __init__(self, repository: Optional[ReportRepository], event_bus: EventBus):
        self.repository = repository
        self.event_bus = event_bus

    def handle(self, command: SimulateCommand) -> RunOutcome:
        if not command.eps >= 0:
            raise InvalidValueException(f"Invalid eps: {command.eps}. Must be non-negative.")
        outcome = run_single(command.config, command.eps, keep_snapshots=command.snapshots)
        self.event_bus.publish_all(outcome.events)

        if self.repository is not None:
            self.repository.save_run(command.eps, outcome.reports)
            if outcome.snapshots:
                self.repository.save_snapshots(command.eps, outcome.snapshots)
            if outcome.aborted:
                self.repository.save_aborts([outcome.failure])
        return outcome
