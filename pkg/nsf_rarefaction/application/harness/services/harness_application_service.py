"""Harness Application Service - Facade for all experiment operations."""

from abc import ABC, abstractmethod
from pathlib import Path
from typing import Callable, List, Optional, Sequence, Tuple, Union

from nsf_rarefaction.domain.reports import RateEstimate, ReportRepository
from nsf_rarefaction.domain.shared.verification import VerificationReport
from nsf_rarefaction.domain.wave import RarefactionWave, WaveProfile
from nsf_rarefaction.infrastructure.event_bus import EventBus
from nsf_rarefaction.infrastructure.persistence import parse_config
from nsf_rarefaction.schemas import SweepConfig

from nsf_rarefaction.application.harness.commands.verify_eos import VerifyEosCommand, VerifyEosHandler
from nsf_rarefaction.application.harness.commands.verify_inequality import (
    VerifyInequalityCommand,
    VerifyInequalityHandler,
)
from nsf_rarefaction.application.harness.commands.sample_wave import SampleWaveCommand, SampleWaveHandler
from nsf_rarefaction.application.harness.commands.simulate import SimulateCommand, SimulateHandler
from nsf_rarefaction.application.harness.commands.run_sweep import (
    RunOutcome,
    RunSweepCommand,
    RunSweepHandler,
    SweepResult,
)
from nsf_rarefaction.application.harness.commands.rebuild_report import (
    RebuildReportCommand,
    RebuildReportHandler,
    RebuiltReport,
)
from nsf_rarefaction.application.harness.queries.estimate_rates import EstimateRatesQuery, RateQueryHandler

PathLike = Union[str, Path]


class IHarnessApplicationService(ABC):
    """Interface for the Harness Application Service."""

    @abstractmethod
    def load_config(self, path: PathLike) -> SweepConfig:
        """Parse and validate an INI configuration."""
        pass

    @abstractmethod
    def verify_eos(self, command: VerifyEosCommand, out: Optional[PathLike] = None) -> List[VerificationReport]:
        pass

    @abstractmethod
    def verify_inequality(
        self, command: VerifyInequalityCommand, out: Optional[PathLike] = None
    ) -> List[VerificationReport]:
        pass

    @abstractmethod
    def sample_wave(
        self, config: SweepConfig, t: float, out: Optional[PathLike] = None
    ) -> Tuple[RarefactionWave, WaveProfile, VerificationReport]:
        pass

    @abstractmethod
    def simulate(self, config: SweepConfig, eps: float, out: Optional[PathLike] = None) -> RunOutcome:
        pass

    @abstractmethod
    def sweep(self, config: SweepConfig, workers: int = 0, out: Optional[PathLike] = None) -> SweepResult:
        """Run every eps of the configuration and write the report files."""
        pass

    @abstractmethod
    def rebuild_report(self, directory: PathLike) -> RebuiltReport:
        pass

    @abstractmethod
    def estimate_rates(self, directory: PathLike, metrics: Optional[Sequence[str]] = None) -> List[RateEstimate]:
        pass


class HarnessApplicationService(IHarnessApplicationService):
    """
    Application service that orchestrates the experiment commands.

    Each output directory gets its own repository from ``repository_factory``;
    domain events of the runs go to ``event_bus``.
    """

    def __init__(self, repository_factory: Callable[[PathLike], ReportRepository], event_bus: EventBus):
        self.repository_factory = repository_factory
        self.event_bus = event_bus

    def _repository(self, out: Optional[PathLike]) -> Optional[ReportRepository]:
        return self.repository_factory(out) if out is not None else None

    def load_config(self, path: PathLike) -> SweepConfig:
        return parse_config(path)

    def verify_eos(self, command: VerifyEosCommand, out: Optional[PathLike] = None) -> List[VerificationReport]:
        return VerifyEosHandler(self._repository(out)).handle(command)

    def verify_inequality(
        self, command: VerifyInequalityCommand, out: Optional[PathLike] = None
    ) -> List[VerificationReport]:
        return VerifyInequalityHandler(self._repository(out)).handle(command)

    def sample_wave(
        self, config: SweepConfig, t: float, out: Optional[PathLike] = None
    ) -> Tuple[RarefactionWave, WaveProfile, VerificationReport]:
        return SampleWaveHandler(self._repository(out)).handle(SampleWaveCommand(config, t))

    def simulate(self, config: SweepConfig, eps: float, out: Optional[PathLike] = None) -> RunOutcome:
        return SimulateHandler(self._repository(out), self.event_bus).handle(SimulateCommand(config, eps))

    def sweep(self, config: SweepConfig, workers: int = 0, out: Optional[PathLike] = None) -> SweepResult:
        repository = self.repository_factory(out if out is not None else config.output.directory)
        return RunSweepHandler(repository, self.event_bus).handle(RunSweepCommand(config, workers))

    def rebuild_report(self, directory: PathLike) -> RebuiltReport:
        return RebuildReportHandler(self.repository_factory(directory)).handle(RebuildReportCommand())

    def estimate_rates(self, directory: PathLike, metrics: Optional[Sequence[str]] = None) -> List[RateEstimate]:
        return RateQueryHandler(self.repository_factory(directory)).handle(EstimateRatesQuery(metrics))
