"""Command for sampling the exact rarefaction wave."""

from dataclasses import dataclass
from typing import Optional, Tuple

from nsf_rarefaction.domain.flow import Grid
from nsf_rarefaction.domain.reports import ReportRepository
from nsf_rarefaction.domain.shared.verification import VerificationReport
from nsf_rarefaction.domain.wave import RarefactionWave, WaveChecks, WaveProfile
from nsf_rarefaction.schemas import SweepConfig


@dataclass
class SampleWaveCommand:
    """Command to evaluate the configured wave at time t on the cell centres."""

    config: SweepConfig
    t: float


class SampleWaveHandler:
    """Handler for SampleWaveCommand."""

    def __init__(self, repository: Optional[ReportRepository] = None):
        self.repository = repository

    def handle(self, command: SampleWaveCommand) -> Tuple[RarefactionWave, WaveProfile, VerificationReport]:
        wave = command.config.build_wave()
        x = Grid(L=wave.L, N=command.config.grid.N).centers
        profile = wave.evaluate(command.t, x)
        report = WaveChecks(wave, command.t).report()
        if self.repository is not None:
            self.repository.save_wave_profile(command.t, x, profile)
        return wave, profile, report
