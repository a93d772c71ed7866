"""Repository interface for experiment outputs."""

from abc import ABC, abstractmethod
from typing import Dict, List, Sequence

from nsf_rarefaction.domain.energy import EnergyReport
from nsf_rarefaction.domain.reports.value_objects import RateEstimate
from nsf_rarefaction.domain.shared.verification import VerificationReport


class ReportRepository(ABC):
    """Abstract storage of run trajectories, aggregate tables and rate estimates."""

    @abstractmethod
    def save_run(self, eps: float, reports: Sequence[EnergyReport]) -> None:
        """Store the full trajectory of one run."""
        pass

    @abstractmethod
    def load_runs(self) -> Dict[float, List[EnergyReport]]:
        """Load every stored trajectory keyed by eps."""
        pass

    @abstractmethod
    def save_aggregate(self, table: Sequence[EnergyReport]) -> None:
        """Store the probe-time table of a sweep."""
        pass

    @abstractmethod
    def load_aggregate(self) -> List[EnergyReport]:
        pass

    @abstractmethod
    def save_rates(self, rates: Sequence[RateEstimate]) -> None:
        pass

    @abstractmethod
    def load_rates(self) -> List[RateEstimate]:
        pass

    @abstractmethod
    def save_long(self, table: Sequence[EnergyReport]) -> None:
        """Store the plot-ready long format (eps, t, metric, value)."""
        pass

    @abstractmethod
    def save_aborts(self, records: Sequence[dict]) -> None:
        pass

    @abstractmethod
    def save_verification(self, name: str, report: VerificationReport) -> None:
        pass

    @abstractmethod
    def save_snapshots(self, eps: float, snapshots: Sequence) -> None:
        pass

    @abstractmethod
    def save_wave_profile(self, t: float, x, profile) -> None:
        """Store the exact wave sampled at time t."""
        pass

    @abstractmethod
    def save_readme(self) -> None:
        """Document the schemas of every emitted file."""
        pass
