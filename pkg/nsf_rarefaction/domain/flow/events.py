"""Domain events raised by a simulation run."""

from typing import Any, Dict

from nsf_rarefaction.domain.shared import DomainEvent


class RunStarted(DomainEvent):
    """Event raised when integration begins at the start time t."""

    def __init__(self, run_id: str, eps: float, N: int, T: float, t: float = 0.0):
        super().__init__(run_id, t)
        self.eps = eps
        self.N = N
        self.T = T

    def _get_payload(self) -> Dict[str, Any]:
        return {"eps": self.eps, "N": self.N, "T": self.T}


class ReportRecorded(DomainEvent):
    """Event raised when the probe records an energy report."""

    def __init__(self, run_id: str, t: float, E_rel_total: float, steps: int):
        super().__init__(run_id, t)
        self.E_rel_total = E_rel_total
        self.steps = steps

    def _get_payload(self) -> Dict[str, Any]:
        return {"E_rel_total": self.E_rel_total, "steps": self.steps}


class PositivityLost(DomainEvent):
    """Event raised when a run aborts on a non-positive density or temperature."""

    def __init__(self, run_id: str, eps: float, record: Dict[str, Any]):
        super().__init__(run_id, record["t"])
        self.eps = eps
        self.record = {k: v for k, v in record.items() if k != "t"}

    def _get_payload(self) -> Dict[str, Any]:
        return {"eps": self.eps, **self.record}


class RunCompleted(DomainEvent):
    """Event raised when a run reaches its final time."""

    def __init__(self, run_id: str, t: float, steps: int, mass_closure: float):
        super().__init__(run_id, t)
        self.steps = steps
        self.mass_closure = mass_closure

    def _get_payload(self) -> Dict[str, Any]:
        return {"steps": self.steps, "mass_closure": self.mass_closure}
