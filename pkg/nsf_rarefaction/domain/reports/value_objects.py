"""Convergence-rate estimates."""

import math
from dataclasses import dataclass, fields
from typing import Dict, List

from nsf_rarefaction.domain.shared import ValueObject


@dataclass(frozen=True)
class RateEstimate(ValueObject):
    """Least-squares slope of log(metric) against log(eps) at one probe time."""

    metric: str
    t: float
    slope: float
    intercept: float
    residual_rms: float
    n_points: int
    note: str = ""

    @property
    def degenerate(self) -> bool:
        return math.isnan(self.slope)

    @classmethod
    def columns(cls) -> List[str]:
        return [f.name for f in fields(cls)]

    def to_row(self) -> Dict[str, str]:
        return {
            "metric": self.metric,
            "t": repr(float(self.t)),
            "slope": repr(float(self.slope)),
            "intercept": repr(float(self.intercept)),
            "residual_rms": repr(float(self.residual_rms)),
            "n_points": str(self.n_points),
            "note": self.note,
        }

    @classmethod
    def from_row(cls, row: Dict[str, str]) -> "RateEstimate":
        return cls(
            metric=row["metric"],
            t=float(row["t"]),
            slope=float(row["slope"]),
            intercept=float(row["intercept"]),
            residual_rms=float(row["residual_rms"]),
            n_points=int(row["n_points"]),
            note=row.get("note", ""),
        )
