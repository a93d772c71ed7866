"""Energy reports and the ballistic weights (u_B, theta_B)."""

import logging
from dataclasses import dataclass, fields
from typing import Callable, Dict, List, Optional

import numpy as np
from scipy.interpolate import CubicHermiteSpline
from scipy.spatial import ConvexHull, QhullError

from nsf_rarefaction.domain.shared import ValueObject
from nsf_rarefaction.domain.shared.exceptions import BusinessRuleViolation
from nsf_rarefaction.domain.wave import RarefactionWave

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class EnergyReport(ValueObject):
    """Time-stamped energy diagnostics of one run."""

    eps: float
    t: float
    E_rel_total: float
    L1_rho: float
    L1_theta: float
    L1_m: float
    ballistic_total: float
    dissipation_accum: float

    METRICS = ("E_rel_total", "L1_rho", "L1_theta", "L1_m")

    @classmethod
    def columns(cls) -> List[str]:
        return [f.name for f in fields(cls)]

    def to_row(self) -> Dict[str, str]:
        """CSV row with round-trip exact float formatting."""
        return {name: repr(float(value)) for name, value in self.to_dict().items()}

    @classmethod
    def from_row(cls, row: Dict[str, str]) -> "EnergyReport":
        return cls(**{name: float(row[name]) for name in cls.columns()})


def lower_convex_hull(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """Values on increasing ``x`` of the greatest convex minorant of the samples (x, y)."""
    try:
        hull = ConvexHull(np.column_stack([x, y]))
    except QhullError:
        # flat samples are their own minorant
        return np.array(y, dtype=float)
    # facets with a downward outward normal form the lower hull
    lower = np.unique(hull.simplices[hull.equations[:, 1] < 0])
    return np.interp(x, x[lower], y[lower])


class BallisticData:
    """Velocity and temperature weights of the ballistic energy.

    u_B is non-decreasing between the boundary velocities; theta_B is
    convex, positive and dominated by the wave temperature at every time in
    (0, T] and by the Riemann datum.
    """

    def __init__(
        self,
        u_B: Callable[[np.ndarray], np.ndarray],
        theta_B: Callable[[np.ndarray], np.ndarray],
        L: float,
    ):
        self.u_B = u_B
        self.theta_B = theta_B
        self.L = L

    @classmethod
    def for_wave(cls, wave: RarefactionWave, samples: int = 4001) -> "BallisticData":
        left, right = wave.ends.left, wave.ends.right
        L, T = wave.L, wave.T
        spline = CubicHermiteSpline([-L, L], [left.u, right.u], [0.0, 0.0])

        x = np.linspace(-L, L, samples)
        envelope = np.minimum(wave.evaluate(T, x).theta, wave.riemann_datum(x).theta)
        nodes = lower_convex_hull(x, envelope)

        # chords of the convex fan sit above it between nodes; pull down by a
        # convex bump that vanishes at +-L
        check = np.linspace(-L, L, 4 * samples - 3)[1:-1]
        bump = 1.0 - (check / L) ** 2
        excess = np.interp(check, x, nodes) - np.minimum(
            wave.evaluate(T, check).theta, wave.riemann_datum(check).theta
        )
        delta = max(float(np.max(excess / bump)), 0.0) + 1e-12

        def theta_B(xq: np.ndarray) -> np.ndarray:
            xq = np.asarray(xq, dtype=float)
            return np.interp(xq, x, nodes) - delta * (1.0 - (xq / L) ** 2)

        def u_B(xq: np.ndarray) -> np.ndarray:
            return spline(np.asarray(xq, dtype=float))

        data = cls(u_B=u_B, theta_B=theta_B, L=L)
        data.validate(wave)
        return data

    def validate(self, wave: RarefactionWave, samples: int = 2001) -> None:
        """Assert boundary values, monotonicity, convexity and domination."""
        L = self.L
        left, right = wave.ends.left, wave.ends.right
        x = np.linspace(-L, L, samples)
        u = self.u_B(x)
        theta = self.theta_B(x)
        tol = 1e-10
        if abs(u[0] - left.u) > tol or abs(u[-1] - right.u) > tol:
            raise BusinessRuleViolation("u_B must match the boundary velocities.")
        if np.any(np.diff(u) * np.sign(right.u - left.u) < -tol):
            raise BusinessRuleViolation("u_B must be monotone between the boundary velocities.")
        if abs(theta[0] - left.theta) > tol or abs(theta[-1] - right.theta) > tol:
            raise BusinessRuleViolation("theta_B must match the boundary temperatures.")
        if np.any(np.diff(theta, 2) < -tol):
            raise BusinessRuleViolation("theta_B must be convex.")
        if np.any(theta <= 0):
            raise BusinessRuleViolation("theta_B must be positive.")
        dominated = [wave.riemann_datum(x).theta] + [
            wave.evaluate(t, x).theta for t in np.linspace(wave.T / 8, wave.T, 8)
        ]
        if any(np.any(theta > ref + tol) for ref in dominated):
            raise BusinessRuleViolation("theta_B must stay below the wave temperature.")
