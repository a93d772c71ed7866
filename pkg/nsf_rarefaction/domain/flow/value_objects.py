"""Grid, boundary data and solver configuration."""

from dataclasses import dataclass, field
from typing import Optional, Tuple

import numpy as np

from nsf_rarefaction.core.enums import InitMode, Reconstruction
from nsf_rarefaction.domain.shared import ValueObject
from nsf_rarefaction.domain.shared.exceptions import ConfigurationError, InvalidValueException
from nsf_rarefaction.domain.thermo import EosParams
from nsf_rarefaction.domain.wave import RarefactionWave


@dataclass(frozen=True)
class Grid(ValueObject):
    """Uniform cell-centred grid on [-L, L]."""

    L: float
    N: int

    MIN_CELLS = 16

    def __post_init__(self):
        if self.N < self.MIN_CELLS:
            raise InvalidValueException(f"Invalid N: {self.N}. Need at least {self.MIN_CELLS} cells.")
        if not self.L > 0:
            raise InvalidValueException(f"Invalid half-width L: {self.L}. Must be positive.")

    @property
    def h(self) -> float:
        return 2.0 * self.L / self.N

    @property
    def centers(self) -> np.ndarray:
        return -self.L + (np.arange(self.N) + 0.5) * self.h

    @property
    def faces(self) -> np.ndarray:
        """N + 1 face positions, boundary faces included."""
        return -self.L + np.arange(self.N + 1) * self.h


@dataclass(frozen=True)
class BoundaryData(ValueObject):
    """Inflow triple on the left, temperature and velocity on the right."""

    rho_L: float
    theta_L: float
    u_L: float
    theta_R: float
    u_R: float

    @classmethod
    def from_wave(cls, wave: RarefactionWave) -> "BoundaryData":
        left, right = wave.ends.left, wave.ends.right
        return cls(
            rho_L=left.rho,
            theta_L=left.theta,
            u_L=left.u,
            theta_R=right.theta,
            u_R=right.u,
        )

    def matches(self, other: "BoundaryData", rtol: float = 1e-12) -> bool:
        mine, theirs = self.to_dict(), other.to_dict()
        return all(abs(mine[k] - theirs[k]) <= rtol * max(1.0, abs(theirs[k])) for k in mine)


@dataclass(frozen=True)
class SolverConfig(ValueObject):
    """Everything one run of the finite-volume integrator needs."""

    grid: Grid
    params: EosParams
    boundary: BoundaryData
    T: float
    cfl: float = 0.5
    init_mode: InitMode = InitMode.MOLLIFIED_RIEMANN
    width: Optional[float] = None
    t0: Optional[float] = None
    output_times: Tuple[float, ...] = field(default_factory=tuple)
    reconstruction: Reconstruction = Reconstruction.MUSCL

    def __post_init__(self):
        object.__setattr__(self, "init_mode", InitMode(self.init_mode))
        object.__setattr__(self, "reconstruction", Reconstruction(self.reconstruction))
        object.__setattr__(self, "output_times", tuple(sorted(float(t) for t in self.output_times)))
        if not 0 < self.cfl <= 1:
            raise ConfigurationError("cfl", f"must lie in (0, 1], got {self.cfl}")
        if not self.T >= 0:
            raise ConfigurationError("T", f"must be non-negative, got {self.T}")
        if not self.boundary.u_L > 0:
            raise ConfigurationError("u_L", "must be positive (inflow on the left boundary)")
        if self.init_mode is InitMode.MOLLIFIED_RIEMANN:
            if self.width is not None and not self.width > 0:
                raise ConfigurationError("width", f"must be positive, got {self.width}")
        elif self.t0 is None or not 0 < self.t0 < self.T:
            raise ConfigurationError("t0", f"must lie in (0, T={self.T}), got {self.t0}")
        for t in self.output_times:
            if not self.t_start < t <= self.T:
                raise ConfigurationError("output_times", f"{t} outside ({self.t_start}, {self.T}]")

    @classmethod
    def for_wave(cls, wave: RarefactionWave, params: EosParams, N: int, **kwargs) -> "SolverConfig":
        kwargs.setdefault("T", wave.T)
        return cls(
            grid=Grid(L=wave.L, N=N),
            params=params,
            boundary=BoundaryData.from_wave(wave),
            **kwargs,
        )

    @property
    def t_start(self) -> float:
        return self.t0 if self.init_mode is InitMode.EXACT_WAVE else 0.0

    @property
    def mollifier_width(self) -> float:
        if self.width is not None:
            return self.width
        return max(4.0 * self.grid.h, 0.01 * self.grid.L)

    def report_times(self) -> Tuple[float, ...]:
        """Output times after the start, always ending with T."""
        times = [t for t in self.output_times if t < self.T]
        if self.T > self.t_start:
            times.append(self.T)
        return tuple(times)
