"""Discrete conservative state on a grid."""

import logging
from typing import NamedTuple, Optional, Union

import numpy as np

from nsf_rarefaction.domain.flow.value_objects import Grid
from nsf_rarefaction.domain.shared.exceptions import PositivityFailure, RootFindingError
from nsf_rarefaction.domain.thermo import HybridEos

logger = logging.getLogger(__name__)

ArrayLike = Union[float, np.ndarray]


class Primitives(NamedTuple):
    """Primitive variables (rho, u, theta), per cell or per face."""

    rho: ArrayLike
    u: ArrayLike
    theta: ArrayLike


class FluidField:
    """Conservative variables rho, m = rho u, E = rho u^2 / 2 + rho e per cell.

    The temperature recovered from the last energy inversion is cached and
    serves as the starting guess for the next one.
    """

    def __init__(self, grid: Grid, rho: np.ndarray, m: np.ndarray, E: np.ndarray, theta: np.ndarray):
        self.grid = grid
        self.rho = rho
        self.m = m
        self.E = E
        self.theta = theta

    @classmethod
    def from_primitives(
        cls,
        grid: Grid,
        eos: HybridEos,
        rho: ArrayLike,
        theta: ArrayLike,
        u: ArrayLike,
    ) -> "FluidField":
        rho, theta, u = (np.broadcast_to(np.asarray(v, dtype=float), (grid.N,)).copy() for v in (rho, theta, u))
        m = rho * u
        E = 0.5 * rho * u * u + eos.internal_energy(rho, theta)
        return cls(grid, rho, m, E, theta)

    @property
    def u(self) -> np.ndarray:
        return self.m / self.rho

    @property
    def primitives(self) -> Primitives:
        return Primitives(rho=self.rho, u=self.u, theta=self.theta)

    @property
    def conservative(self) -> np.ndarray:
        return np.stack([self.rho, self.m, self.E])

    def total_mass(self) -> float:
        return float(np.sum(self.rho) * self.grid.h)

    def copy(self) -> "FluidField":
        return FluidField(self.grid, self.rho.copy(), self.m.copy(), self.E.copy(), self.theta.copy())

    @classmethod
    def from_conservative(
        cls,
        grid: Grid,
        eos: HybridEos,
        U: np.ndarray,
        t: float,
        theta_guess: Optional[np.ndarray] = None,
    ) -> "FluidField":
        """Rebuild a field after an update, recovering the temperature.

        Raises PositivityFailure when density or internal energy is not
        positive, or when no admissible temperature exists.
        """
        rho, m, E = U
        bad_rho = ~(rho > 0)
        if np.any(bad_rho):
            cell = int(np.flatnonzero(bad_rho)[0])
            raise PositivityFailure(t, cell, {"rho": float(rho[cell]), "m": float(m[cell]), "E": float(E[cell])})
        rho_e = E - 0.5 * m * m / rho
        bad_e = ~(rho_e > 0)
        if np.any(bad_e):
            cell = int(np.flatnonzero(bad_e)[0])
            raise PositivityFailure(t, cell, {"rho": float(rho[cell]), "u": float(m[cell] / rho[cell]),
                                              "rho_e": float(rho_e[cell])})
        try:
            theta = eos.invert_energy(rho, rho_e, theta_guess=theta_guess)
        except RootFindingError as exc:
            cell = int(np.argmin(rho_e / rho))
            logger.warning("Temperature recovery failed at t=%g: %s", t, exc)
            raise PositivityFailure(t, cell, {"rho": float(rho[cell]), "rho_e": float(rho_e[cell])}) from exc
        return cls(grid, rho.copy(), m.copy(), E.copy(), np.atleast_1d(theta))
