"""Energy probe invoked by a simulation run."""

import logging
from typing import Optional

import numpy as np

from nsf_rarefaction.domain.energy.relative_energy import (
    ballistic_energy_density,
    l1_distances_to,
    relative_energy_density,
)
from nsf_rarefaction.domain.energy.value_objects import BallisticData, EnergyReport
from nsf_rarefaction.domain.flow.field import FluidField
from nsf_rarefaction.domain.flow.fluxes import STRESS_FACTOR, FaceGradients
from nsf_rarefaction.domain.flow.value_objects import Grid
from nsf_rarefaction.domain.thermo import EosParams, HybridEos
from nsf_rarefaction.domain.wave import RarefactionWave

logger = logging.getLogger(__name__)


class EnergyProbe:
    """Relative energy, L1 distances, ballistic energy and accumulated dissipation.

    At t = 0 the comparison target is the Riemann datum.
    """

    def __init__(
        self,
        wave: RarefactionWave,
        params: EosParams,
        grid: Grid,
        ballistic: Optional[BallisticData] = None,
    ):
        self.wave = wave
        self.eos = HybridEos(params)
        self.eps = params.eps
        self.grid = grid
        self.ballistic = ballistic or BallisticData.for_wave(wave)
        x = grid.centers
        self._u_B = self.ballistic.u_B(x)
        self._theta_B = self.ballistic.theta_B(x)
        self._theta_B_faces = self.ballistic.theta_B(grid.faces)
        self.dissipation_accum = 0.0

    def entropy_production(self, faces: FaceGradients) -> np.ndarray:
        """(theta_B/theta)(sigma du + eps kappa |d theta|^2 / theta) per face; non-negative."""
        eos = self.eos
        theta = faces.theta
        viscous = self.eps * (STRESS_FACTOR * eos.viscosity(theta) + eos.bulk_viscosity(theta)) * faces.du ** 2
        thermal = self.eps * eos.conductivity(theta) * faces.dtheta ** 2 / theta
        return self._theta_B_faces / theta * (viscous + thermal)

    def accumulate(self, faces: FaceGradients, dt: float) -> None:
        if self.eps > 0:
            self.dissipation_accum += dt * faces.h * float(np.sum(self.entropy_production(faces)))

    def report(self, field: FluidField, t: float) -> EnergyReport:
        x = field.grid.centers
        h = field.grid.h
        target = self.wave.evaluate(t, x) if t > 0 else self.wave.riemann_datum(x)
        rho, u, theta = field.primitives
        relative = relative_energy_density(rho, theta, u, target.rho, target.theta, target.u, self.eos)
        ballistic = ballistic_energy_density(rho, theta, u, self._u_B, self._theta_B, self.eos)
        distances = l1_distances_to(field, target)
        return EnergyReport(
            eps=self.eps,
            t=float(t),
            E_rel_total=float(np.sum(relative) * h),
            L1_rho=distances.L1_rho,
            L1_theta=distances.L1_theta,
            L1_m=distances.L1_m,
            ballistic_total=float(np.sum(ballistic) * h),
            dissipation_accum=self.dissipation_accum,
        )
