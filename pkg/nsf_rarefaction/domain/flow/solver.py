"""Explicit finite-volume integrator for the planar Navier-Stokes-Fourier system.

Conservative variables (rho, m, E) are advanced by a two-stage strong
stability preserving Runge-Kutta scheme with Rusanov convective fluxes,
optional minmod MUSCL reconstruction of (rho, u, theta) and centred
dissipative fluxes scaled by eps.
"""

import logging
from dataclasses import dataclass
from typing import NamedTuple, Tuple

import numpy as np

from nsf_rarefaction.core.enums import InitMode
from nsf_rarefaction.domain.flow.boundary import apply_boundary, extend
from nsf_rarefaction.domain.flow.field import FluidField, Primitives
from nsf_rarefaction.domain.flow.fluxes import (
    STRESS_FACTOR,
    FaceGradients,
    convective_flux,
    dissipative_flux,
    face_gradients,
    reconstruct,
)
from nsf_rarefaction.domain.flow.value_objects import BoundaryData, SolverConfig
from nsf_rarefaction.domain.shared.exceptions import BusinessRuleViolation
from nsf_rarefaction.domain.thermo import HybridEos
from nsf_rarefaction.domain.wave import RarefactionWave, WaveProfile

logger = logging.getLogger(__name__)


class Tendency(NamedTuple):
    """Right-hand side of the semi-discrete system and its boundary mass fluxes."""

    dU: np.ndarray
    mass_in: float
    mass_out: float
    faces: FaceGradients


@dataclass
class StepResult:
    field: FluidField
    mass_in: float
    mass_out: float
    faces: FaceGradients


def mollifier(x: np.ndarray, width: float) -> np.ndarray:
    """Monotone sine ramp from 0 to 1 over [-width/2, width/2]."""
    ramp = 0.5 * (1.0 + np.sin(np.pi * np.clip(x / width, -0.5, 0.5)))
    return np.where(x <= -0.5 * width, 0.0, np.where(x >= 0.5 * width, 1.0, ramp))


def mollified_datum(wave: RarefactionWave, x: np.ndarray, width: float) -> WaveProfile:
    """Riemann data smoothed across x1 = 0."""
    phi = mollifier(x, width)
    left, right = wave.ends.left, wave.ends.right
    return WaveProfile(*(
        getattr(left, name) + phi * (getattr(right, name) - getattr(left, name))
        for name in WaveProfile._fields
    ))


def initialize(config: SolverConfig, wave: RarefactionWave) -> FluidField:
    """Initial field: mollified Riemann data, or the exact wave at t0."""
    if not config.boundary.matches(BoundaryData.from_wave(wave)):
        raise BusinessRuleViolation(
            "Wave end states do not match the boundary data "
            f"(wave {BoundaryData.from_wave(wave).to_dict()}, config {config.boundary.to_dict()})."
        )
    grid = config.grid
    if max(abs(wave.xi_head), abs(wave.xi_tail)) * config.T >= grid.L:
        raise BusinessRuleViolation(f"Fan reaches the boundary of [-{grid.L}, {grid.L}] before T={config.T}.")
    eos = HybridEos(config.params)
    x = grid.centers
    if config.init_mode is InitMode.EXACT_WAVE:
        rho, theta, u = wave.evaluate(config.t0, x)
    else:
        rho, theta, u = mollified_datum(wave, x, config.mollifier_width)
    return FluidField.from_primitives(grid, eos, rho, theta, u)


class NsfSolver:
    """Time integrator bound to one ``SolverConfig``."""

    def __init__(self, config: SolverConfig):
        self.config = config
        self.eos = HybridEos(config.params)
        self.h = config.grid.h

    def tendency(self, field: FluidField) -> Tendency:
        cells = field.primitives
        ext = extend(cells, apply_boundary(cells, self.config))
        mode = self.config.reconstruction
        left = Primitives(*(reconstruct(q, mode)[0] for q in ext))
        right = Primitives(*(reconstruct(q, mode)[1] for q in ext))
        flux = convective_flux(left, right, self.eos)

        cell_left = Primitives(*(q[1:-2] for q in ext))
        cell_right = Primitives(*(q[2:-1] for q in ext))
        if self.config.params.eps > 0:
            flux = flux + dissipative_flux(cell_left, cell_right, self.eos, self.h)
        faces = face_gradients(cell_left, cell_right, self.h)

        dU = -(flux[:, 1:] - flux[:, :-1]) / self.h
        return Tendency(dU=dU, mass_in=float(flux[0, 0]), mass_out=float(flux[0, -1]), faces=faces)

    def stable_dt(self, field: FluidField, remaining: float = np.inf) -> float:
        """CFL-limited step from the convective and diffusive constraints."""
        rho, u, theta = field.primitives
        eos = self.eos
        h = self.h
        dt = np.min(h / (np.abs(u) + eos.wave_speed_bound(rho, theta)))
        eps = self.config.params.eps
        if eps > 0:
            momentum = (STRESS_FACTOR * eos.viscosity(theta) + eos.bulk_viscosity(theta)) / rho
            heat = eos.conductivity(theta) / eos.denergy_dtheta(rho, theta)
            nu_max = np.max(np.maximum(momentum, heat))
            if nu_max > 0:
                dt = min(dt, h * h / (2.0 * eps * nu_max))
        return float(min(self.config.cfl * dt, remaining))

    def step(self, field: FluidField, t: float, dt: float) -> StepResult:
        """Two-stage SSP Runge-Kutta update with positivity re-checked after each stage."""
        grid = field.grid
        U0 = field.conservative
        first = self.tendency(field)
        U1 = U0 + dt * first.dU
        stage = FluidField.from_conservative(grid, self.eos, U1, t + dt, theta_guess=field.theta)

        second = self.tendency(stage)
        U2 = 0.5 * U0 + 0.5 * (U1 + dt * second.dU)
        new = FluidField.from_conservative(grid, self.eos, U2, t + dt, theta_guess=stage.theta)
        return StepResult(
            field=new,
            mass_in=0.5 * dt * (first.mass_in + second.mass_in),
            mass_out=0.5 * dt * (first.mass_out + second.mass_out),
            faces=first.faces,
        )


def stable_dt(field: FluidField, config: SolverConfig, remaining: float = np.inf) -> float:
    return NsfSolver(config).stable_dt(field, remaining)


def step(field: FluidField, config: SolverConfig, t: float, dt: float) -> FluidField:
    return NsfSolver(config).step(field, t, dt).field
