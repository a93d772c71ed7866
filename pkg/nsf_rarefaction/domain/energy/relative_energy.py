"""Relative energy, ballistic energy and L1 distances to the exact wave.

The relative energy is the Bregman distance of the total energy in the
conservative entropy variables (rho, m, rho s). It is evaluated in
difference form so that it vanishes exactly when state and target agree.
"""

import logging
from typing import NamedTuple, Union

import numpy as np

from nsf_rarefaction.domain.flow.field import FluidField
from nsf_rarefaction.domain.shared.exceptions import InvalidValueException
from nsf_rarefaction.domain.thermo import EosParams, HybridEos
from nsf_rarefaction.domain.wave import RarefactionWave, WaveProfile

logger = logging.getLogger(__name__)

ArrayLike = Union[float, np.ndarray]


class L1Distances(NamedTuple):
    L1_rho: float
    L1_theta: float
    L1_m: float


def relative_energy_density(
    rho: ArrayLike,
    theta: ArrayLike,
    u: ArrayLike,
    rho_t: ArrayLike,
    theta_t: ArrayLike,
    u_t: ArrayLike,
    eos: HybridEos,
) -> ArrayLike:
    """E = rho|u - u~|^2/2 + rho(e - e~) - theta~ rho (s - s~) - p~ (rho/rho~ - 1)."""
    e = eos.internal_energy(rho, theta) / rho
    e_t = eos.internal_energy(rho_t, theta_t) / rho_t
    s = eos.entropy(rho, theta).s
    s_t = eos.entropy(rho_t, theta_t).s
    p_t = eos.pressure(rho_t, theta_t)
    du = u - u_t
    return 0.5 * rho * du * du + rho * (e - e_t) - theta_t * rho * (s - s_t) - p_t * (rho / rho_t - 1.0)


def ballistic_energy_density(
    rho: ArrayLike,
    theta: ArrayLike,
    u: ArrayLike,
    u_B: ArrayLike,
    theta_B: ArrayLike,
    eos: HybridEos,
) -> ArrayLike:
    """rho|u - u_B|^2/2 + rho e - theta_B rho s."""
    du = u - u_B
    return 0.5 * rho * du * du + eos.internal_energy(rho, theta) - theta_B * eos.entropy(rho, theta).rho_s


def boundary_bracket(rho: ArrayLike, theta_b: float, eos: HybridEos) -> ArrayLike:
    """rho e(rho, theta_b) - theta_b rho s(rho, theta_b) at a boundary temperature."""
    return eos.boundary_bracket(rho, theta_b)


def _target(wave: RarefactionWave, t: float, x: np.ndarray) -> WaveProfile:
    if not t > 0:
        raise InvalidValueException(f"Comparison with the wave needs t > 0, got {t}.")
    return wave.evaluate(t, x)


def total_relative_energy(field: FluidField, wave: RarefactionWave, t: float, params: EosParams) -> float:
    """Midpoint-rule integral of the relative energy against the wave at time t."""
    eos = HybridEos(params)
    target = _target(wave, t, field.grid.centers)
    rho, u, theta = field.primitives
    density = relative_energy_density(rho, theta, u, target.rho, target.theta, target.u, eos)
    return float(np.sum(density) * field.grid.h)


def l1_distances_to(field: FluidField, target: WaveProfile) -> L1Distances:
    rho, u, theta = field.primitives
    h = field.grid.h
    return L1Distances(
        L1_rho=float(np.sum(np.abs(rho - target.rho)) * h),
        L1_theta=float(np.sum(np.abs(theta - target.theta)) * h),
        L1_m=float(np.sum(np.abs(rho * u - target.rho * target.u)) * h),
    )


def l1_distances(field: FluidField, wave: RarefactionWave, t: float) -> L1Distances:
    """Cell-summed L1 distances of rho, theta and m to the wave at time t."""
    return l1_distances_to(field, _target(wave, t, field.grid.centers))
