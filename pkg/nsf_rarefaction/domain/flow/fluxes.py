"""Numerical fluxes: Rusanov convective flux, face-centred dissipative flux, minmod MUSCL."""

from typing import NamedTuple, Tuple

import numpy as np

from nsf_rarefaction.core.enums import Reconstruction
from nsf_rarefaction.domain.flow.field import Primitives
from nsf_rarefaction.domain.thermo import HybridEos

DIMENSION = 3
STRESS_FACTOR = 2.0 * (DIMENSION - 1) / DIMENSION


class FaceGradients(NamedTuple):
    """Face data of the dissipative flux, reused by the entropy-production probe."""

    theta: np.ndarray
    du: np.ndarray
    dtheta: np.ndarray
    h: float


def minmod(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Minmod slope limiter: smaller one-sided slope when signs agree, else zero."""
    return np.where(a * b > 0.0, np.sign(a) * np.minimum(np.abs(a), np.abs(b)), 0.0)


def reconstruct(q: np.ndarray, mode: Reconstruction) -> Tuple[np.ndarray, np.ndarray]:
    """Left and right face values from a ghost-extended array (two ghosts per side).

    Returns arrays of length N + 1 for the faces between consecutive real
    cells and the two boundary faces.
    """
    if mode is Reconstruction.FIRST_ORDER:
        return q[1:-2], q[2:-1]
    slopes = minmod(q[1:-1] - q[:-2], q[2:] - q[1:-1])
    # slopes[j] belongs to extended cell j + 1
    left = q[1:-2] + 0.5 * slopes[:-1]
    right = q[2:-1] - 0.5 * slopes[1:]
    return left, right


def euler_flux(eos: HybridEos, state: Primitives) -> Tuple[np.ndarray, np.ndarray]:
    """Conservative vector and exact Euler flux of a primitive state."""
    rho, u, theta = (np.asarray(v, dtype=float) for v in state)
    p = eos.pressure(rho, theta)
    E = 0.5 * rho * u * u + eos.internal_energy(rho, theta)
    m = rho * u
    U = np.stack([rho, m, E])
    F = np.stack([m, m * u + p, (E + p) * u])
    return U, F


def convective_flux(left: Primitives, right: Primitives, eos: HybridEos) -> np.ndarray:
    """Local Lax-Friedrichs (Rusanov) flux with the EOS wave-speed bound."""
    U_L, F_L = euler_flux(eos, left)
    U_R, F_R = euler_flux(eos, right)
    lam = np.maximum(
        np.abs(left.u) + eos.wave_speed_bound(left.rho, left.theta),
        np.abs(right.u) + eos.wave_speed_bound(right.rho, right.theta),
    )
    return 0.5 * (F_L + F_R) - 0.5 * lam * (U_R - U_L)


def face_gradients(left: Primitives, right: Primitives, h: float) -> FaceGradients:
    theta_L, theta_R = np.asarray(left.theta, dtype=float), np.asarray(right.theta, dtype=float)
    return FaceGradients(
        theta=0.5 * (theta_L + theta_R),
        du=(np.asarray(right.u, dtype=float) - np.asarray(left.u, dtype=float)) / h,
        dtheta=(theta_R - theta_L) / h,
        h=h,
    )


def dissipative_flux(left: Primitives, right: Primitives, eos: HybridEos, h: float) -> np.ndarray:
    """Viscous stress and Fourier heat flux across faces between adjacent cells.

    sigma = eps (4/3 mu + eta) du/h and q = -eps kappa dtheta/h with transport
    coefficients at the arithmetic face temperature.
    """
    g = face_gradients(left, right, h)
    eps = eos.params.eps
    u_face = 0.5 * (np.asarray(left.u, dtype=float) + np.asarray(right.u, dtype=float))
    sigma = eps * (STRESS_FACTOR * eos.viscosity(g.theta) + eos.bulk_viscosity(g.theta)) * g.du
    q = -eps * eos.conductivity(g.theta) * g.dtheta
    return np.stack([np.zeros_like(sigma), -sigma, -sigma * u_face + q])
