"""Hybrid equation of state.

Pressure, energy and entropy are written through the degeneracy variable
Z = rho / theta^(3/2). Below the junction value the gas obeys the
Boyle-Mariotte law; above it the structural pressure grows like Z^(5/3).
A radiation term a * theta^4 is added on top of the structural part.
"""

import logging
from typing import NamedTuple, Optional, Union

import numpy as np

from nsf_rarefaction.core.numerics import solve_increasing
from nsf_rarefaction.domain.shared.exceptions import InvalidValueException, RootFindingError
from nsf_rarefaction.domain.thermo.value_objects import EosParams, ThermoState

logger = logging.getLogger(__name__)

ArrayLike = Union[float, np.ndarray]


class EntropyValues(NamedTuple):
    rho_s: ArrayLike
    s: ArrayLike


class HybridEos:
    """Vectorized thermodynamic evaluations for a fixed ``EosParams``."""

    SAFETY_FACTOR = 1.2
    THETA_FLOOR = 1e-12
    THETA_CEILING_FACTOR = 1e3

    def __init__(self, params: EosParams):
        self.params = params
        self.Zt = params.Ztilde
        self.a = params.a_eps

    # structural functions of Z

    def _check_Z(self, Z: np.ndarray, strict: bool) -> None:
        bad = (Z <= 0) if strict else (Z < 0)
        if np.any(bad) or np.any(~np.isfinite(Z)):
            bound = "positive" if strict else "non-negative"
            raise InvalidValueException(f"Degeneracy variable Z must be finite and {bound}.")

    def P(self, Z: ArrayLike) -> ArrayLike:
        Z = np.asarray(Z, dtype=float)
        self._check_Z(Z, strict=False)
        r = Z / self.Zt
        upper = 0.6 * Z * np.cbrt(r) ** 2 + 0.4 * self.Zt
        return np.where(r <= 1.0, Z, upper)[()]

    def dP(self, Z: ArrayLike) -> ArrayLike:
        Z = np.asarray(Z, dtype=float)
        r = Z / self.Zt
        return np.where(r <= 1.0, 1.0, np.cbrt(r) ** 2)[()]

    def P_over_Z(self, Z: ArrayLike) -> ArrayLike:
        """P(Z)/Z; exactly one on the Boyle-Mariotte branch."""
        Z = np.asarray(Z, dtype=float)
        r = Z / self.Zt
        with np.errstate(divide="ignore"):
            upper = 0.6 * np.cbrt(r) ** 2 + 0.4 / r
        return np.where(r <= 1.0, 1.0, upper)[()]

    def S(self, Z: ArrayLike) -> ArrayLike:
        Z = np.asarray(Z, dtype=float)
        self._check_Z(Z, strict=True)
        r = Z / self.Zt
        return np.where(r <= 1.0, 1.0 - np.log(r), 1.0 / r)[()]

    def dS(self, Z: ArrayLike) -> ArrayLike:
        Z = np.asarray(Z, dtype=float)
        return np.where(Z <= self.Zt, -1.0 / Z, -self.Zt / Z ** 2)[()]

    def d2S(self, Z: ArrayLike) -> ArrayLike:
        Z = np.asarray(Z, dtype=float)
        return np.where(Z <= self.Zt, 1.0 / Z ** 2, 2.0 * self.Zt / Z ** 3)[()]

    # state functions

    @staticmethod
    def degeneracy(rho: ArrayLike, theta: ArrayLike) -> ArrayLike:
        return rho / (theta * np.sqrt(theta))

    def structural_pressure(self, rho: ArrayLike, theta: ArrayLike) -> ArrayLike:
        """theta^(5/2) P(Z), the pressure without radiation."""
        return rho * theta * self.P_over_Z(self.degeneracy(rho, theta))

    def pressure(self, rho: ArrayLike, theta: ArrayLike) -> ArrayLike:
        return self.structural_pressure(rho, theta) + self.a * theta ** 4

    def internal_energy(self, rho: ArrayLike, theta: ArrayLike) -> ArrayLike:
        """Internal energy per unit volume, rho * e."""
        Z = self.degeneracy(rho, theta)
        return 1.5 * rho * theta * self.P_over_Z(Z) + 3.0 * self.a * theta ** 4

    def entropy(self, rho: ArrayLike, theta: ArrayLike) -> EntropyValues:
        Z = self.degeneracy(rho, theta)
        radiation = 4.0 * self.a * theta ** 3
        S = self.S(Z)
        return EntropyValues(rho_s=rho * S + radiation, s=S + radiation / rho)

    def dp_drho(self, rho: ArrayLike, theta: ArrayLike) -> ArrayLike:
        Z = self.degeneracy(rho, theta)
        return theta * self.dP(Z)

    def _structural_heat(self, rho: ArrayLike, theta: ArrayLike) -> ArrayLike:
        # theta^(3/2) * (5/2 P - 3/2 Z P'), equal to rho below the junction
        Z = self.degeneracy(rho, theta)
        return np.where(Z <= self.Zt, rho, self.Zt * theta * np.sqrt(theta))

    def dp_dtheta(self, rho: ArrayLike, theta: ArrayLike) -> ArrayLike:
        return (self._structural_heat(rho, theta) + 4.0 * self.a * theta ** 3)[()]

    def denergy_dtheta(self, rho: ArrayLike, theta: ArrayLike) -> ArrayLike:
        """d(rho e)/d theta at fixed rho, i.e. rho * c_v."""
        return (1.5 * self._structural_heat(rho, theta) + 12.0 * self.a * theta ** 3)[()]

    def energy_inversion_conditioning(self, rho: ArrayLike, theta: ArrayLike) -> ArrayLike:
        """rho e / (theta d(rho e)/d theta), the amplification of a relative error in rho e into theta.

        One on the Boyle-Mariotte branch without radiation; grows like Z^(5/3)
        deep in the degenerate branch, where rho e barely depends on theta.
        """
        return (self.internal_energy(rho, theta) / (theta * self.denergy_dtheta(rho, theta)))[()]

    def sound_speed_sq(self, rho: ArrayLike, theta: ArrayLike) -> ArrayLike:
        """Squared adiabatic sound speed p_rho + theta p_theta^2 / (rho^2 c_v)."""
        p_t = self.dp_dtheta(rho, theta)
        return self.dp_drho(rho, theta) + theta * p_t ** 2 / (rho * self.denergy_dtheta(rho, theta))

    def wave_speed_bound(self, rho: ArrayLike, theta: ArrayLike) -> ArrayLike:
        """Upper bound for the acoustic speed used by the dissipative flux."""
        return self.SAFETY_FACTOR * np.sqrt(5.0 / 3.0 * self.pressure(rho, theta) / rho)

    # transport coefficients

    def viscosity(self, theta: ArrayLike) -> ArrayLike:
        return self.params.mu_bar * (1.0 + theta)

    def bulk_viscosity(self, theta: ArrayLike) -> ArrayLike:
        return self.params.eta_bar * (1.0 + theta)

    def conductivity(self, theta: ArrayLike) -> ArrayLike:
        return self.params.kappa_bar * (1.0 + theta ** self.params.beta)

    # inversions

    def invert_energy(
        self,
        rho: ArrayLike,
        rho_e: ArrayLike,
        theta_guess: Optional[ArrayLike] = None,
        rtol: float = 1e-12,
    ) -> ArrayLike:
        """Temperature with internal_energy(rho, theta) = rho_e."""
        rho = np.asarray(rho, dtype=float)
        rho_e = np.asarray(rho_e, dtype=float)
        if np.any(rho <= 0) or np.any(rho_e <= 0):
            raise InvalidValueException("Energy inversion needs positive density and energy.")
        rho, rho_e = np.broadcast_arrays(rho, rho_e)
        if theta_guess is None:
            theta_guess = rho_e / (1.5 * rho)
        hi = self.THETA_CEILING_FACTOR * rho_e / rho
        theta = solve_increasing(
            lambda th: self.internal_energy(rho, th),
            lambda th: self.denergy_dtheta(rho, th),
            rho_e,
            lo=self.THETA_FLOOR,
            hi=hi,
            x0=theta_guess,
            rtol=rtol,
        )
        return theta[()]

    def invert_entropy(
        self,
        rho: ArrayLike,
        rho_s: ArrayLike,
        rtol: float = 1e-14,
        max_expansions: int = 60,
    ) -> ArrayLike:
        """Temperature with rho * s(rho, theta) = rho_s (monotone in theta)."""
        rho = np.asarray(rho, dtype=float)
        rho_s = np.asarray(rho_s, dtype=float)
        if np.any(rho <= 0) or np.any(rho_s <= 0):
            raise InvalidValueException("Entropy inversion needs positive density and entropy.")
        rho, rho_s = np.broadcast_arrays(rho, rho_s)

        def total(th):
            return self.entropy(rho, th).rho_s

        def slope(th):
            Z = self.degeneracy(rho, th)
            structural = 1.5 * rho * np.where(Z <= self.Zt, 1.0, self.Zt / Z) / th
            return structural + 12.0 * self.a * th ** 2

        lo = np.full(rho.shape, self.THETA_FLOOR)
        hi = np.ones(rho.shape)
        for _ in range(max_expansions):
            short = total(hi) < rho_s
            if not np.any(short):
                break
            hi = np.where(short, hi * 10.0, hi)
        else:
            raise RootFindingError("Could not bracket the entropy inversion.")
        return solve_increasing(total, slope, rho_s, lo=lo, hi=hi, rtol=rtol)[()]

    def boundary_bracket(self, rho: ArrayLike, theta_b: float) -> ArrayLike:
        """rho e(rho, theta_b) - theta_b rho s(rho, theta_b) at a boundary temperature."""
        return self.internal_energy(rho, theta_b) - theta_b * self.entropy(rho, theta_b).rho_s


# operations on value objects

def p_structural(Z: float, params: EosParams) -> float:
    return float(HybridEos(params).P(Z))


def s_structural(Z: float, params: EosParams) -> float:
    return float(HybridEos(params).S(Z))


def pressure(state: ThermoState, params: EosParams) -> float:
    return float(HybridEos(params).pressure(state.rho, state.theta))


def internal_energy(state: ThermoState, params: EosParams) -> float:
    return float(HybridEos(params).internal_energy(state.rho, state.theta))


def entropy(state: ThermoState, params: EosParams) -> EntropyValues:
    values = HybridEos(params).entropy(state.rho, state.theta)
    return EntropyValues(rho_s=float(values.rho_s), s=float(values.s))


def invert_energy(rho: float, rho_e: float, params: EosParams) -> float:
    return float(HybridEos(params).invert_energy(rho, rho_e))


def wave_speed_bound(state: ThermoState, params: EosParams) -> float:
    return float(HybridEos(params).wave_speed_bound(state.rho, state.theta))
