"""Exact self-similar rarefaction wave of the isentropic gamma = 5/3 Euler system.

The wave lives on the Boyle-Mariotte branch Z = Ztilde of the equation of
state, where ``theta = (rho / Ztilde)^(2/3)`` and the sound speed is
``sqrt(5 theta / 3)``. Family 1 waves travel with ``u - c``, family 3 waves
with ``u + c``; the latter are mirror images of the former.
"""

import logging
from dataclasses import dataclass, field
from typing import NamedTuple, Optional, Union

import numpy as np

from nsf_rarefaction.core.enums import WaveFamily
from nsf_rarefaction.domain.shared import ValueObject
from nsf_rarefaction.domain.shared.exceptions import BusinessRuleViolation, InvalidValueException
from nsf_rarefaction.domain.thermo import FlowState
from nsf_rarefaction.domain.wave.value_objects import (
    RiemannEndStates,
    isentropic_temperature,
    sound_speed,
)

logger = logging.getLogger(__name__)

ArrayLike = Union[float, np.ndarray]

DEFAULT_MARGIN = 0.2


class WaveProfile(NamedTuple):
    rho: ArrayLike
    theta: ArrayLike
    u: ArrayLike


def connect_right_state(left: FlowState, family: WaveFamily, rho_R: float) -> RiemannEndStates:
    """Right state reached from ``left`` across a rarefaction of the given family.

    Family 1 expands to the right (rho_R <= rho_L), family 3 to the left
    (rho_R >= rho_L). Equal densities give the zero-strength wave.
    """
    family = WaveFamily(family)
    if not rho_R > 0:
        raise InvalidValueException(f"Invalid rho_R: {rho_R}. Must be positive.")
    if family is WaveFamily.FIRST and rho_R > left.rho:
        raise BusinessRuleViolation(
            f"rho_R={rho_R} exceeds rho_L={left.rho}: a 1-wave with a denser right state "
            "is a compression (shock), not a rarefaction."
        )
    if family is WaveFamily.THIRD and rho_R < left.rho:
        raise BusinessRuleViolation(
            f"rho_R={rho_R} is below rho_L={left.rho}: a 3-wave with a lighter right state "
            "is a compression (shock), not a rarefaction."
        )
    if rho_R == left.rho:
        return RiemannEndStates(left=left, right=left)

    theta_R = isentropic_temperature(left, rho_R)
    c_L, c_R = left.sound_speed(), sound_speed(theta_R)
    if family is WaveFamily.FIRST:
        u_R = left.u - 3.0 * (c_R - c_L)
    else:
        u_R = left.u + 3.0 * (c_R - c_L)
    return RiemannEndStates(left=left, right=FlowState(rho=rho_R, theta=theta_R, u=u_R))


def fan_speeds(ends: RiemannEndStates, family: WaveFamily) -> tuple:
    """(xi_head, xi_tail) of the fan; equal for the zero-strength wave."""
    return ends.characteristic_speeds(WaveFamily(family))


def domain_halfwidth(
    ends: RiemannEndStates,
    family: WaveFamily,
    T: float,
    margin: float = DEFAULT_MARGIN,
) -> float:
    """Half-width keeping the fan and all acoustic signals interior up to time T."""
    if not T > 0:
        raise InvalidValueException(f"Invalid T: {T}. Must be positive.")
    if not margin > 0:
        raise InvalidValueException(f"Invalid margin: {margin}. Must be positive.")
    head, tail = fan_speeds(ends, family)
    speed = max(abs(head), abs(tail), ends.max_signal_speed())
    return (1.0 + margin) * speed * T


@dataclass(frozen=True)
class RarefactionWave(ValueObject):
    """Planar rarefaction wave on [-L, L] up to time T."""

    family: WaveFamily
    ends: RiemannEndStates
    L: float
    T: float
    xi_head: float = field(init=False)
    xi_tail: float = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "family", WaveFamily(self.family))
        head, tail = fan_speeds(self.ends, self.family)
        object.__setattr__(self, "xi_head", head)
        object.__setattr__(self, "xi_tail", tail)

        if tail < head:
            raise BusinessRuleViolation(
                f"Characteristic speed decreases across the wave ({head:.6g} -> {tail:.6g})."
            )
        if not (self.T > 0 and self.L > 0):
            raise InvalidValueException("Wave horizon T and half-width L must be positive.")
        if max(abs(head), abs(tail)) * self.T >= self.L:
            raise BusinessRuleViolation(
                f"Fan reaches the boundary before T={self.T}: speeds ({head:.6g}, {tail:.6g}), L={self.L:.6g}."
            )
        if not (self.ends.left.u > 0 or self.ends.right.u < 0):
            raise BusinessRuleViolation(
                "Boundary classification needs u_L > 0 (inflow on the left) or u_R < 0."
            )

    @classmethod
    def from_left_state(
        cls,
        left: FlowState,
        family: WaveFamily,
        rho_R: float,
        T: float,
        margin: float = DEFAULT_MARGIN,
        L: Optional[float] = None,
    ) -> "RarefactionWave":
        ends = connect_right_state(left, family, rho_R)
        if L is None:
            L = domain_halfwidth(ends, family, T, margin)
        return cls(family=family, ends=ends, L=L, T=T)

    @property
    def Ztilde(self) -> float:
        return self.ends.Ztilde

    @property
    def s_const(self) -> float:
        """Specific entropy S(Ztilde), equal to one on the junction."""
        return 1.0

    @property
    def needs_reflection(self) -> bool:
        """True when the wave is only admissible through u_R < 0."""
        return not self.ends.left.u > 0

    def reflected(self) -> "RarefactionWave":
        """Mirror image under x1 -> -x1, u -> -u; families 1 and 3 swap."""
        return RarefactionWave(
            family=self.family.reflected,
            ends=self.ends.reflected(),
            L=self.L,
            T=self.T,
        )

    def oriented(self) -> "RarefactionWave":
        """The wave in the inflow-on-the-left configuration."""
        return self.reflected() if self.needs_reflection else self

    # evaluation

    def _fan(self, xi: np.ndarray) -> WaveProfile:
        left = self.ends.left
        c_L = left.sound_speed()
        if self.family is WaveFamily.FIRST:
            c = (left.u + 3.0 * c_L - xi) / 4.0
            u = xi + c
        else:
            c = (xi - left.u + 3.0 * c_L) / 4.0
            u = xi - c
        theta = 0.6 * c * c
        rho = self.Ztilde * theta * np.sqrt(theta)
        return WaveProfile(rho=rho, theta=theta, u=u)

    def profile(self, xi: ArrayLike) -> WaveProfile:
        """Wave fields as functions of the self-similar variable xi = x1/t."""
        xi = np.asarray(xi, dtype=float)
        left, right = self.ends.left, self.ends.right
        fan = self._fan(np.clip(xi, self.xi_head, self.xi_tail))
        before = xi <= self.xi_head
        after = xi >= self.xi_tail
        out = []
        for name, fan_values in zip(WaveProfile._fields, fan):
            values = np.where(before, getattr(left, name), fan_values)
            values = np.where(after, getattr(right, name), values)
            out.append(values[()])
        return WaveProfile(*out)

    def evaluate(self, t: float, x1: ArrayLike) -> WaveProfile:
        """Fields (rho, theta, u) at time t > 0 and positions x1."""
        if not t > 0:
            raise InvalidValueException(
                f"Wave evaluation needs t > 0, got {t}; use riemann_datum for t = 0."
            )
        return self.profile(np.asarray(x1, dtype=float) / t)

    def state_at(self, t: float, x1: float) -> FlowState:
        rho, theta, u = self.evaluate(t, x1)
        return FlowState(rho=float(rho), theta=float(theta), u=float(u))

    def riemann_datum(self, x1: ArrayLike) -> WaveProfile:
        """Discontinuous t = 0 profile: left state for x1 < 0, right state otherwise."""
        x1 = np.asarray(x1, dtype=float)
        left, right = self.ends.left, self.ends.right
        on_left = x1 < 0.0
        return WaveProfile(*(
            np.where(on_left, getattr(left, name), getattr(right, name))[()]
            for name in WaveProfile._fields
        ))

    def gradients(self, t: float, x1: ArrayLike) -> WaveProfile:
        """Analytic x1-derivatives of (rho, theta, u); zero outside the fan."""
        if not t > 0:
            raise InvalidValueException(f"Wave gradients need t > 0, got {t}.")
        xi = np.asarray(x1, dtype=float) / t
        rho, theta, _ = self.profile(xi)
        inside = (xi > self.xi_head) & (xi < self.xi_tail)
        sign = -1.0 if self.family is WaveFamily.FIRST else 1.0
        # dc/dxi = sign/4, du/dxi = 3/4, dtheta/dxi = 1.2 c dc/dxi
        c = np.sqrt(5.0 * np.asarray(theta) / 3.0)
        du = np.where(inside, 0.75 / t, 0.0)
        dtheta = np.where(inside, 1.2 * c * sign * 0.25 / t, 0.0)
        drho = np.where(inside, 1.5 * np.asarray(rho) / np.asarray(theta) * dtheta, 0.0)
        return WaveProfile(rho=drho[()], theta=dtheta[()], u=du[()])
