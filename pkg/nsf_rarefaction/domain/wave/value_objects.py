"""End states of a planar rarefaction wave."""

import math
from dataclasses import dataclass

from nsf_rarefaction.core.enums import WaveFamily
from nsf_rarefaction.domain.shared import ValueObject
from nsf_rarefaction.domain.shared.exceptions import BusinessRuleViolation
from nsf_rarefaction.domain.thermo import FlowState

ENTROPY_TOL = 1e-10


@dataclass(frozen=True)
class RiemannEndStates(ValueObject):
    """Left and right constant states joined by an isentropic simple wave."""

    left: FlowState
    right: FlowState

    def __post_init__(self):
        Z_L, Z_R = self.left.Z, self.right.Z
        if abs(Z_L - Z_R) > ENTROPY_TOL * Z_L:
            raise BusinessRuleViolation(
                f"End states must share the degeneracy value: Z_L={Z_L:.12g}, Z_R={Z_R:.12g}."
            )

    @property
    def Ztilde(self) -> float:
        return self.left.Z

    def characteristic_speeds(self, family: WaveFamily) -> tuple:
        """(left, right) speeds u - c (family 1) or u + c (family 3)."""
        sign = -1.0 if family is WaveFamily.FIRST else 1.0
        return (
            self.left.u + sign * self.left.sound_speed(),
            self.right.u + sign * self.right.sound_speed(),
        )

    def max_signal_speed(self) -> float:
        return max(
            abs(self.left.u) + self.left.sound_speed(),
            abs(self.right.u) + self.right.sound_speed(),
        )

    def reflected(self) -> "RiemannEndStates":
        """Image under x1 -> -x1: sides swap and velocities change sign."""
        return RiemannEndStates(left=self.right.reflected(), right=self.left.reflected())

    @property
    def rho_jump(self) -> float:
        return abs(self.right.rho - self.left.rho)

    @property
    def theta_jump(self) -> float:
        return abs(self.right.theta - self.left.theta)

    @property
    def is_trivial(self) -> bool:
        return self.left == self.right


def isentropic_temperature(left: FlowState, rho: float) -> float:
    """Temperature on the isentrope through ``left`` at density ``rho``."""
    return left.theta * (rho / left.rho) ** (2.0 / 3.0)


def sound_speed(theta: float) -> float:
    return math.sqrt(5.0 * theta / 3.0)
