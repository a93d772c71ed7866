"""Self-checks of the exact wave against the Euler system it solves."""

import logging
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from nsf_rarefaction.domain.shared import ValueObject
from nsf_rarefaction.domain.shared.exceptions import InvalidValueException
from nsf_rarefaction.domain.shared.verification import VerificationReport
from nsf_rarefaction.domain.wave.rarefaction import RarefactionWave

logger = logging.getLogger(__name__)

FAN_SAMPLES = 9


@dataclass(frozen=True)
class EulerResidual(ValueObject):
    """Max-norm central-difference residuals over the admissible samples."""

    mass: float
    momentum: float
    energy: float
    entropy: float
    temperature: float
    samples: int

    @property
    def worst(self) -> float:
        return max(self.mass, self.momentum, self.energy)


def _region(wave: RarefactionWave, xi: np.ndarray) -> np.ndarray:
    # 0 left constant, 1 fan, 2 right constant; kinks belong to no region
    region = np.full(xi.shape, 1)
    region[xi < wave.xi_head] = 0
    region[xi > wave.xi_tail] = 2
    region[(xi == wave.xi_head) | (xi == wave.xi_tail)] = -1
    return region


def default_samples(wave: RarefactionWave) -> np.ndarray:
    """Self-similar sample points: both constant regions plus the fan interior."""
    width = max(wave.xi_tail - wave.xi_head, 0.5)
    fan = wave.xi_head + (wave.xi_tail - wave.xi_head) * np.arange(1, FAN_SAMPLES + 1) / (FAN_SAMPLES + 1)
    if wave.xi_tail == wave.xi_head:
        fan = np.empty(0)
    return np.concatenate(([wave.xi_head - 0.5 * width], fan, [wave.xi_tail + 0.5 * width]))


def _conserved(wave: RarefactionWave, t: float, x: np.ndarray):
    rho, theta, u = (np.asarray(v) for v in wave.evaluate(t, x))
    p = rho * theta
    E = 0.5 * rho * u * u + 1.5 * p
    Z = rho / (theta * np.sqrt(theta))
    s = 1.0 - np.log(Z / wave.Ztilde)
    return rho, theta, u, p, E, s


def euler_residual(
    wave: RarefactionWave,
    t: float,
    h: float,
    xi_samples: Optional[Sequence[float]] = None,
) -> EulerResidual:
    """Central-difference residuals of the gamma = 5/3 Euler system along the wave.

    Samples whose stencil crosses a kink of the fan are dropped.
    """
    if not t > 0:
        raise InvalidValueException(f"Residual needs t > 0, got {t}.")
    if not 0 < h < t:
        raise InvalidValueException(f"Invalid stencil width h={h}; need 0 < h < t.")
    xi = default_samples(wave) if xi_samples is None else np.asarray(xi_samples, dtype=float)
    x = xi * t

    stencil = [(t + h, x), (t - h, x), (t, x + h), (t, x - h)]
    centre = _region(wave, xi)
    keep = centre >= 0
    for ts, xs in stencil:
        keep &= _region(wave, xs / ts) == centre
    x = x[keep]
    if x.size == 0:
        return EulerResidual(0.0, 0.0, 0.0, 0.0, 0.0, 0)

    fwd, bwd = _conserved(wave, t + h, x), _conserved(wave, t - h, x)
    rgt, lft = _conserved(wave, t, x + h), _conserved(wave, t, x - h)
    rho, theta, u, _, _, _ = _conserved(wave, t, x)

    def flux(q):
        rho_, theta_, u_, p_, E_, _ = q
        return rho_ * u_, rho_ * u_ * u_ + p_, (E_ + p_) * u_

    def dt(k):
        return (fwd[k] - bwd[k]) / (2 * h)

    def dx_of(values_r, values_l):
        return (values_r - values_l) / (2 * h)

    f_r, f_l = flux(rgt), flux(lft)
    mass = dt(0) + dx_of(f_r[0], f_l[0])
    momentum = (fwd[0] * fwd[2] - bwd[0] * bwd[2]) / (2 * h) + dx_of(f_r[1], f_l[1])
    energy = dt(4) + dx_of(f_r[2], f_l[2])
    entropy = dt(5) + u * dx_of(rgt[5], lft[5])
    temperature = dt(1) + u * dx_of(rgt[1], lft[1]) + (2.0 / 3.0) * theta * dx_of(rgt[2], lft[2])

    def norm(r):
        return float(np.max(np.abs(r)))

    return EulerResidual(
        mass=norm(mass),
        momentum=norm(momentum),
        energy=norm(energy),
        entropy=norm(entropy),
        temperature=norm(temperature),
        samples=int(x.size),
    )


class WaveChecks:
    """Structural properties every admissible rarefaction wave satisfies."""

    def __init__(self, wave: RarefactionWave, t: float, n: int = 4001):
        if not 0 < t:
            raise InvalidValueException(f"Wave checks need t > 0, got {t}.")
        self.wave = wave
        self.t = t
        self.x = np.linspace(-wave.L, wave.L, n)
        self.dx = self.x[1] - self.x[0]

    def velocity_increase(self) -> float:
        """Smallest finite-difference slope of u on the fine grid."""
        _, _, u = self.wave.evaluate(self.t, self.x)
        return float(np.min(np.diff(u)) / self.dx)

    def _fan_points(self) -> np.ndarray:
        lo, hi = self.wave.xi_head * self.t, self.wave.xi_tail * self.t
        return self.x[(self.x - self.dx > lo) & (self.x + self.dx < hi)]

    def slope_identity(self) -> float:
        """Max relative deviation of (d theta / d u)^2 from (4/15) theta in the fan."""
        x = self._fan_points()
        if x.size == 0:
            return 0.0
        _, th_r, u_r = self.wave.evaluate(self.t, x + self.dx)
        _, th_l, u_l = self.wave.evaluate(self.t, x - self.dx)
        _, theta, _ = self.wave.evaluate(self.t, x)
        ratio = ((th_r - th_l) / (u_r - u_l)) ** 2
        return float(np.max(np.abs(ratio / (4.0 / 15.0 * theta) - 1.0)))

    def degeneracy_deviation(self) -> float:
        rho, theta, _ = self.wave.evaluate(self.t, self.x)
        return float(np.max(np.abs(rho / theta ** 1.5 - self.wave.Ztilde)))

    def entropy_deviation(self) -> float:
        rho, theta, _ = self.wave.evaluate(self.t, self.x)
        s = 1.0 - np.log(rho / theta ** 1.5 / self.wave.Ztilde)
        return float(np.max(np.abs(s - self.wave.s_const)))

    def report(self, h: float = 1e-3) -> VerificationReport:
        report = VerificationReport(title=f"Rarefaction wave checks at t={self.t:g}")
        slope = self.velocity_increase()
        report.add("velocity_non_decreasing", slope >= -1e-12, slope, 0.0)
        report.add("slope_identity", self.slope_identity() <= 1e-8, self.slope_identity(), 1e-8)
        report.add("degeneracy_constant", self.degeneracy_deviation() <= 1e-12,
                   self.degeneracy_deviation(), 1e-12)
        report.add("entropy_constant", self.entropy_deviation() <= 1e-12,
                   self.entropy_deviation(), 1e-12)

        coarse = euler_residual(self.wave, self.t, h)
        fine = euler_residual(self.wave, self.t, h / 2)
        ratio = coarse.worst / fine.worst if fine.worst > 0 else np.inf
        report.add("euler_residual_second_order", ratio >= 3.5 or coarse.worst <= 1e-12, ratio, 3.5,
                   witness={"h": h, "residual": coarse.worst})
        report.add("temperature_transport", True, coarse.temperature, 0.0, hard=False,
                   note="d_t theta + u d_x theta + (2/3) theta d_x u at the coarse stencil")
        return report
