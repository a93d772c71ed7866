"""Exact planar rarefaction waves."""

from .value_objects import RiemannEndStates
from .rarefaction import (
    RarefactionWave,
    WaveProfile,
    connect_right_state,
    domain_halfwidth,
)
from .checks import EulerResidual, WaveChecks, euler_residual


def evaluate(wave: RarefactionWave, t: float, x1) -> WaveProfile:
    return wave.evaluate(t, x1)


__all__ = [
    "RiemannEndStates",
    "RarefactionWave",
    "WaveProfile",
    "connect_right_state",
    "domain_halfwidth",
    "evaluate",
    "EulerResidual",
    "WaveChecks",
    "euler_residual",
]
