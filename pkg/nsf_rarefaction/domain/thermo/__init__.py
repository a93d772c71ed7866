"""Equation of state: hybrid mono-atomic gas with a radiation component."""

from .value_objects import EosParams, FlowState, ThermoState
from .eos import (
    EntropyValues,
    HybridEos,
    entropy,
    internal_energy,
    invert_energy,
    p_structural,
    pressure,
    s_structural,
    wave_speed_bound,
)

__all__ = [
    "EosParams",
    "FlowState",
    "ThermoState",
    "EntropyValues",
    "HybridEos",
    "entropy",
    "internal_energy",
    "invert_energy",
    "p_structural",
    "pressure",
    "s_structural",
    "wave_speed_bound",
]
