"""Relative energy, ballistic energy and convergence metrics."""

from .value_objects import BallisticData, EnergyReport
from .relative_energy import (
    L1Distances,
    ballistic_energy_density,
    boundary_bracket,
    l1_distances,
    relative_energy_density,
    total_relative_energy,
)
from .bregman import bregman_properties_check
from .probe import EnergyProbe
from .uniform_bound import UniformBoundVerdict, fitted_constant, uniform_bound_probe

__all__ = [
    "BallisticData",
    "EnergyReport",
    "L1Distances",
    "ballistic_energy_density",
    "boundary_bracket",
    "l1_distances",
    "relative_energy_density",
    "total_relative_energy",
    "bregman_properties_check",
    "EnergyProbe",
    "UniformBoundVerdict",
    "fitted_constant",
    "uniform_bound_probe",
]
