"""Finite-volume integrator for the planar NSF system."""

from .value_objects import BoundaryData, Grid, SolverConfig
from .field import FluidField, Primitives
from .fluxes import FaceGradients, convective_flux, dissipative_flux, minmod, reconstruct
from .boundary import GhostStates, apply_boundary
from .solver import NsfSolver, initialize, mollified_datum, mollifier, stable_dt, step
from .entities import MassLedger, Probe, SimulationRun, Snapshot, run

__all__ = [
    "BoundaryData",
    "Grid",
    "SolverConfig",
    "FluidField",
    "Primitives",
    "FaceGradients",
    "convective_flux",
    "dissipative_flux",
    "minmod",
    "reconstruct",
    "GhostStates",
    "apply_boundary",
    "NsfSolver",
    "initialize",
    "mollified_datum",
    "mollifier",
    "stable_dt",
    "step",
    "MassLedger",
    "Probe",
    "SimulationRun",
    "Snapshot",
    "run",
]
