"""Numerical certification of the dissipation inequality."""

from .functions import (
    F,
    Fmax,
    G,
    G_limit_at_zero,
    G_pp,
    Gradient,
    concavity_term,
    grad_F,
    hessian_F,
    ybar,
)
from .certificate import IneqGrid, certify

__all__ = [
    "F",
    "Fmax",
    "G",
    "G_limit_at_zero",
    "G_pp",
    "Gradient",
    "concavity_term",
    "grad_F",
    "hessian_F",
    "ybar",
    "IneqGrid",
    "certify",
]
