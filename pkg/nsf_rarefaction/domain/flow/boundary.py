"""Ghost cells for the inflow (left) and outflow (right) boundaries."""

from typing import NamedTuple

import numpy as np

from nsf_rarefaction.domain.flow.field import Primitives
from nsf_rarefaction.domain.flow.value_objects import SolverConfig
from nsf_rarefaction.domain.shared.exceptions import ConfigurationError

GHOSTS = 2


class GhostStates(NamedTuple):
    left: Primitives
    right: Primitives


def apply_boundary(cells: Primitives, config: SolverConfig) -> GhostStates:
    """Dirichlet inflow triple on the left; prescribed theta and u on the right.

    The outflow density is not prescribed and is extrapolated from the last
    interior cell.
    """
    b = config.boundary
    if not b.u_L > 0:
        raise ConfigurationError("u_L", "must be positive (inflow on the left boundary)")
    ones = np.ones(GHOSTS)
    left = Primitives(rho=b.rho_L * ones, u=b.u_L * ones, theta=b.theta_L * ones)
    right = Primitives(rho=cells.rho[-1] * ones, u=b.u_R * ones, theta=b.theta_R * ones)
    return GhostStates(left=left, right=right)


def extend(cells: Primitives, ghosts: GhostStates) -> Primitives:
    """Ghost-extended primitive arrays of length N + 2 * GHOSTS."""
    return Primitives(*(
        np.concatenate((g_left, np.asarray(q, dtype=float), g_right))
        for g_left, q, g_right in zip(ghosts.left, cells, ghosts.right)
    ))
