"""Grid certification of F <= 0 and of the concavity of G."""

import logging
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from nsf_rarefaction.domain.inequality.functions import (
    F,
    Fmax,
    G,
    G_pp,
    concavity_term,
    grad_F,
    hessian_F,
)
from nsf_rarefaction.domain.shared import ValueObject
from nsf_rarefaction.domain.shared.exceptions import InvalidValueException
from nsf_rarefaction.domain.shared.verification import VerificationReport

logger = logging.getLogger(__name__)

MAX_TOL = 1e-12
CONCAVITY_BOUND = -1.0 / 6.0
CONCAVITY_TOL = 1e-9
TERM_BOUND = 1.08
HESSIAN_TOL = 1e-12
DECAY_LEVEL = -10.0
CHUNK = 256
WINDOW = 5


@dataclass(frozen=True)
class IneqGrid(ValueObject):
    """Log-spaced sampling of (y, Z / Ztilde) and of Y in (0, 1]."""

    y_min: float = 1e-3
    y_max: float = 1e3
    y_points: int = 2001
    z_min: float = 1e-3
    z_max: float = 1e3
    z_points: int = 2001
    Y_min: float = 1e-4
    Y_max: float = 1.0
    Y_points: int = 2001

    MIN_POINTS = 101

    def __post_init__(self):
        for lo, hi in (("y_min", "y_max"), ("z_min", "z_max"), ("Y_min", "Y_max")):
            a, b = getattr(self, lo), getattr(self, hi)
            if not 0 < a < b:
                raise InvalidValueException(f"Invalid range [{lo}, {hi}] = [{a}, {b}]; need 0 < min < max.")
        if self.Y_max > 1:
            raise InvalidValueException(f"Invalid Y_max: {self.Y_max}. Y must lie in (0, 1].")
        for name in ("y_points", "z_points", "Y_points"):
            if getattr(self, name) < self.MIN_POINTS:
                raise InvalidValueException(f"Invalid {name}: {getattr(self, name)}. Need at least {self.MIN_POINTS}.")

    def y(self) -> np.ndarray:
        return _anchored_logspace(self.y_min, self.y_max, self.y_points)

    def Z(self, Ztilde: float) -> np.ndarray:
        return Ztilde * _anchored_logspace(self.z_min, self.z_max, self.z_points)

    def Y(self) -> np.ndarray:
        return _anchored_logspace(self.Y_min, self.Y_max, self.Y_points)


def _anchored_logspace(lo: float, hi: float, n: int) -> np.ndarray:
    """Log grid that contains 1 exactly whenever 1 is inside [lo, hi]."""
    grid = np.logspace(np.log10(lo), np.log10(hi), n)
    if lo <= 1.0 <= hi:
        grid[np.argmin(np.abs(np.log(grid)))] = 1.0
    return grid


def _grid_max(y: np.ndarray, Z: np.ndarray, Ztilde: float, quadratic: bool = True) -> Tuple[float, int, int]:
    best, bi, bj = -np.inf, 0, 0
    for start in range(0, Z.size, CHUNK):
        values = F(y[:, None], Z[None, start:start + CHUNK], Ztilde, quadratic=quadratic)
        k = int(np.argmax(values))
        i, j = np.unravel_index(k, values.shape)
        if values[i, j] > best:
            best, bi, bj = float(values[i, j]), int(i), int(start + j)
    return best, bi, bj


def _hidden_sign_changes(y: np.ndarray, Z: np.ndarray, Ztilde: float, i0: int, j0: int) -> int:
    """Nodes outside a small window around (1, Ztilde) where F could reach 0 within one cell."""
    dy = np.gradient(y)
    count = 0
    dZ_all = np.gradient(Z)
    for start in range(0, Z.size, CHUNK):
        Zc = Z[None, start:start + CHUNK]
        values = F(y[:, None], Zc, Ztilde)
        gy, gZ = grad_F(y[:, None], Zc, Ztilde)
        reach = np.abs(gy) * dy[:, None] + np.abs(gZ) * dZ_all[None, start:start + CHUNK]
        suspect = values + reach >= 0.0
        rows = np.abs(np.arange(y.size) - i0)[:, None] <= WINDOW
        cols = np.abs(np.arange(start, start + Zc.shape[1]) - j0)[None, :] <= WINDOW
        suspect &= ~(rows & cols)
        count += int(np.count_nonzero(suspect))
    return count


def certify(grid: IneqGrid, Ztilde: float) -> VerificationReport:
    """Five hard assertions plus informational resolution, decay and ablation entries."""
    if not Ztilde > 0:
        raise InvalidValueException(f"Invalid Ztilde: {Ztilde}. Must be positive.")
    report = VerificationReport(title=f"Inequality certificate (Ztilde={Ztilde:g})")
    y, Z, Y = grid.y(), grid.Z(Ztilde), grid.Y()
    i0 = int(np.argmin(np.abs(np.log(y))))
    j0 = int(np.argmin(np.abs(np.log(Z / Ztilde))))

    # (a) F <= 0 with the maximum at (1, Ztilde)
    best, bi, bj = _grid_max(y, Z, Ztilde)
    near = abs(bi - i0) <= 1 and abs(bj - j0) <= 1
    report.add(
        "F_nonpositive",
        best <= MAX_TOL and near,
        best,
        MAX_TOL,
        witness={"y": float(y[bi]), "Z": float(Z[bj])},
        note="maximum attained within one cell of (1, Ztilde)" if near else "maximum away from (1, Ztilde)",
    )

    # (b) G <= 0 with the maximum only at Y = 1
    g = G(Y)
    k = int(np.argmax(g))
    unique = Y[k] == 1.0 and int(np.count_nonzero(g >= g[k] - MAX_TOL)) == 1
    report.add("G_nonpositive", g[k] <= MAX_TOL and unique, float(g[k]), MAX_TOL, witness={"Y": float(Y[k])})

    # (c) G is uniformly concave
    gpp = G_pp(Y)
    k = int(np.argmax(gpp))
    report.add(
        "G_concave",
        gpp[k] <= CONCAVITY_BOUND + CONCAVITY_TOL,
        float(gpp[k]),
        CONCAVITY_BOUND,
        witness={"Y": float(Y[k])},
    )

    # (d) the numeric ingredient of the concavity bound
    term = concavity_term(Y)
    k = int(np.argmax(term))
    report.add("concavity_term_bound", term[k] <= TERM_BOUND, float(term[k]), TERM_BOUND, witness={"Y": float(Y[k])})

    # (e) Hessian at the critical point
    H = hessian_F(1.0, Ztilde, Ztilde)
    expected = np.array([[-5.0 / 3.0, 2.0 / (3.0 * Ztilde)], [2.0 / (3.0 * Ztilde), -7.0 / 15.0 / Ztilde ** 2]])
    deviation = float(np.max(np.abs(H - expected)))
    eigenvalues = np.linalg.eigvalsh(H)
    report.add(
        "hessian_negative_definite",
        bool(np.all(eigenvalues < 0)) and deviation <= HESSIAN_TOL * max(1.0, np.max(np.abs(expected))),
        float(np.max(eigenvalues)),
        0.0,
        witness={"deviation": deviation},
    )

    # informational entries
    hidden = _hidden_sign_changes(y, Z, Ztilde, i0, j0)
    report.add("grid_resolution", hidden == 0, hidden, 0, hard=False,
               note=f"nodes outside a {WINDOW}-cell window where F + |grad F| * cell >= 0")

    upper = Z[Z >= Ztilde]
    ends = np.concatenate([F(y[y <= 1e-3][:, None], upper[None, :], Ztilde).ravel(),
                           F(y[y >= 1e3][:, None], upper[None, :], Ztilde).ravel()])
    decay = float(np.max(ends)) if ends.size else DECAY_LEVEL - 1.0
    report.add("boundary_decay", decay < DECAY_LEVEL, decay, DECAY_LEVEL, hard=False,
               note="F at the y-grid ends for Z >= Ztilde")

    identity = float(np.max(np.abs(Fmax(upper, Ztilde) - G(Ztilde / upper))))
    report.add("Fmax_reduction", identity <= MAX_TOL, identity, MAX_TOL, hard=False,
               note="closed-form maximum equals G(Ztilde / Z)")

    ablated, _, _ = _grid_max(y, Z, Ztilde, quadratic=False)
    report.add("ablation_no_quadratic", ablated <= MAX_TOL, ablated, MAX_TOL, hard=False,
               note="F without the (S - S~)^2 / 10 term")

    report.notes.append(
        f"(3/5)^(-7/5) = {0.6 ** -1.4:.6f} exceeds 1.08; the bound is checked on "
        "(3/5 + 2/5 Y^(5/3))^(-7/5) Y^(4/3) directly."
    )
    logger.info("Inequality certificate for Ztilde=%g: %s", Ztilde, "PASS" if report.passed else "FAIL")
    return report
