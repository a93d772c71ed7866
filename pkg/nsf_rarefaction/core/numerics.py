"""Vectorized scalar root finding and difference helpers."""

import logging
from typing import Callable, Optional, Union

import numpy as np

from nsf_rarefaction.domain.shared.exceptions import RootFindingError

logger = logging.getLogger(__name__)

ArrayLike = Union[float, np.ndarray]


def solve_increasing(
    func: Callable[[np.ndarray], np.ndarray],
    dfunc: Callable[[np.ndarray], np.ndarray],
    target: ArrayLike,
    lo: ArrayLike,
    hi: ArrayLike,
    x0: Optional[ArrayLike] = None,
    rtol: float = 1e-12,
    maxiter: int = 200,
) -> np.ndarray:
    """Solve ``func(x) = target`` elementwise for strictly increasing ``func``.

    Safeguarded Newton iteration: a Newton step is taken when it stays inside
    the current bracket, otherwise the bracket is bisected. The bracket
    ``[lo, hi]`` must enclose the root for every element.
    """
    target = np.asarray(target, dtype=float)
    lo, hi, target = np.broadcast_arrays(
        np.asarray(lo, dtype=float), np.asarray(hi, dtype=float), target
    )
    lo = lo.copy()
    hi = hi.copy()

    f_lo = func(lo) - target
    f_hi = func(hi) - target
    bad = (f_lo > 0.0) | (f_hi < 0.0)
    if np.any(bad):
        idx = int(np.flatnonzero(bad.ravel())[0])
        raise RootFindingError(
            f"Root not bracketed in [{lo.ravel()[idx]:.6g}, {hi.ravel()[idx]:.6g}] "
            f"for target {target.ravel()[idx]:.6g}"
        )

    if x0 is None:
        x = 0.5 * (lo + hi)
    else:
        x = np.broadcast_to(np.asarray(x0, dtype=float), target.shape).copy()
        outside = ~((x > lo) & (x < hi))
        x[outside] = 0.5 * (lo[outside] + hi[outside])

    for _ in range(maxiter):
        fx = func(x) - target
        dfx = dfunc(x)
        below = fx < 0.0
        lo = np.where(below, x, lo)
        hi = np.where(below, hi, x)

        with np.errstate(divide="ignore", invalid="ignore"):
            newton = x - fx / dfx
        inside = (dfx > 0.0) & (newton > lo) & (newton < hi)
        x_new = np.where(inside, newton, 0.5 * (lo + hi))
        x_new = np.where(fx == 0.0, x, x_new)

        done = np.abs(x_new - x) <= rtol * np.abs(x_new)
        x = x_new
        if np.all(done):
            return x

    raise RootFindingError(f"No convergence within {maxiter} iterations")


def central_difference(func: Callable[[float], float], x: float, h: float) -> float:
    """Second-order central difference of a scalar function."""
    return (func(x + h) - func(x - h)) / (2.0 * h)
