"""The function F(y, Z) bounding the relative-energy dissipation, and its reduction G(Y).

All formulas are written through Y = Ztilde / Z, so that the Boyle-Mariotte
branch is Y >= 1 and the degenerate branch is Y < 1:

    q(Y)        = P(Z) Z^(-5/3) Ztilde^(2/3)  = Y^(2/3)            (Y >= 1)
                                              = 3/5 + 2/5 Y^(5/3)  (Y < 1)
    S(Z) - S(Z~) = log Y (Y >= 1),  Y - 1 (Y < 1)
"""

from typing import NamedTuple, Union

import numpy as np

from nsf_rarefaction.domain.shared.exceptions import InvalidValueException

ArrayLike = Union[float, np.ndarray]


class Gradient(NamedTuple):
    dy: ArrayLike
    dZ: ArrayLike


def _positive(name: str, value: ArrayLike) -> np.ndarray:
    value = np.asarray(value, dtype=float)
    if np.any(~(value > 0)) or np.any(~np.isfinite(value)):
        raise InvalidValueException(f"{name} must be finite and positive.")
    return value


def _ratio(Z: np.ndarray, Ztilde: float) -> np.ndarray:
    if not Ztilde > 0:
        raise InvalidValueException(f"Invalid Ztilde: {Ztilde}. Must be positive.")
    return Ztilde / Z


def pressure_ratio(Y: ArrayLike) -> ArrayLike:
    """q = P(Z) Z^(-5/3) Ztilde^(2/3) as a function of Y = Ztilde / Z."""
    Y = np.asarray(Y, dtype=float)
    return np.where(Y >= 1.0, np.cbrt(Y) ** 2, 0.6 + 0.4 * Y * np.cbrt(Y) ** 2)


def entropy_gap(Y: ArrayLike) -> ArrayLike:
    """S(Z) - S(Ztilde)."""
    Y = np.asarray(Y, dtype=float)
    return np.where(Y >= 1.0, np.log(np.maximum(Y, 1.0)), Y - 1.0)


def _dS(Y: np.ndarray, Z: np.ndarray) -> np.ndarray:
    return np.where(Y >= 1.0, -1.0 / Z, -Y / Z)


def _d2S(Y: np.ndarray, Z: np.ndarray) -> np.ndarray:
    return np.where(Y >= 1.0, 1.0, 2.0 * Y) / (Z * Z)


def F(y: ArrayLike, Z: ArrayLike, Ztilde: float, quadratic: bool = True) -> ArrayLike:
    """F = dS + 5/2 - 1/y - 3/2 q y^(2/3) + dS^2 / 10; zero at (1, Ztilde).

    ``quadratic=False`` drops the dS^2 / 10 term.
    """
    y = _positive("y", y)
    Z = _positive("Z", Z)
    Y = _ratio(Z, Ztilde)
    gap = entropy_gap(Y)
    value = gap + 2.5 - 1.0 / y - 1.5 * pressure_ratio(Y) * np.cbrt(y) ** 2
    if quadratic:
        value = value + 0.1 * gap * gap
    return value[()]


def grad_F(y: ArrayLike, Z: ArrayLike, Ztilde: float) -> Gradient:
    y = _positive("y", y)
    Z = _positive("Z", Z)
    Y = _ratio(Z, Ztilde)
    dy = 1.0 / (y * y) - pressure_ratio(Y) / np.cbrt(y)
    dZ = _dS(Y, Z) * (1.0 - np.cbrt(y * Y) ** 2 + 0.2 * entropy_gap(Y))
    return Gradient(dy=dy[()], dZ=dZ[()])


def hessian_F(y: ArrayLike, Z: ArrayLike, Ztilde: float) -> np.ndarray:
    """Second derivatives, shaped (..., 2, 2) in the order (y, Z)."""
    y = _positive("y", y)
    Z = _positive("Z", Z)
    Y = _ratio(Z, Ztilde)
    S1, S2 = _dS(Y, Z), _d2S(Y, Z)
    yY23 = np.cbrt(y * Y) ** 2
    F_yy = -2.0 / y ** 3 + pressure_ratio(Y) / (3.0 * y * np.cbrt(y))
    F_ZZ = S2 * (1.0 - yY23 + 0.2 * entropy_gap(Y)) + S1 * (0.2 * S1 + 2.0 / 3.0 * yY23 / Z)
    F_yZ = -2.0 / 3.0 * np.cbrt(Y) ** 2 / np.cbrt(y) * S1
    return np.stack([np.stack([F_yy, F_yZ], -1), np.stack([F_yZ, F_ZZ], -1)], -2)


def _degenerate_side(Z: ArrayLike, Ztilde: float) -> np.ndarray:
    Z = _positive("Z", Z)
    if np.any(Z < Ztilde):
        raise InvalidValueException("Closed-form maximizer is derived for Z >= Ztilde only.")
    return _ratio(Z, Ztilde)


def ybar(Z: ArrayLike, Ztilde: float) -> ArrayLike:
    """Maximizer in y of F(., Z) for Z >= Ztilde."""
    Y = _degenerate_side(Z, Ztilde)
    return (pressure_ratio(Y) ** -0.6)[()]


def Fmax(Z: ArrayLike, Ztilde: float) -> ArrayLike:
    """max_y F(y, Z) in closed form, Z >= Ztilde."""
    Y = _degenerate_side(Z, Ztilde)
    gap = entropy_gap(Y)
    return (gap + 2.5 - 2.5 * pressure_ratio(Y) ** 0.6 + 0.1 * gap * gap)[()]


def _unit_interval(Y: ArrayLike) -> np.ndarray:
    Y = np.asarray(Y, dtype=float)
    if np.any(~(Y > 0)) or np.any(Y > 1):
        raise InvalidValueException("Y must lie in (0, 1].")
    return Y


def G(Y: ArrayLike) -> ArrayLike:
    """G(Y) = Y + 3/2 - 5/2 (3/5 + 2/5 Y^(5/3))^(3/5) + (Y - 1)^2 / 10."""
    Y = _unit_interval(Y)
    A = 0.6 + 0.4 * Y * np.cbrt(Y) ** 2
    return (Y + 1.5 - 2.5 * A ** 0.6 + 0.1 * (Y - 1.0) ** 2)[()]


def G_pp(Y: ArrayLike) -> ArrayLike:
    """G''(Y) = 1/5 + 4/15 A^(-7/5) Y^(4/3) - 2/3 A^(-2/5) Y^(-1/3)."""
    Y = _unit_interval(Y)
    A = 0.6 + 0.4 * Y * np.cbrt(Y) ** 2
    return (0.2 + 4.0 / 15.0 * A ** -1.4 * Y * np.cbrt(Y) - 2.0 / 3.0 * A ** -0.4 / np.cbrt(Y))[()]


def concavity_term(Y: ArrayLike) -> ArrayLike:
    """(3/5 + 2/5 Y^(5/3))^(-7/5) Y^(4/3), bounded on (0, 1]."""
    Y = _unit_interval(Y)
    A = 0.6 + 0.4 * Y * np.cbrt(Y) ** 2
    return (A ** -1.4 * Y * np.cbrt(Y))[()]


def G_limit_at_zero() -> float:
    """lim_{Y -> 0+} G(Y) = 5/2 (3/5 - (3/5)^(3/5)) + 1/10."""
    return 2.5 * (0.6 - 0.6 ** 0.6) + 0.1
