"""Value objects for the hybrid mono-atomic/radiative equation of state."""

import math
from dataclasses import dataclass

from nsf_rarefaction.core.enums import RadiationRule
from nsf_rarefaction.domain.shared import ValueObject
from nsf_rarefaction.domain.shared.exceptions import InvalidValueException


def _finite(name: str, value: float) -> float:
    if not math.isfinite(value):
        raise InvalidValueException(f"Invalid {name}: {value}. Must be finite.")
    return float(value)


@dataclass(frozen=True)
class EosParams(ValueObject):
    """Constitutive constants: junction value, radiation, dissipation scale, transport."""

    Ztilde: float = 1.0
    a_eps: float = 0.0
    eps: float = 0.0
    mu_bar: float = 1.0
    eta_bar: float = 0.0
    kappa_bar: float = 1.0
    beta: float = 6.5

    MIN_BETA = 6.0

    def __post_init__(self):
        for name in ("Ztilde", "a_eps", "eps", "mu_bar", "eta_bar", "kappa_bar", "beta"):
            _finite(name, getattr(self, name))
        if self.Ztilde <= 0:
            raise InvalidValueException(f"Invalid Ztilde: {self.Ztilde}. Must be positive.")
        if self.eps < 0:
            raise InvalidValueException(f"Invalid eps: {self.eps}. Must be non-negative.")
        if self.a_eps < 0:
            raise InvalidValueException(f"Invalid a_eps: {self.a_eps}. Must be non-negative.")
        if self.eps == 0 and self.a_eps > 0:
            # a/eps must stay finite
            raise InvalidValueException("Radiation coefficient must vanish when eps = 0.")
        for name in ("mu_bar", "eta_bar", "kappa_bar"):
            if getattr(self, name) < 0:
                raise InvalidValueException(f"Invalid {name}: {getattr(self, name)}. Must be non-negative.")
        if self.beta <= self.MIN_BETA:
            raise InvalidValueException(
                f"Invalid beta: {self.beta}. Conductivity exponent must exceed {self.MIN_BETA}."
            )

    @classmethod
    def for_eps(
        cls,
        eps: float,
        rule: RadiationRule = RadiationRule.SQUARE,
        **kwargs,
    ) -> "EosParams":
        """Parameters at dissipation scale ``eps`` with a = rule(eps)."""
        return cls(eps=eps, a_eps=rule.coefficient(eps), **kwargs)

    def with_ztilde(self, Ztilde: float) -> "EosParams":
        return EosParams(
            Ztilde=Ztilde,
            a_eps=self.a_eps,
            eps=self.eps,
            mu_bar=self.mu_bar,
            eta_bar=self.eta_bar,
            kappa_bar=self.kappa_bar,
            beta=self.beta,
        )

    @property
    def radiation_ratio(self) -> float:
        """a(eps)/eps, zero in the inviscid limit."""
        return self.a_eps / self.eps if self.eps > 0 else 0.0


@dataclass(frozen=True)
class ThermoState(ValueObject):
    """Pointwise density and absolute temperature."""

    rho: float
    theta: float

    def __post_init__(self):
        _finite("rho", self.rho)
        _finite("theta", self.theta)
        if self.rho <= 0:
            raise InvalidValueException(f"Invalid density: {self.rho}. Must be positive.")
        if self.theta <= 0:
            raise InvalidValueException(f"Invalid temperature: {self.theta}. Must be positive.")

    @property
    def Z(self) -> float:
        """Degeneracy variable rho / theta^(3/2)."""
        return self.rho / self.theta ** 1.5


@dataclass(frozen=True)
class FlowState(ThermoState):
    """Thermodynamic state with the x1-velocity."""

    u: float = 0.0

    def __post_init__(self):
        super().__post_init__()
        _finite("u", self.u)

    @property
    def momentum(self) -> float:
        return self.rho * self.u

    def reflected(self) -> "FlowState":
        """Image under x1 -> -x1."""
        return FlowState(rho=self.rho, theta=self.theta, u=-self.u)

    def sound_speed(self) -> float:
        """Isentropic sound speed of the Boyle-Mariotte branch, sqrt(5 theta / 3)."""
        return math.sqrt(5.0 * self.theta / 3.0)
