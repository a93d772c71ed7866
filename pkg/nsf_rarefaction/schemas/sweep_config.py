"""Experiment configuration: INI sections [wave], [grid], [sweep], [output]."""

from typing import List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from nsf_rarefaction.config import get_settings
from nsf_rarefaction.core.enums import InitMode, RadiationRule, Reconstruction, WaveFamily
from nsf_rarefaction.domain.shared.exceptions import ConfigurationError, DomainException
from nsf_rarefaction.domain.thermo import EosParams, FlowState
from nsf_rarefaction.domain.wave import RarefactionWave

DEFAULT_PROBE_FRACTIONS = (0.2, 0.4, 0.6, 0.8)


def _split_list(value):
    if isinstance(value, str):
        return [item.strip() for item in value.split(",") if item.strip()]
    return value


class WaveSection(BaseModel):
    """Left state of the rarefaction and the right density it expands to."""

    model_config = ConfigDict(extra="forbid")

    rho_L: float = Field(default=1.0, gt=0, description="left density")
    theta_L: float = Field(default=1.0, gt=0, description="left temperature")
    u_L: float = Field(default=1.0, description="left velocity")
    rho_R: float = Field(gt=0, description="right density (required)")
    family: int = Field(default=1, description="characteristic family, 1 or 3")

    @field_validator("family")
    @classmethod
    def check_family(cls, value: int) -> int:
        if value not in (1, 3):
            raise ValueError("family must be 1 or 3")
        return value


class GridSection(BaseModel):
    model_config = ConfigDict(extra="forbid")

    N: int = Field(default=1600, ge=16, description="cell count")
    cfl: float = Field(default_factory=lambda: get_settings().cfl, gt=0, le=1, description="CFL number")
    T: float = Field(default=0.5, gt=0, description="final time")
    margin: float = Field(default=0.2, gt=0, description="relative domain margin")
    reconstruction: Reconstruction = Field(default=Reconstruction.MUSCL, description="first-order or muscl")


class SweepSection(BaseModel):
    model_config = ConfigDict(extra="forbid")

    eps: List[float] = Field(default_factory=lambda: list(get_settings().default_eps), description="strictly decreasing dissipation scales")
    a_rule: RadiationRule = Field(default=RadiationRule.SQUARE, description="a(eps): square, cube or zero")
    probe_times: Optional[List[float]] = Field(default=None, description="report times in (0, T]; default 0.2, 0.4, 0.6, 0.8 of T")
    init_mode: InitMode = Field(default=InitMode.MOLLIFIED_RIEMANN, description="mollified-riemann or exact-wave")
    width: Optional[float] = Field(default=None, gt=0, description="mollifier width; default max(4h, 0.01 L)")
    t0: Optional[float] = Field(default=None, gt=0, description="start time of exact-wave initialization")
    mu_bar: float = Field(default=1.0, ge=0, description="shear viscosity prefactor")
    eta_bar: float = Field(default=0.0, ge=0, description="bulk viscosity prefactor")
    kappa_bar: float = Field(default=1.0, ge=0, description="heat conductivity prefactor")
    beta: float = Field(default=6.5, gt=6, description="conductivity exponent")

    @field_validator("eps", "probe_times", mode="before")
    @classmethod
    def split_lists(cls, value):
        return _split_list(value)

    @field_validator("eps")
    @classmethod
    def check_decreasing(cls, value: List[float]) -> List[float]:
        if not value:
            raise ValueError("at least one eps value is required")
        for eps in value:
            if not eps > 0:
                raise ValueError(f"eps values must be positive, got {eps}")
        for a, b in zip(value, value[1:]):
            if not b < a:
                raise ValueError(f"eps must be strictly decreasing: {a} followed by {b}")
        return value


class OutputSection(BaseModel):
    model_config = ConfigDict(extra="forbid")

    directory: str = Field(default_factory=lambda: get_settings().output_dir, description="output directory")


class SweepConfig(BaseModel):
    """Validated configuration of the eps-sweep experiment."""

    model_config = ConfigDict(extra="forbid")

    wave: WaveSection
    grid: GridSection = Field(default_factory=GridSection)
    sweep: SweepSection = Field(default_factory=SweepSection)
    output: OutputSection = Field(default_factory=OutputSection)

    @model_validator(mode="after")
    def check_consistency(self) -> "SweepConfig":
        T = self.grid.T
        if self.sweep.probe_times is None:
            self.sweep.probe_times = [f * T for f in DEFAULT_PROBE_FRACTIONS]
        times = self.sweep.probe_times
        for t in times:
            if not 0 < t <= T:
                raise ConfigurationError("sweep.probe_times", f"{t} is not in (0, T={T}]")
        for a, b in zip(times, times[1:]):
            if not b > a:
                raise ConfigurationError("sweep.probe_times", f"must be increasing: {a} followed by {b}")

        ratios = [self.sweep.a_rule.coefficient(eps) / eps for eps in self.sweep.eps]
        for (eps_a, ra), (eps_b, rb) in zip(zip(self.sweep.eps, ratios), zip(self.sweep.eps[1:], ratios[1:])):
            if rb > ra:
                raise ConfigurationError("sweep.a_rule", f"a(eps)/eps increases from eps={eps_a} to eps={eps_b}")

        if self.sweep.init_mode is InitMode.EXACT_WAVE:
            t0 = self.sweep.t0
            if t0 is None or not t0 < T:
                raise ConfigurationError("sweep.t0", f"exact-wave initialization needs 0 < t0 < T={T}")
            if times[0] <= t0:
                raise ConfigurationError("sweep.probe_times", f"probe times must follow t0={t0}")

        try:
            self.build_wave()
        except DomainException as exc:
            raise ConfigurationError("wave.rho_R", exc.message) from exc
        return self

    # domain objects

    @property
    def wave_family(self) -> WaveFamily:
        return WaveFamily(self.wave.family)

    def left_state(self) -> FlowState:
        return FlowState(rho=self.wave.rho_L, theta=self.wave.theta_L, u=self.wave.u_L)

    def build_wave(self) -> RarefactionWave:
        """The configured wave, oriented with inflow on the left."""
        wave = RarefactionWave.from_left_state(
            self.left_state(),
            self.wave_family,
            self.wave.rho_R,
            T=self.grid.T,
            margin=self.grid.margin,
        )
        return wave.oriented()

    def eos_params(self, eps: float) -> EosParams:
        s = self.sweep
        return EosParams.for_eps(
            eps,
            s.a_rule,
            Ztilde=self.left_state().Z,
            mu_bar=s.mu_bar,
            eta_bar=s.eta_bar,
            kappa_bar=s.kappa_bar,
            beta=s.beta,
        )

    def to_ini(self) -> str:
        """Canonical INI text; parsing it gives back an equal config."""
        lines: List[str] = []
        for section in ("wave", "grid", "sweep", "output"):
            lines.append(f"[{section}]")
            for key, value in getattr(self, section).model_dump(mode="json").items():
                if value is None:
                    continue
                if isinstance(value, list):
                    text = ", ".join(repr(float(v)) for v in value)
                elif isinstance(value, float):
                    text = repr(value)
                else:
                    text = str(value)
                lines.append(f"{key} = {text}")
            lines.append("")
        return "\n".join(lines)

    @classmethod
    def describe_defaults(cls) -> List[Tuple[str, str, str]]:
        """(key, default, description) for every documented key."""
        rows = []
        for section, model in (("wave", WaveSection), ("grid", GridSection),
                               ("sweep", SweepSection), ("output", OutputSection)):
            for name, info in model.model_fields.items():
                if info.is_required():
                    default = "required"
                else:
                    default = info.get_default(call_default_factory=True)
                if hasattr(default, "value"):
                    default = default.value
                rows.append((f"{section}.{name}", str(default), info.description or ""))
        return rows
