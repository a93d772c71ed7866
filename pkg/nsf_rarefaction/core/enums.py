import enum


class WaveFamily(int, enum.Enum):
    FIRST = 1
    THIRD = 3

    @property
    def reflected(self) -> "WaveFamily":
        return WaveFamily.THIRD if self is WaveFamily.FIRST else WaveFamily.FIRST


class InitMode(str, enum.Enum):
    MOLLIFIED_RIEMANN = "mollified-riemann"
    EXACT_WAVE = "exact-wave"


class Reconstruction(str, enum.Enum):
    FIRST_ORDER = "first-order"
    MUSCL = "muscl"


class RadiationRule(str, enum.Enum):
    """How the radiation coefficient a depends on the dissipation scale."""

    SQUARE = "square"
    ZERO = "zero"
    CUBE = "cube"

    def coefficient(self, eps: float) -> float:
        if self is RadiationRule.SQUARE:
            return eps ** 2
        if self is RadiationRule.CUBE:
            return eps ** 3
        return 0.0


class RunStatus(str, enum.Enum):
    PENDING = "pending"
    RUNNING = "running"
    COMPLETED = "completed"
    ABORTED = "aborted"
