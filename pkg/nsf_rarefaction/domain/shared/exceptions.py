"""Domain exceptions."""

from typing import Any, Dict, Optional


class DomainException(Exception):
    """Base exception for domain logic violations."""

    def __init__(self, message: str):
        self.message = message
        super().__init__(self.message)


class InvalidValueException(DomainException):
    """Exception for invalid value object creation or out-of-domain arguments."""
    pass


class BusinessRuleViolation(DomainException):
    """Exception for admissibility and compatibility violations."""
    pass


class ConfigurationError(BusinessRuleViolation):
    """Invalid experiment configuration, located by key and line."""

    def __init__(self, key: str, constraint: str, line: Optional[int] = None):
        self.key = key
        self.constraint = constraint
        self.line = line
        where = f" (line {line})" if line is not None else ""
        super().__init__(f"Invalid config key '{key}'{where}: {constraint}")


class RootFindingError(DomainException):
    """A monotone scalar solve could not bracket or converge."""
    pass


class PositivityFailure(DomainException):
    """Density or temperature lost positivity during time integration."""

    def __init__(self, t: float, cell: int, state: Dict[str, Any]):
        self.t = t
        self.cell = cell
        self.state = state
        super().__init__(
            f"Positivity lost at t={t:.6g} in cell {cell}: {state}"
        )

    def to_record(self) -> Dict[str, Any]:
        """Diagnostic record of the abort."""
        return {"t": self.t, "cell": self.cell, **self.state}
