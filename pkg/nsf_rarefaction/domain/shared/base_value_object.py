"""Base Value Object class."""

from abc import ABC
from dataclasses import fields
from typing import Any, Dict


class ValueObject(ABC):
    """Base class for all value objects.

    Concrete value objects are frozen dataclasses; equality and hashing come
    from the dataclass machinery, validation lives in ``__post_init__``.
    """

    def to_dict(self) -> Dict[str, Any]:
        """Convert to a flat dictionary of field values."""
        return {f.name: getattr(self, f.name) for f in fields(self)}
