"""Events raised by run aggregates."""

from abc import ABC
from datetime import datetime, timezone
from typing import Any, Dict, Optional
from uuid import uuid4


class DomainEvent(ABC):
    """Base class for run events.

    Every event belongs to one run and is stamped with the simulated time it
    refers to. ``sequence`` is assigned by the raising entity.
    """

    def __init__(self, run_id: str, t: float):
        self.event_id = uuid4()
        self.run_id = run_id
        self.t = float(t)
        self.sequence: Optional[int] = None
        self.occurred_at = datetime.now(timezone.utc)

    @property
    def event_name(self) -> str:
        return self.__class__.__name__

    def to_dict(self) -> Dict[str, Any]:
        """Serialized form handed to event bus handlers."""
        return {
            "event_id": str(self.event_id),
            "event_name": self.event_name,
            "run_id": self.run_id,
            "sequence": self.sequence,
            "t": self.t,
            "occurred_at": self.occurred_at.isoformat(),
            "payload": self._get_payload(),
        }

    def _get_payload(self) -> Dict[str, Any]:
        """Event-specific fields besides run id and time."""
        return {}
