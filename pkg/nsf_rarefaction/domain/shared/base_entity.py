"""Base class for run aggregates."""

from abc import ABC
from typing import List

from .domain_event import DomainEvent
from .exceptions import BusinessRuleViolation, InvalidValueException


class Entity(ABC):
    """Identified by a run id; buffers the events it raises until pulled."""

    def __init__(self, entity_id: str):
        if not entity_id:
            raise InvalidValueException("Entity id must be a non-empty string.")
        self._id = entity_id
        self._events: List[DomainEvent] = []
        self._raised = 0

    @property
    def id(self) -> str:
        return self._id

    @property
    def events_raised(self) -> int:
        """Events raised over the lifetime, pulled or not."""
        return self._raised

    def _raise_event(self, event: DomainEvent):
        if event.run_id != self._id:
            raise BusinessRuleViolation(f"Event for run {event.run_id!r} raised by {self._id!r}.")
        event.sequence = self._raised
        self._raised += 1
        self._events.append(event)

    def pull_events(self) -> List[DomainEvent]:
        """Pull and clear the buffered events, in the order raised."""
        events = self._events.copy()
        self._events.clear()
        return events
