"""In-process event bus dispatching domain events to registered handlers."""

import logging
from typing import Callable, Dict, Iterable, List

from nsf_rarefaction.domain.shared.domain_event import DomainEvent

logger = logging.getLogger(__name__)


class EventBus:
    """Synchronous publish/subscribe keyed by event name."""

    def __init__(self):
        self._handlers: Dict[str, List[Callable]] = {}

    def register(self, event_name: str, handler: Callable):
        """Register a handler for a specific event name."""
        if event_name not in self._handlers:
            self._handlers[event_name] = []
        self._handlers[event_name].append(handler)

    def publish(self, event: DomainEvent):
        """Dispatch the serialized event to every handler of its name."""
        event_data = event.to_dict()
        for handler in self._handlers.get(event.event_name, []):
            try:
                handler(event_data)
            except Exception as e:
                logger.error("Error in handler %s for %s: %s", getattr(handler, "__name__", handler),
                             event.event_name, e)

    def publish_all(self, events: Iterable[DomainEvent]):
        for event in events:
            self.publish(event)
