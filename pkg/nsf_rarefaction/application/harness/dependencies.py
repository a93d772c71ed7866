"""Dependency wiring for the experiment harness."""

from functools import lru_cache

from nsf_rarefaction.infrastructure.event_bus import EventBus
from nsf_rarefaction.infrastructure.persistence import CsvReportRepository
from nsf_rarefaction.application.harness.services import (
    HarnessApplicationService,
    IHarnessApplicationService,
)
from nsf_rarefaction.application.event_handlers.logging_handler import log_event_handler
from nsf_rarefaction.application.event_handlers.auditing_handler import auditing_handler

RUN_EVENTS = ["RunStarted", "ReportRecorded", "PositivityLost", "RunCompleted"]


@lru_cache()
def get_event_bus() -> EventBus:
    """Get a singleton EventBus with the harness handlers registered."""
    event_bus = EventBus()
    for event_name in RUN_EVENTS:
        event_bus.register(event_name, log_event_handler)

    # the audit trail only keeps run outcomes
    event_bus.register("RunCompleted", auditing_handler)
    event_bus.register("PositivityLost", auditing_handler)
    return event_bus


def get_harness_application_service() -> IHarnessApplicationService:
    """Factory for the application service writing CSV reports."""
    return HarnessApplicationService(CsvReportRepository, get_event_bus())
