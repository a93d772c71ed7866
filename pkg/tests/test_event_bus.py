import logging

import pytest

from nsf_rarefaction.application.event_handlers.auditing_handler import AuditTrail
from nsf_rarefaction.application.event_handlers.logging_handler import log_event_handler
from nsf_rarefaction.application.harness.dependencies import RUN_EVENTS, get_event_bus
from nsf_rarefaction.domain.flow.events import PositivityLost, ReportRecorded, RunCompleted, RunStarted
from nsf_rarefaction.domain.shared import Entity
from nsf_rarefaction.domain.shared.exceptions import BusinessRuleViolation, InvalidValueException
from nsf_rarefaction.infrastructure.event_bus import EventBus

pytestmark = pytest.mark.unit


def test_publish_reaches_registered_handlers():
    bus = EventBus()
    seen = []
    bus.register("RunStarted", seen.append)
    bus.publish(RunStarted("eps=0.1", 0.1, 64, 0.5))
    bus.publish(RunCompleted("eps=0.1", 0.5, 10, 0.0))
    assert len(seen) == 1
    assert seen[0]["event_name"] == "RunStarted"
    assert seen[0]["run_id"] == "eps=0.1"
    assert seen[0]["t"] == 0.0
    assert seen[0]["sequence"] is None
    assert seen[0]["payload"] == {"eps": 0.1, "N": 64, "T": 0.5}


def test_failing_handler_is_logged_not_raised(caplog):
    bus = EventBus()
    seen = []

    def broken(event_data):
        raise RuntimeError("boom")

    bus.register("RunCompleted", broken)
    bus.register("RunCompleted", seen.append)
    with caplog.at_level(logging.ERROR):
        bus.publish_all([RunCompleted("eps=0.1", 0.5, 10, 0.0)])
    assert len(seen) == 1
    assert "boom" in caplog.text


def test_log_event_handler_levels(caplog):
    with caplog.at_level(logging.DEBUG, logger="nsf_rarefaction"):
        log_event_handler(RunStarted("eps=0.1", 0.1, 64, 0.5).to_dict())
        log_event_handler(ReportRecorded("eps=0.1", 0.25, 1e-3, 7).to_dict())
    levels = {r.getMessage().split()[0]: r.levelno for r in caplog.records}
    assert levels == {"RunStarted": logging.INFO, "ReportRecorded": logging.DEBUG}
    assert '"N": 64' in caplog.text


def test_audit_trail():
    trail = AuditTrail()
    trail(RunCompleted("eps=0.1", 0.5, 120, 3e-15).to_dict())
    trail(PositivityLost("eps=0.01", 0.01, {"t": 0.2, "cell": 5, "rho": -1.0}).to_dict())
    assert trail.counts() == {"RunCompleted": 1, "PositivityLost": 1}

    aborted = trail.drain("PositivityLost")
    assert aborted[0]["cell"] == 5
    assert trail.counts() == {"RunCompleted": 1}

    trail(PositivityLost("eps=0.01", 0.01, {"t": 0.2, "cell": 5}).to_dict())
    lines = trail.lines()
    assert lines[0].startswith("eps=0.1: completed at t=0.5 after 120 steps")
    assert lines[1] == "eps=0.01: aborted at t=0.2 in cell 5"
    assert trail.records == []


def test_event_bus_wiring():
    bus = get_event_bus()
    assert bus is get_event_bus()
    for name in RUN_EVENTS:
        assert log_event_handler in bus._handlers[name]


class _Run(Entity):
    def report(self, t: float):
        self._raise_event(ReportRecorded(self.id, t, 0.0, 0))


def test_entity_numbers_its_events():
    run = _Run("eps=0.1")
    run.report(0.0)
    run.report(0.25)
    first = run.pull_events()
    run.report(0.5)
    second = run.pull_events()
    assert [e.sequence for e in first + second] == [0, 1, 2]
    assert run.events_raised == 3
    assert run.pull_events() == []
    data = second[0].to_dict()
    assert (data["run_id"], data["sequence"], data["t"]) == ("eps=0.1", 2, 0.5)
    assert data["payload"] == {"E_rel_total": 0.0, "steps": 0}


def test_entity_rejects_foreign_events():
    run = _Run("eps=0.1")
    with pytest.raises(BusinessRuleViolation):
        run._raise_event(RunCompleted("eps=0.2", 0.5, 10, 0.0))
    with pytest.raises(InvalidValueException):
        _Run("")


def test_positivity_event_takes_time_from_the_record():
    event = PositivityLost("eps=0.01", 0.01, {"t": 0.2, "cell": 5, "rho": -1.0})
    assert event.t == 0.2
    assert event.to_dict()["payload"] == {"eps": 0.01, "cell": 5, "rho": -1.0}
