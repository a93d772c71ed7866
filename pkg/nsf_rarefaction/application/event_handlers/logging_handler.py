import json
import logging

logger = logging.getLogger(__name__)

# per-report events are routine; lifecycle events are announced
QUIET_EVENTS = ("ReportRecorded",)


def log_event_handler(event_data: dict):
    """Log a domain event with its payload."""
    level = logging.DEBUG if event_data["event_name"] in QUIET_EVENTS else logging.INFO
    logger.log(
        level,
        "%s [%s #%s] t=%.6g %s",
        event_data["event_name"],
        event_data["run_id"],
        event_data["sequence"],
        event_data["t"],
        json.dumps(event_data["payload"], default=repr, sort_keys=True),
    )
