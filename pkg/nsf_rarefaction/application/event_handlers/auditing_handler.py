"""Audit trail of run lifecycle events."""

import logging
from typing import Dict, List, Optional

logger = logging.getLogger(__name__)


class AuditTrail:
    """Event handler collecting run outcomes for the end-of-command summary."""

    def __init__(self):
        self.records: List[dict] = []

    def __call__(self, event_data: dict):
        self.records.append({
            "event_name": event_data["event_name"],
            "run": event_data["run_id"],
            "t": event_data["t"],
            **event_data["payload"],
        })

    def drain(self, event_name: Optional[str] = None) -> List[dict]:
        """Remove and return the records, optionally only those of one event."""
        taken, kept = [], []
        for record in self.records:
            (taken if event_name in (None, record["event_name"]) else kept).append(record)
        self.records = kept
        return taken

    def lines(self) -> List[str]:
        """One summary line per completed or aborted run, clearing the trail."""
        lines = []
        for record in self.drain():
            if record["event_name"] == "RunCompleted":
                lines.append(
                    f"{record['run']}: completed at t={record['t']:.6g} after {record['steps']} steps, "
                    f"mass closure {record['mass_closure']:.3e}"
                )
            elif record["event_name"] == "PositivityLost":
                lines.append(f"{record['run']}: aborted at t={record['t']:.6g} in cell {record['cell']}")
        return lines

    def counts(self) -> Dict[str, int]:
        counts: Dict[str, int] = {}
        for record in self.records:
            counts[record["event_name"]] = counts.get(record["event_name"], 0) + 1
        return counts


auditing_handler = AuditTrail()
