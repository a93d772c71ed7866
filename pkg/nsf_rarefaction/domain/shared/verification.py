"""Verification report shared by the EOS and inequality certificates."""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional


@dataclass
class CheckEntry:
    """One assertion of a verification run."""

    name: str
    passed: bool
    value: float
    threshold: float
    hard: bool = True
    witness: Dict[str, float] = field(default_factory=dict)
    note: str = ""

    @property
    def status(self) -> str:
        if not self.hard:
            return "INFO"
        return "PASS" if self.passed else "FAIL"


@dataclass
class VerificationReport:
    """Collection of checks; failures are entries, never exceptions."""

    title: str
    entries: List[CheckEntry] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)

    def add(
        self,
        name: str,
        passed: bool,
        value: float,
        threshold: float,
        hard: bool = True,
        witness: Optional[Dict[str, float]] = None,
        note: str = "",
    ) -> CheckEntry:
        entry = CheckEntry(
            name=name,
            passed=bool(passed),
            value=float(value),
            threshold=float(threshold),
            hard=hard,
            witness=dict(witness or {}),
            note=note,
        )
        self.entries.append(entry)
        return entry

    @property
    def passed(self) -> bool:
        """True iff every hard assertion passed."""
        return all(e.passed for e in self.entries if e.hard)

    def entry(self, name: str) -> CheckEntry:
        for e in self.entries:
            if e.name == name:
                return e
        raise KeyError(name)

    def to_rows(self) -> List[Dict[str, Any]]:
        """Flat rows for CSV serialization."""
        rows = []
        for e in self.entries:
            witness = ";".join(f"{k}={v!r}" for k, v in sorted(e.witness.items()))
            rows.append({
                "name": e.name,
                "status": e.status,
                "value": repr(e.value),
                "threshold": repr(e.threshold),
                "witness": witness,
                "note": e.note,
            })
        return rows

    def summary(self) -> str:
        """Human-readable summary with pass/fail per assertion."""
        lines = [self.title, "=" * len(self.title)]
        for e in self.entries:
            line = f"[{e.status}] {e.name}: value={e.value:.6g} threshold={e.threshold:.6g}"
            if e.witness and not e.passed:
                line += " witness=" + ", ".join(
                    f"{k}={v:.6g}" for k, v in sorted(e.witness.items())
                )
            if e.note:
                line += f"  ({e.note})"
            lines.append(line)
        for note in self.notes:
            lines.append(f"note: {note}")
        lines.append("RESULT: " + ("PASS" if self.passed else "FAIL"))
        return "\n".join(lines)
