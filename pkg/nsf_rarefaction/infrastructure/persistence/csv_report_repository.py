"""CSV storage of sweep outputs.

Layout under the output directory::

    runs/run_eps_<eps>.csv   full trajectory of one run
    aggregate.csv            probe-time rows of every run
    rates.csv                log-log slopes per metric and probe time
    long.csv                 eps, t, metric, value (plot-ready)
    aborted.csv              diagnostic records of aborted runs
    snapshots_eps_<eps>.csv  fields of a single simulate run
    wave_t_<t>.csv           sampled exact wave
    README.md                the schemas above

Floats are written with ``repr`` so every file re-parses to the same values.
"""

import csv
import logging
from pathlib import Path
from typing import Dict, Iterable, List, Sequence, Union

from nsf_rarefaction.domain.energy import EnergyReport
from nsf_rarefaction.domain.reports import RateEstimate, ReportRepository
from nsf_rarefaction.domain.shared.exceptions import DomainException
from nsf_rarefaction.domain.shared.verification import VerificationReport

logger = logging.getLogger(__name__)

RUN_PREFIX = "run_eps_"
LONG_COLUMNS = ["eps", "t", "metric", "value"]
ABORT_COLUMNS = ["eps", "t", "cell", "state"]
SNAPSHOT_COLUMNS = ["t", "x1", "rho", "u", "theta"]
WAVE_COLUMNS = ["t", "x1", "rho", "theta", "u"]
VERIFICATION_COLUMNS = ["name", "status", "value", "threshold", "witness", "note"]

README = """# Output files

All floating-point values are written with full round-trip precision.

## runs/run_eps_<eps>.csv
One row per report of the run with that eps, t = 0 included.
Columns: eps, t, E_rel_total, L1_rho, L1_theta, L1_m, ballistic_total, dissipation_accum.

## aggregate.csv
Rows of every completed run at the configured probe times, ordered by the
configured eps list, then by t. Same columns as the run files.

## rates.csv
Least-squares slope of log(metric) against log(eps) per probe time.
Columns: metric, t, slope, intercept, residual_rms, n_points, note.
A slope of nan marks a degenerate fit; the note says why.

## long.csv
Plot-ready long format. Columns: eps, t, metric, value.

## aborted.csv
Runs stopped by a positivity failure. Columns: eps, t, cell, state.

## snapshots_eps_<eps>.csv
Written by `simulate`: primitive fields at every report time.
Columns: t, x1, rho, u, theta.

## wave_t_<t>.csv
Written by `wave`: the exact rarefaction on the cell centres.
Columns: t, x1, rho, theta, u.

## <check>.csv, <check>.txt
Verification reports (`verify-eos`, `verify-inequality`): one row per check.
Columns: name, status, value, threshold, witness, note. The .txt file holds
the printed summary.
"""


class CsvReportRepository(ReportRepository):
    """ReportRepository writing plain CSV files into one directory."""

    def __init__(self, directory: Union[str, Path]):
        self.directory = Path(directory)

    def _path(self, *parts: str) -> Path:
        return self.directory.joinpath(*parts)

    def _write(self, path: Path, columns: List[str], rows: Iterable[Dict[str, str]]) -> None:
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            with path.open("w", newline="", encoding="utf-8") as handle:
                writer = csv.DictWriter(handle, fieldnames=columns, lineterminator="\n")
                writer.writeheader()
                for row in rows:
                    writer.writerow(row)
        except OSError as exc:
            raise DomainException(f"Cannot write {path}: {exc.strerror or exc}") from exc
        logger.debug("Wrote %s", path)

    def _read(self, path: Path) -> List[Dict[str, str]]:
        if not path.exists():
            return []
        with path.open(newline="", encoding="utf-8") as handle:
            return list(csv.DictReader(handle))

    # trajectories

    def save_run(self, eps: float, reports: Sequence[EnergyReport]) -> None:
        path = self._path("runs", f"{RUN_PREFIX}{float(eps)!r}.csv")
        self._write(path, EnergyReport.columns(), (r.to_row() for r in reports))

    def load_runs(self) -> Dict[float, List[EnergyReport]]:
        runs: Dict[float, List[EnergyReport]] = {}
        for path in sorted(self._path("runs").glob(f"{RUN_PREFIX}*.csv")):
            eps = float(path.stem[len(RUN_PREFIX):])
            runs[eps] = [EnergyReport.from_row(row) for row in self._read(path)]
        return dict(sorted(runs.items(), key=lambda item: -item[0]))

    # tables

    def save_aggregate(self, table: Sequence[EnergyReport]) -> None:
        self._write(self._path("aggregate.csv"), EnergyReport.columns(), (r.to_row() for r in table))

    def load_aggregate(self) -> List[EnergyReport]:
        return [EnergyReport.from_row(row) for row in self._read(self._path("aggregate.csv"))]

    def save_rates(self, rates: Sequence[RateEstimate]) -> None:
        self._write(self._path("rates.csv"), RateEstimate.columns(), (r.to_row() for r in rates))

    def load_rates(self) -> List[RateEstimate]:
        return [RateEstimate.from_row(row) for row in self._read(self._path("rates.csv"))]

    def save_long(self, table: Sequence[EnergyReport]) -> None:
        rows = (
            {"eps": repr(r.eps), "t": repr(r.t), "metric": metric, "value": repr(float(getattr(r, metric)))}
            for r in table
            for metric in EnergyReport.columns()[2:]
        )
        self._write(self._path("long.csv"), LONG_COLUMNS, rows)

    def save_aborts(self, records: Sequence[dict]) -> None:
        rows = []
        for record in records:
            state = {k: v for k, v in record.items() if k not in ("eps", "t", "cell")}
            rows.append({
                "eps": repr(float(record.get("eps", float("nan")))),
                "t": repr(float(record.get("t", float("nan")))),
                "cell": str(record.get("cell", "")),
                "state": ";".join(f"{k}={v!r}" for k, v in sorted(state.items())),
            })
        self._write(self._path("aborted.csv"), ABORT_COLUMNS, rows)

    def save_verification(self, name: str, report: VerificationReport) -> None:
        self._write(self._path(f"{name}.csv"), VERIFICATION_COLUMNS, report.to_rows())
        try:
            self._path(f"{name}.txt").write_text(report.summary() + "\n", encoding="utf-8")
        except OSError as exc:
            raise DomainException(f"Cannot write {name}.txt: {exc.strerror or exc}") from exc

    def save_snapshots(self, eps: float, snapshots: Sequence) -> None:
        rows = (
            {"t": repr(float(s.t)), "x1": repr(float(x)), "rho": repr(float(rho)),
             "u": repr(float(u)), "theta": repr(float(theta))}
            for s in snapshots
            for x, rho, u, theta in zip(s.x, s.rho, s.u, s.theta)
        )
        self._write(self._path(f"snapshots_eps_{float(eps)!r}.csv"), SNAPSHOT_COLUMNS, rows)

    def save_wave_profile(self, t: float, x, profile) -> None:
        rows = (
            {"t": repr(float(t)), "x1": repr(float(xi)), "rho": repr(float(rho)),
             "theta": repr(float(theta)), "u": repr(float(u))}
            for xi, rho, theta, u in zip(x, profile.rho, profile.theta, profile.u)
        )
        self._write(self._path(f"wave_t_{float(t)!r}.csv"), WAVE_COLUMNS, rows)

    def save_readme(self) -> None:
        try:
            self.directory.mkdir(parents=True, exist_ok=True)
            self._path("README.md").write_text(README, encoding="utf-8")
        except OSError as exc:
            raise DomainException(f"Cannot write README in {self.directory}: {exc.strerror or exc}") from exc
