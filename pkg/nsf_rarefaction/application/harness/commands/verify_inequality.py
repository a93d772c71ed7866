"""Command for certifying the dissipation inequality on a grid."""

import logging
from dataclasses import dataclass, field
from typing import List, Optional, Sequence

from nsf_rarefaction.domain.inequality import IneqGrid, certify
from nsf_rarefaction.domain.reports import ReportRepository
from nsf_rarefaction.domain.shared.verification import VerificationReport

logger = logging.getLogger(__name__)


@dataclass
class VerifyInequalityCommand:
    """Command to certify F <= 0 and the concavity of G for each junction value."""

    Ztildes: Sequence[float] = (0.1, 1.0, 10.0)
    grid: IneqGrid = field(default_factory=IneqGrid)


class VerifyInequalityHandler:
    """Handler for VerifyInequalityCommand."""

    def __init__(self, repository: Optional[ReportRepository] = None):
        self.repository = repository

    def handle(self, command: VerifyInequalityCommand) -> List[VerificationReport]:
        reports = []
        for Ztilde in command.Ztildes:
            logger.info("Certifying Ztilde=%g on a %dx%d grid", Ztilde, command.grid.y_points, command.grid.z_points)
            report = certify(command.grid, Ztilde)
            if self.repository is not None:
                self.repository.save_verification(f"verify_inequality_Ztilde_{Ztilde!r}", report)
            reports.append(report)
        return reports
