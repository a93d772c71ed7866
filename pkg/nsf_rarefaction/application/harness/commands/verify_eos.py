"""Command for verifying the structure of the equation of state."""

from dataclasses import dataclass
from typing import List, Optional

from nsf_rarefaction.core.enums import RadiationRule
from nsf_rarefaction.domain.energy import bregman_properties_check
from nsf_rarefaction.domain.reports import ReportRepository
from nsf_rarefaction.domain.shared.verification import VerificationReport
from nsf_rarefaction.domain.thermo import EosParams
from nsf_rarefaction.domain.thermo.verification import verify_eos_structure


@dataclass
class VerifyEosCommand:
    """Command to check EOS regularity and the Bregman property suite."""

    Ztilde: float = 1.0
    eps: float = 0.1
    a_rule: RadiationRule = RadiationRule.SQUARE
    samples: int = 1000
    bregman_samples: int = 10_000
    seed: int = 0


class VerifyEosHandler:
    """Handler for VerifyEosCommand."""

    def __init__(self, repository: Optional[ReportRepository] = None):
        self.repository = repository

    def handle(self, command: VerifyEosCommand) -> List[VerificationReport]:
        params = EosParams.for_eps(command.eps, RadiationRule(command.a_rule), Ztilde=command.Ztilde)
        reports = [
            verify_eos_structure(params, samples=command.samples, seed=command.seed),
            bregman_properties_check(params, sample_count=command.bregman_samples, seed=command.seed),
        ]
        if self.repository is not None:
            self.repository.save_verification("verify_eos", reports[0])
            self.repository.save_verification("verify_bregman", reports[1])
        return reports
