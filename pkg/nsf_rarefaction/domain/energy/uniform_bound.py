"""Uniform-in-eps bound on the growth of the ballistic energy."""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Mapping, Sequence, Tuple

from nsf_rarefaction.domain.energy.value_objects import EnergyReport
from nsf_rarefaction.domain.shared.exceptions import InvalidValueException

logger = logging.getLogger(__name__)

RATIO_LIMIT = 1.1
ZERO_TOL = 1e-10


@dataclass
class UniformBoundVerdict:
    """Fitted constant C with B(t) [+ D(t)] <= B(t0) + C (t - t0) for every run."""

    C: float
    per_eps: Dict[float, float]
    ratios: List[Tuple[float, float, float]] = field(default_factory=list)
    include_dissipation: bool = True
    passed: bool = True

    def summary(self) -> str:
        lines = [f"uniform bound C={self.C:.6g} (dissipation {'on' if self.include_dissipation else 'off'})"]
        for eps, c in self.per_eps.items():
            lines.append(f"  eps={eps:g}: C_eps={c:.6g}")
        for a, b, r in self.ratios:
            lines.append(f"  C({b:g})/C({a:g}) = {r:.4g}")
        lines.append("RESULT: " + ("PASS" if self.passed else "FAIL"))
        return "\n".join(lines)


def fitted_constant(reports: Sequence[EnergyReport], include_dissipation: bool = True) -> float:
    """Smallest C >= 0 with B(t) [+ D(t)] <= B(t0) + C (t - t0) on the trajectory."""
    if not reports:
        raise InvalidValueException("Empty trajectory.")
    first = reports[0]
    C = 0.0
    for r in reports[1:]:
        if r.t <= first.t:
            continue
        growth = r.ballistic_total - first.ballistic_total
        if include_dissipation:
            growth += r.dissipation_accum - first.dissipation_accum
        C = max(C, growth / (r.t - first.t))
    return C


def uniform_bound_probe(
    trajectories: Mapping[float, Sequence[EnergyReport]],
    include_dissipation: bool = True,
    ratio_limit: float = RATIO_LIMIT,
) -> UniformBoundVerdict:
    """Fit C per eps and check it does not grow as eps decreases."""
    per_eps = {
        eps: fitted_constant(trajectories[eps], include_dissipation)
        for eps in sorted(trajectories, reverse=True)
    }
    scale = max([1.0] + [abs(t[0].ballistic_total) for t in trajectories.values() if t])
    atol = ZERO_TOL * scale
    verdict = UniformBoundVerdict(
        C=max(per_eps.values(), default=0.0),
        per_eps=per_eps,
        include_dissipation=include_dissipation,
    )
    ordered = list(per_eps.items())
    for (eps_a, c_a), (eps_b, c_b) in zip(ordered, ordered[1:]):
        if c_a > atol:
            ratio = c_b / c_a
        else:
            ratio = 1.0 if c_b <= atol else float("inf")
        verdict.ratios.append((eps_a, eps_b, ratio))
        if c_b > ratio_limit * c_a + atol:
            verdict.passed = False
            logger.warning("Uniform bound grows from eps=%g (C=%.6g) to eps=%g (C=%.6g)", eps_a, c_a, eps_b, c_b)
    return verdict
