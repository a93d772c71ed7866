"""Sampled certificate of the structural properties of the hybrid EOS."""

import logging

import numpy as np

from nsf_rarefaction.domain.shared.verification import VerificationReport
from nsf_rarefaction.domain.thermo.eos import HybridEos
from nsf_rarefaction.domain.thermo.value_objects import EosParams

logger = logging.getLogger(__name__)

JUNCTION_DELTA = 1e-8
JUNCTION_TOL = 1e-6
DECAY_TOL = 1e-3
FD_TOL = 1e-6
FD_CONDITIONING = 1e2
ROUNDTRIP_TOL = 1e-10
# theta cannot be recovered to ROUNDTRIP_TOL once rho e hides it below round-off
ROUNDTRIP_CONDITIONING = 1e4


def _log_uniform(rng: np.random.Generator, lo: float, hi: float, n: int) -> np.ndarray:
    return np.exp(rng.uniform(np.log(lo), np.log(hi), n))


def verify_eos_structure(
    params: EosParams,
    samples: int = 1000,
    seed: int = 0,
) -> VerificationReport:
    """Check junction regularity, asymptotics, derivatives and inversion of the EOS."""
    eos = HybridEos(params)
    Zt = params.Ztilde
    rng = np.random.default_rng(seed)
    report = VerificationReport(title=f"EOS structure (Ztilde={Zt:g}, a={params.a_eps:g})")

    # gaps relative to P(Zt) = Zt, S(Zt) = 1, P'(Zt) = 1 and S'(Zt) = -1/Zt
    lo, hi = Zt * (1.0 - JUNCTION_DELTA), Zt * (1.0 + JUNCTION_DELTA)
    gaps = {
        "P": abs(eos.P(lo) - eos.P(hi)) / Zt,
        "S": abs(eos.S(lo) - eos.S(hi)),
        "dP": abs(eos.dP(lo) - eos.dP(hi)),
        "dS": abs(eos.dS(lo) - eos.dS(hi)) * Zt,
    }
    worst = max(gaps, key=gaps.get)
    report.add(
        "junction_continuity",
        gaps[worst] <= JUNCTION_TOL,
        gaps[worst],
        JUNCTION_TOL,
        witness={"Z": Zt, "relative_delta": JUNCTION_DELTA},
        note=f"largest gap in {worst}",
    )

    Z = Zt * np.logspace(0.0, 6.0, 2001)
    ratio = eos.P_over_Z(Z) / np.cbrt(Z) ** 2
    increase = np.diff(ratio) - 1e-14 * ratio[1:]
    p_inf = 0.6 * Zt ** (-2.0 / 3.0)
    monotone = bool(np.all(increase <= 0.0))
    k = int(np.argmax(increase))
    report.add(
        "pressure_ratio_monotone",
        monotone,
        float(increase[k]),
        0.0,
        witness={"Z": float(Z[k + 1])},
    )
    report.add(
        "pressure_ratio_limit",
        abs(ratio[-1] - p_inf) <= DECAY_TOL,
        abs(ratio[-1] - p_inf),
        DECAY_TOL,
        witness={"Z": float(Z[-1]), "p_inf": p_inf},
    )

    Zs = Zt * np.logspace(-6.0, 6.0, 2001)
    dS = eos.dS(Zs)
    j = int(np.argmax(dS))
    report.add("entropy_decreasing", bool(np.all(dS < 0.0)), float(dS[j]), 0.0, witness={"Z": float(Zs[j])})
    tail = float(eos.S(Zt * 1e6))
    report.add(
        "entropy_vanishes_at_infinity",
        abs(tail - 1e-6) <= 4 * np.finfo(float).eps * 1e-6,
        tail,
        1e-6,
        witness={"Z": Zt * 1e6},
    )

    rho = _log_uniform(rng, 1e-3, 1e3, samples)
    theta = _log_uniform(rng, 1e-3, 1e3, samples)
    a = params.a_eps
    rho_s = eos.entropy(rho, theta).rho_s
    rho_e = eos.internal_energy(rho, theta)
    upper = a * theta ** 3 + rho * (1.0 + np.abs(np.log(rho))) + rho * np.maximum(np.log(theta), 0.0)
    lower = a * theta ** 4 + rho ** (5.0 / 3.0) + rho * theta
    C = float(np.max(rho_s / upper))
    c = float(np.min(rho_e / lower))
    report.add("entropy_dominated_constant", np.isfinite(C), C, np.inf, hard=True,
               note="single C with rho s <= C (a theta^3 + rho(1+|log rho|) + rho log+ theta)")
    report.add("energy_coercivity_constant", c > 0.0, c, 0.0,
               note="single c with rho e >= c (a theta^4 + rho^(5/3) + rho theta)")

    # central differences resolve a derivative only to eps * p / (h * x * dp/dx)
    conditioning = np.maximum(
        eos.pressure(rho, theta) / (theta * eos.dp_dtheta(rho, theta)),
        eos.structural_pressure(rho, theta) / (rho * eos.dp_drho(rho, theta)),
    )
    usable = (np.abs(eos.degeneracy(rho, theta) / Zt - 1.0) > 1e-3) & (conditioning <= FD_CONDITIONING)
    r, t = rho[usable], theta[usable]
    hr, ht = 1e-6 * r, 1e-6 * t
    # the radiation term is independent of rho
    fd_rho = (eos.structural_pressure(r + hr, t) - eos.structural_pressure(r - hr, t)) / (2 * hr)
    fd_theta = (eos.pressure(r, t + ht) - eos.pressure(r, t - ht)) / (2 * ht)
    err_rho = np.abs(fd_rho / eos.dp_drho(r, t) - 1.0)
    err_theta = np.abs(fd_theta / eos.dp_dtheta(r, t) - 1.0)
    err = np.maximum(err_rho, err_theta)
    m = int(np.argmax(err))
    report.add(
        "pressure_derivatives_fd",
        err[m] <= FD_TOL,
        float(err[m]),
        FD_TOL,
        witness={"rho": float(r[m]), "theta": float(t[m])},
        note=f"{int(np.count_nonzero(~usable))} samples near the junction or ill-conditioned skipped",
    )

    well_posed = eos.energy_inversion_conditioning(rho, theta) <= ROUNDTRIP_CONDITIONING
    r, t = rho[well_posed], theta[well_posed]
    rel = np.abs(eos.invert_energy(r, rho_e[well_posed]) / t - 1.0)
    m = int(np.argmax(rel))
    report.add(
        "invert_energy_roundtrip",
        rel[m] <= ROUNDTRIP_TOL,
        float(rel[m]),
        ROUNDTRIP_TOL,
        witness={"rho": float(r[m]), "theta": float(t[m])},
        note=f"{int(np.count_nonzero(~well_posed))} samples with conditioning above {ROUNDTRIP_CONDITIONING:g} skipped",
    )

    bound = eos.wave_speed_bound(rho, theta)
    reference = np.sqrt(5.0 / 3.0 * eos.pressure(rho, theta) / rho)
    slack = float(np.min(bound - reference))
    report.add("wave_speed_bound", slack >= 0.0, slack, 0.0)
    covered = float(np.mean(bound >= np.sqrt(eos.sound_speed_sq(rho, theta))))
    report.add("wave_speed_covers_adiabatic", covered == 1.0, covered, 1.0, hard=False,
               note="fraction of samples where the bound exceeds the adiabatic sound speed")

    logger.info("EOS verification finished: %s", "PASS" if report.passed else "FAIL")
    return report
