import pytest

from nsf_rarefaction.core.enums import RadiationRule
from nsf_rarefaction.domain.energy import bregman_properties_check
from nsf_rarefaction.domain.shared.exceptions import InvalidValueException
from nsf_rarefaction.domain.thermo import EosParams
from nsf_rarefaction.domain.thermo.verification import verify_eos_structure

pytestmark = pytest.mark.unit


@pytest.mark.parametrize("Ztilde", [0.1, 1.0, 10.0])
@pytest.mark.parametrize("eps", [0.0, 0.1])
def test_eos_structure_passes(Ztilde, eps):
    report = verify_eos_structure(EosParams.for_eps(eps, RadiationRule.SQUARE, Ztilde=Ztilde))
    assert report.passed, report.summary()
    assert report.entry("junction_continuity").value <= 1e-6
    assert report.entry("pressure_ratio_limit").value <= 1e-3
    assert report.entry("invert_energy_roundtrip").value <= 1e-10
    assert report.entry("entropy_vanishes_at_infinity").value == pytest.approx(1e-6, rel=1e-12)


@pytest.mark.parametrize("Ztilde", [0.01, 0.1, 100.0])
def test_junction_gaps_are_relative(Ztilde):
    """The dS gap grows like delta / Ztilde^2 in absolute terms; scaled by Ztilde it stays O(delta)."""
    entry = verify_eos_structure(EosParams(Ztilde=Ztilde), samples=200).entry("junction_continuity")
    assert entry.passed
    assert entry.value <= 1e-7
    assert entry.witness == {"Z": Ztilde, "relative_delta": 1e-8}


def test_roundtrip_skips_unrecoverable_states():
    entry = verify_eos_structure(EosParams(Ztilde=0.1)).entry("invert_energy_roundtrip")
    assert entry.passed
    skipped = int(entry.note.split()[0])
    assert 0 < skipped < 500


def test_eos_report_rows_and_summary():
    report = verify_eos_structure(EosParams(), samples=200)
    rows = report.to_rows()
    assert [row["name"] for row in rows] == [e.name for e in report.entries]
    assert {"name", "status", "value", "threshold", "witness", "note"} <= set(rows[0])
    assert report.summary().splitlines()[-1] == "RESULT: PASS"


@pytest.mark.parametrize("a_rule", [RadiationRule.ZERO, RadiationRule.SQUARE])
def test_bregman_properties(a_rule):
    """Relative energy is a Bregman distance: >= 0, zero on the diagonal, convex."""
    report = bregman_properties_check(EosParams.for_eps(0.1, a_rule, Ztilde=1.0), sample_count=10_000)
    assert report.passed, report.summary()
    assert report.entry("non_negative").value >= -1e-12
    assert report.entry("midpoint_convexity").value <= 1e-10


def test_bregman_needs_enough_samples():
    with pytest.raises(InvalidValueException):
        bregman_properties_check(EosParams(), sample_count=10)
