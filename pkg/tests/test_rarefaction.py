import math

import numpy as np
import pytest

from nsf_rarefaction.core.enums import WaveFamily
from nsf_rarefaction.domain.shared.exceptions import BusinessRuleViolation, InvalidValueException
from nsf_rarefaction.domain.thermo import FlowState
from nsf_rarefaction.domain.wave import (
    RarefactionWave,
    RiemannEndStates,
    WaveChecks,
    connect_right_state,
    domain_halfwidth,
    euler_residual,
    evaluate,
)

pytestmark = pytest.mark.unit

C_L = math.sqrt(5.0 / 3.0)


def test_connect_right_state_reference(left_state):
    ends = connect_right_state(left_state, WaveFamily.FIRST, 0.5)
    assert ends.right.theta == pytest.approx(0.5 ** (2.0 / 3.0), rel=1e-14)
    assert ends.right.u == pytest.approx(1.798993, abs=1e-5)
    assert ends.right.Z == pytest.approx(ends.left.Z, rel=1e-12)


def test_connect_right_state_zero_strength(left_state):
    ends = connect_right_state(left_state, WaveFamily.FIRST, 1.0)
    assert ends.right == left_state
    assert ends.is_trivial


def test_connect_right_state_rejects_compression(left_state):
    with pytest.raises(BusinessRuleViolation):
        connect_right_state(left_state, WaveFamily.FIRST, 2.0)
    with pytest.raises(BusinessRuleViolation):
        connect_right_state(left_state, WaveFamily.THIRD, 0.5)


def test_connect_right_state_third_family(left_state):
    ends = connect_right_state(left_state, WaveFamily.THIRD, 2.0)
    theta_R = 2.0 ** (2.0 / 3.0)
    assert ends.right.u == pytest.approx(1.0 + 3.0 * (math.sqrt(5.0 * theta_R / 3.0) - C_L), rel=1e-14)
    head, tail = ends.characteristic_speeds(WaveFamily.THIRD)
    assert tail > head


def test_end_states_must_share_degeneracy():
    with pytest.raises(BusinessRuleViolation):
        RiemannEndStates(left=FlowState(1.0, 1.0, 1.0), right=FlowState(0.5, 1.0, 1.5))


def test_domain_halfwidth_reference(default_wave):
    assert default_wave.L == pytest.approx(1.694194, abs=1e-5)
    assert domain_halfwidth(default_wave.ends, WaveFamily.FIRST, 0.5) == default_wave.L
    with pytest.raises(InvalidValueException):
        domain_halfwidth(default_wave.ends, WaveFamily.FIRST, 0.0)


def test_fan_speeds(default_wave):
    assert default_wave.xi_head == pytest.approx(1.0 - C_L, rel=1e-14)
    assert default_wave.xi_tail == pytest.approx(default_wave.ends.right.u - default_wave.ends.right.sound_speed())
    assert default_wave.xi_head < default_wave.xi_tail


def test_evaluate_constant_regions(default_wave):
    rho, theta, u = evaluate(default_wave, 0.25, np.array([-1.0, 1.0]))
    np.testing.assert_allclose(rho, [1.0, 0.5])
    np.testing.assert_allclose(theta, [1.0, 0.5 ** (2.0 / 3.0)])
    np.testing.assert_allclose(u, [1.0, default_wave.ends.right.u])


def test_evaluate_is_continuous_at_fan_edges(default_wave):
    t = 0.3
    for xi in (default_wave.xi_head, default_wave.xi_tail):
        inside = default_wave.evaluate(t, (xi + 1e-12) * t)
        outside = default_wave.evaluate(t, (xi - 1e-12) * t)
        for a, b in zip(inside, outside):
            assert a == pytest.approx(b, abs=1e-9)


def test_evaluate_rejects_time_zero(default_wave):
    with pytest.raises(InvalidValueException):
        default_wave.evaluate(0.0, 0.0)


def test_riemann_datum(default_wave):
    rho, _, u = default_wave.riemann_datum(np.array([-1e-9, 0.0, 1.0]))
    np.testing.assert_array_equal(rho, [1.0, 0.5, 0.5])
    assert u[0] == 1.0


def test_fan_has_constant_degeneracy_and_entropy(default_wave):
    checks = WaveChecks(default_wave, 0.5)
    assert checks.degeneracy_deviation() <= 1e-12
    assert checks.entropy_deviation() <= 1e-12


def test_velocity_increases_and_slope_identity(default_wave):
    checks = WaveChecks(default_wave, 0.4)
    assert checks.velocity_increase() >= -1e-12
    assert checks.slope_identity() <= 1e-8


def test_analytic_gradients_match_differences(default_wave):
    t, h = 0.4, 1e-6
    x = np.linspace(default_wave.xi_head * t, default_wave.xi_tail * t, 7)[1:-1]
    grads = default_wave.gradients(t, x)
    plus, minus = default_wave.evaluate(t, x + h), default_wave.evaluate(t, x - h)
    for g, p, m in zip(grads, plus, minus):
        np.testing.assert_allclose(g, (p - m) / (2 * h), rtol=1e-6)


def test_euler_residual_is_second_order(default_wave):
    """Halving the stencil divides the fan residual by about four."""
    coarse = euler_residual(default_wave, 0.3, 1e-3)
    fine = euler_residual(default_wave, 0.3, 5e-4)
    assert coarse.samples > 0
    assert fine.worst < 0.5 * coarse.worst
    assert coarse.worst / fine.worst == pytest.approx(4.0, rel=0.1)


def test_euler_residual_validates_stencil(default_wave):
    with pytest.raises(InvalidValueException):
        euler_residual(default_wave, 0.1, 0.2)


def test_wave_checks_report_passes(default_wave):
    report = WaveChecks(default_wave, 0.5).report()
    assert report.passed, report.summary()


def test_reflection_swaps_family(default_wave):
    mirrored = default_wave.reflected()
    assert mirrored.family is WaveFamily.THIRD
    assert mirrored.ends.left.u == pytest.approx(-default_wave.ends.right.u)
    assert mirrored.needs_reflection
    assert mirrored.oriented() == default_wave
    x = np.linspace(-1.0, 1.0, 11)
    rho, theta, u = mirrored.evaluate(0.3, x)
    rho_o, theta_o, u_o = default_wave.evaluate(0.3, -x)
    np.testing.assert_allclose(rho, rho_o, rtol=1e-13)
    np.testing.assert_allclose(u, -u_o, rtol=1e-13, atol=1e-15)


def test_wave_needs_outgoing_velocity_sign():
    with pytest.raises(BusinessRuleViolation):
        RarefactionWave.from_left_state(FlowState(1.0, 1.0, 0.0), WaveFamily.FIRST, 0.5, T=0.5)


def test_fan_must_stay_inside_domain(left_state):
    with pytest.raises(BusinessRuleViolation):
        RarefactionWave.from_left_state(left_state, WaveFamily.FIRST, 0.5, T=0.5, L=0.2)
