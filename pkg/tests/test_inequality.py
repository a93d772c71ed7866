import numpy as np
import pytest
from scipy.optimize import minimize_scalar

from nsf_rarefaction.domain.inequality import (
    F,
    Fmax,
    G,
    G_limit_at_zero,
    G_pp,
    IneqGrid,
    concavity_term,
    certify,
    grad_F,
    hessian_F,
    ybar,
)
from nsf_rarefaction.domain.shared.exceptions import InvalidValueException

pytestmark = pytest.mark.unit

ZTILDES = (0.1, 1.0, 10.0)
COARSE = IneqGrid(y_points=201, z_points=201, Y_points=201)


@pytest.mark.parametrize("Ztilde", ZTILDES)
def test_critical_point(Ztilde):
    """F and its gradient vanish at (1, Ztilde)."""
    assert F(1.0, Ztilde, Ztilde) == pytest.approx(0.0, abs=1e-15)
    assert F(1.0, Ztilde, Ztilde, quadratic=False) == pytest.approx(0.0, abs=1e-15)
    grad = grad_F(1.0, Ztilde, Ztilde)
    assert grad.dy == pytest.approx(0.0, abs=1e-15)
    assert grad.dZ == pytest.approx(0.0, abs=1e-15)


@pytest.mark.parametrize("Ztilde", (0.5, 1.0, 2.0))
def test_hessian_at_critical_point(Ztilde):
    H = hessian_F(1.0, Ztilde, Ztilde)
    expected = np.array([
        [-5.0 / 3.0, 2.0 / (3.0 * Ztilde)],
        [2.0 / (3.0 * Ztilde), -7.0 / (15.0 * Ztilde ** 2)],
    ])
    np.testing.assert_allclose(H, expected, rtol=1e-12)
    assert np.all(np.linalg.eigvalsh(H) < 0)


def test_F_values():
    assert F(2.0, 1.0, 1.0) == pytest.approx(2.0 - 1.5 * 2.0 ** (2.0 / 3.0), abs=1e-13)
    assert F(2.0, 1.0, 1.0) == pytest.approx(-0.381102, abs=1e-6)
    q = 0.6 + 0.4 * 2.0 ** (-5.0 / 3.0)
    assert F(1.0, 2.0, 1.0) == pytest.approx(1.025 - 1.5 * q, abs=1e-13)
    assert F(1.0, 2.0, 1.0) == pytest.approx(-0.063990, abs=5e-6)


def test_gradient_values():
    grad = grad_F(2.0, 1.0, 1.0)
    assert grad.dy == pytest.approx(0.25 - 2.0 ** (-1.0 / 3.0), abs=1e-13)
    assert grad.dy == pytest.approx(-0.543701, abs=1e-6)


@pytest.mark.parametrize("Ztilde", ZTILDES)
def test_gradient_matches_central_differences(Ztilde):
    rng = np.random.default_rng(5)
    y = np.exp(rng.uniform(np.log(0.1), np.log(10.0), 1000))
    Z = Ztilde * np.exp(rng.uniform(np.log(0.1), np.log(10.0), 1000))
    # the second derivative in Z jumps at the junction
    keep = np.abs(Z / Ztilde - 1.0) > 1e-3
    y, Z = y[keep], Z[keep]
    hy, hZ = 1e-5 * y, 1e-5 * Z
    fd_y = (F(y + hy, Z, Ztilde) - F(y - hy, Z, Ztilde)) / (2 * hy)
    fd_Z = (F(y, Z + hZ, Ztilde) - F(y, Z - hZ, Ztilde)) / (2 * hZ)
    grad = grad_F(y, Z, Ztilde)
    np.testing.assert_allclose(fd_y, grad.dy, rtol=1e-6, atol=1e-6)
    np.testing.assert_allclose(fd_Z, grad.dZ, rtol=1e-6, atol=1e-6)

def test_hessian_matches_gradient_differences():
    y, Z, Zt, h = 1.3, 2.7, 1.0, 1e-6
    H = hessian_F(y, Z, Zt)
    gy = (np.array(grad_F(y + h, Z, Zt)) - np.array(grad_F(y - h, Z, Zt))) / (2 * h)
    gZ = (np.array(grad_F(y, Z + h, Zt)) - np.array(grad_F(y, Z - h, Zt))) / (2 * h)
    np.testing.assert_allclose(H[0], gy, rtol=1e-6)
    np.testing.assert_allclose(H[1], gZ, rtol=1e-6)


def test_F_is_nonpositive_on_a_sample():
    y = np.logspace(-2, 2, 81)[:, None]
    Z = np.logspace(-2, 2, 81)[None, :]
    assert np.max(F(y, Z, 1.0)) <= 1e-12


def test_G_values():
    assert G(1.0) == pytest.approx(0.0, abs=1e-15)
    assert G_pp(1.0) == pytest.approx(-0.2, abs=1e-14)
    assert G_limit_at_zero() == pytest.approx(-0.240055, abs=1e-5)
    assert G(1e-12) == pytest.approx(G_limit_at_zero(), abs=1e-6)
    Y = np.linspace(1e-4, 1.0, 1000)
    assert np.all(G(Y) <= 1e-15)
    assert np.max(G_pp(Y)) <= -1.0 / 6.0 + 1e-9
    assert np.max(concavity_term(Y)) <= 1.08


@pytest.mark.parametrize("Ztilde", ZTILDES)
def test_closed_form_maximum(Ztilde):
    Z = Ztilde * np.array([1.0, 1.5, 4.0, 100.0])
    np.testing.assert_allclose(Fmax(Z, Ztilde), G(Ztilde / Z), atol=1e-14)
    np.testing.assert_allclose(F(ybar(Z, Ztilde), Z, Ztilde), Fmax(Z, Ztilde), atol=1e-13)
    # ybar maximizes F(., Z)
    for z, yb in zip(Z, ybar(Z, Ztilde)):
        assert F(yb * 1.01, z, Ztilde) < F(yb, z, Ztilde)
        assert F(yb * 0.99, z, Ztilde) < F(yb, z, Ztilde)
    assert ybar(Ztilde, Ztilde) == pytest.approx(1.0)


def test_closed_form_maximum_values():
    q = 0.6 + 0.4 * 2.0 ** (-5.0 / 3.0)
    assert ybar(2.0, 1.0) == pytest.approx(q ** -0.6, rel=1e-12)
    assert ybar(2.0, 1.0) == pytest.approx(1.211825, rel=1e-5)
    assert Fmax(2.0, 1.0) == pytest.approx(G(0.5), abs=1e-14)
    assert G(0.5) == pytest.approx(2.025 - 2.5 * q ** 0.6, abs=1e-13)
    assert G(0.5) == pytest.approx(-0.038013, abs=5e-5)
    assert Fmax(1.0, 1.0) == pytest.approx(0.0, abs=1e-15)


def test_ybar_is_stationary():
    rng = np.random.default_rng(9)
    Z = np.exp(rng.uniform(0.0, np.log(1e3), 100))
    yb = ybar(Z, 1.0)
    assert np.max(np.abs(grad_F(yb, Z, 1.0).dy)) <= 1e-12
    assert np.all(hessian_F(yb, Z, 1.0)[..., 0, 0] < 0)


def test_F_decays_at_the_ends_of_the_y_range():
    Z = np.logspace(0.0, 3.0, 301)
    assert np.max(F(1e-3, Z, 1.0)) < -10.0
    assert np.max(F(1e3, Z, 1.0)) < -10.0
    assert certify(COARSE, 1.0).entry("boundary_decay").passed

@pytest.mark.parametrize("Ztilde", ZTILDES)
def test_closed_form_maximum_against_bounded_search(Ztilde):
    for z in Ztilde * np.array([1.5, 4.0, 30.0]):
        yb = float(ybar(z, Ztilde))
        res = minimize_scalar(
            lambda y: -F(y, z, Ztilde), bounds=(0.1 * yb, 10.0 * yb), method="bounded",
            options={"xatol": 1e-10},
        )
        assert -res.fun == pytest.approx(float(Fmax(z, Ztilde)), rel=1e-8, abs=1e-12)


@pytest.mark.parametrize(
    "call",
    [
        lambda: ybar(0.5, 1.0),
        lambda: Fmax(0.5, 1.0),
        lambda: G(1.5),
        lambda: G(0.0),
        lambda: F(0.0, 1.0, 1.0),
        lambda: F(1.0, -1.0, 1.0),
        lambda: F(1.0, 1.0, 0.0),
    ],
)
def test_domain_errors(call):
    with pytest.raises(InvalidValueException):
        call()


def test_grid_validation():
    with pytest.raises(InvalidValueException):
        IneqGrid(y_points=50)
    with pytest.raises(InvalidValueException):
        IneqGrid(Y_max=2.0)
    with pytest.raises(InvalidValueException):
        IneqGrid(z_min=10.0, z_max=1.0)


def test_grid_contains_the_critical_point():
    assert 1.0 in COARSE.y()
    assert 2.0 in COARSE.Z(2.0)
    assert COARSE.Y()[-1] == 1.0


@pytest.mark.parametrize("Ztilde", ZTILDES)
def test_certify_on_a_coarse_grid(Ztilde):
    report = certify(COARSE, Ztilde)
    assert report.passed, report.to_rows()
    names = [e.name for e in report.entries]
    assert names[:5] == [
        "F_nonpositive",
        "G_nonpositive",
        "G_concave",
        "concavity_term_bound",
        "hessian_negative_definite",
    ]
    assert report.entry("F_nonpositive").witness == {"y": 1.0, "Z": pytest.approx(Ztilde)}
    assert report.entry("Fmax_reduction").passed
    assert report.entry("grid_resolution").status == "INFO"


def test_certify_rejects_bad_ztilde():
    with pytest.raises(InvalidValueException):
        certify(COARSE, 0.0)


@pytest.mark.slow
@pytest.mark.parametrize("Ztilde", ZTILDES)
def test_certify_on_the_default_grid(Ztilde):
    assert certify(IneqGrid(), Ztilde).passed
