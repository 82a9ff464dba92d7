import math

import numpy as np
import pytest
from scipy.integrate import quad
from scipy.optimize import brentq

from visangle.body import circle, ellipse, random_body, visual_angle_at
from visangle.functions import GrowthError, VisualFunction
from visangle.quadrature import (
    QuadratureError,
    QuadratureSpec,
    integrate_1d,
    integrate_exterior,
    level_set_area_direct,
    phi_integral_TT1,
)


def test_spec_validation():
    with pytest.raises(ValueError):
        QuadratureSpec(rel_tol=1e-15)
    with pytest.raises(ValueError):
        QuadratureSpec(endpoint_margin=0.1)


@pytest.mark.parametrize(
    "f,a,b,exact",
    [
        (np.sin, 0.0, math.pi, 2.0),
        (np.exp, -1.0, 2.0, math.e**2 - math.exp(-1)),
        (np.sqrt, 0.0, 1.0, 2.0 / 3.0),
        (lambda x: np.cos(40 * x) ** 2, 0.0, math.pi, math.pi / 2),
    ],
)
def test_integrate_1d(f, a, b, exact):
    res = integrate_1d(f, a, b, QuadratureSpec(rel_tol=1e-12), initial_panels=4)
    assert res.converged
    assert res.value == pytest.approx(exact, rel=1e-11)


def test_integrate_1d_endpoint_singularity():
    # bisection alone resolves an integrable singularity only to about sqrt(min panel width)
    res = integrate_1d(lambda x: 1 / np.sqrt(x), 0.0, 1.0, QuadratureSpec(rel_tol=1e-7))
    assert res.converged
    assert res.value == pytest.approx(2.0, rel=1e-7)


def test_integrate_1d_zero_integral_converges():
    # analytically zero: the roundoff floor must stop refinement
    res = integrate_1d(lambda x: np.sin(7 * x) * np.cos(4 * x), 0.0, 2 * math.pi, initial_panels=8)
    assert res.converged
    assert abs(res.value) < 1e-13


def test_integrate_1d_reports_non_convergence():
    res = integrate_1d(lambda x: np.sin(1 / x), 0.0, 1.0, QuadratureSpec(max_panels=20))
    assert not res.converged
    assert res.metadata["panels"] >= 20


def circle_oracle(f, r=1.0):
    # from a point at distance t the circle subtends 2 asin(r/t)
    g = lambda t: f(np.array([2 * math.asin(r / t)]))[0] * 2 * math.pi * t
    v1, _ = quad(g, r, 4 * r, limit=200, epsabs=1e-13, epsrel=1e-13)
    v2, _ = quad(g, 4 * r, np.inf, limit=200, epsabs=1e-13, epsrel=1e-13)
    return v1 + v2


@pytest.mark.parametrize(
    "f",
    [
        VisualFunction.crofton(),
        VisualFunction.masotti(),
        VisualFunction.sin_power(3),
        VisualFunction.sin_power(4),
        VisualFunction.hurwitz(3),
        VisualFunction.omega_minus_sin_power(4),
    ],
    ids=lambda f: f.label,
)
def test_circle_against_radial_oracle(f):
    res = integrate_exterior(circle(1.3), f)
    assert res.converged
    assert res.value == pytest.approx(circle_oracle(f, 1.3), rel=1e-9)


def test_growth_gate():
    with pytest.raises(GrowthError) as info:
        integrate_exterior(circle(1.0), VisualFunction.sin_power(2))
    assert info.value.exponent == pytest.approx(2.0, abs=0.01)


def test_phi_integral_threads_identical():
    b = random_body(11, 16).recentered()
    w = np.linspace(0.01, math.pi - 0.01, 101)
    one = phi_integral_TT1(b, w, workers=1)
    four = phi_integral_TT1(b, w, workers=4)
    np.testing.assert_array_equal(one, four)


def test_exterior_deterministic_across_threads(monkeypatch):
    b = ellipse(1.5, 1.0, 16)
    f = VisualFunction.sin_power(3)
    monkeypatch.setenv("VISANGLE_THREADS", "1")
    a = integrate_exterior(b, f).value
    monkeypatch.setenv("VISANGLE_THREADS", "3")
    assert integrate_exterior(b, f).value == a


def test_level_set_circle():
    # circle of radius 1 seen under w from distance 1/sin(w/2)
    for w in (0.5, math.pi / 2, 2.5):
        assert level_set_area_direct(circle(1.0), w) == pytest.approx(math.pi / math.sin(w / 2) ** 2, rel=1e-11)


def polar_level_set_area(body, w, n=48):
    # independent oracle: radial distance to the level curve by root finding on the visual angle
    thetas = np.linspace(0, 2 * math.pi, n, endpoint=False)
    radii = []
    for t in thetas:
        c, s = math.cos(t), math.sin(t)
        lo = float(body.support(t)) + 1e-9
        hi = lo + 10.0
        radii.append(brentq(lambda r: visual_angle_at(body, r * c, r * s) - w, lo * 1.0000001, hi, xtol=1e-13))
    radii = np.array(radii)
    return 0.5 * np.mean(radii**2) * 2 * math.pi


def test_level_set_against_polar_oracle():
    b = ellipse(1.5, 1.0, 8).recentered()
    w = 1.2
    assert level_set_area_direct(b, w) == pytest.approx(polar_level_set_area(b, w), rel=1e-8)


def test_level_set_rejects_bad_angle():
    with pytest.raises(ValueError):
        level_set_area_direct(circle(1.0), 0.0)


def test_quadrature_error_carries_result():
    res = integrate_1d(lambda x: np.sin(1 / x), 0.0, 1.0, QuadratureSpec(max_panels=10))
    err = QuadratureError(res, "test")
    assert err.result is res
    assert "did not converge" in str(err)
