import math

import mpmath
import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from visangle.functions import GrowthError, VisualFunction, omega_minus_sin, omega_pow_minus_sin_pow, parse_function

mpmath.mp.dps = 40


@given(st.floats(1e-8, math.pi))
def test_omega_minus_sin_relative_accuracy(w):
    exact = float(mpmath.mpf(w) - mpmath.sin(w))
    assert float(omega_minus_sin(w)) == pytest.approx(exact, rel=1e-14)


@given(st.floats(1e-6, math.pi), st.integers(1, 8))
def test_power_difference(w, n):
    exact = float(mpmath.mpf(w) ** n - mpmath.sin(w) ** n)
    assert float(omega_pow_minus_sin_pow(w, n)) == pytest.approx(exact, rel=1e-13)


@pytest.mark.parametrize(
    "f",
    [VisualFunction.crofton(), VisualFunction.omega_minus_sin_power(4), VisualFunction.sin_power(5), VisualFunction.hurwitz(4)],
    ids=lambda f: f.label,
)
def test_derivatives(f):
    w = np.linspace(0.05, math.pi - 0.05, 50)
    h = 1e-5
    np.testing.assert_allclose(f.deriv(w), (f(w + h) - f(w - h)) / (2 * h), atol=1e-8)


def test_growth():
    assert VisualFunction.crofton().growth_exponent() == pytest.approx(3.0, abs=1e-3)
    assert VisualFunction.sin_power(2).growth_exponent() == pytest.approx(2.0, abs=1e-3)
    with pytest.raises(GrowthError):
        VisualFunction.sin_power(1).check_growth()
    VisualFunction.hurwitz(6).check_growth()


def test_value_at_pi():
    assert VisualFunction.crofton().value_at_pi == pytest.approx(math.pi)
    assert VisualFunction.sin_power(3).value_at_pi == pytest.approx(0.0, abs=1e-15)


def test_custom_and_tabulated():
    f = VisualFunction.custom(lambda w: w**4, name="w4")
    w = np.linspace(0.2, 3.0, 10)
    np.testing.assert_allclose(f.deriv(w), 4 * w**3, rtol=1e-9)
    grid = np.linspace(0, math.pi, 400)
    t = VisualFunction.tabulated(grid, np.sin(grid) ** 3)
    np.testing.assert_allclose(t(w), np.sin(w) ** 3, atol=1e-6)


@pytest.mark.parametrize(
    "sel,kind,m",
    [("crofton", "crofton", 1), ("masotti", "omega_minus_sin_power", 2), ("sinpow:4", "sin_power", 4), ("hurwitz:3", "hurwitz", 3), ("omspow:1", "crofton", 1)],
)
def test_parse_function(sel, kind, m):
    f = parse_function(sel)
    assert (f.kind, f.m) == (kind, m)


@pytest.mark.parametrize("sel", ["sinpow", "sinpow:x", "cosine", "hurwitz:1", "omspow:0"])
def test_parse_function_errors(sel):
    with pytest.raises(ValueError):
        parse_function(sel)
