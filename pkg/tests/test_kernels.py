import math

import mpmath
import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from visangle import kernels
from visangle.special_fn import DomainError
from visangle.verify import fd_derivative

W = np.linspace(0.0, math.pi, 257)
W_IN = np.linspace(0.1, math.pi - 0.1, 300)


@pytest.mark.parametrize("k", range(1, 16))
def test_h_forms_agree(k):
    np.testing.assert_allclose(kernels.h(k, W), kernels.h_direct(k, W), atol=1e-11 * k * k)


@pytest.mark.parametrize("k", range(2, 16))
def test_h_at_zero(k):
    assert kernels.h(k, 0.0) == pytest.approx(2 * (1 + (-1) ** k), abs=1e-12)


def test_h1_vanishes():
    assert np.all(kernels.h(1, W) == 0.0)


@pytest.mark.parametrize("k", range(2, 16))
def test_h_over_sin3_stable_form(k):
    w = np.linspace(0.3, math.pi - 0.3, 200)
    np.testing.assert_allclose(kernels.h_over_sin3(k, w), kernels.h(k, w) / np.sin(w) ** 3, rtol=1e-10, atol=1e-10)


def test_l2_kernel():
    w = np.linspace(0.2, math.pi - 0.2, 100)
    np.testing.assert_allclose(kernels.l2_kernel(w), (1 + np.cos(w)) ** 2 / np.sin(w) ** 3, rtol=1e-13)


@pytest.mark.parametrize("k", range(2, 13))
def test_derivative_identity(k):
    fd = -fd_derivative(lambda x: kernels.g_over_sin2(k, x), W_IN)
    np.testing.assert_allclose(kernels.h_over_sin3(k, W_IN), fd, atol=1e-6)


@pytest.mark.parametrize("k", range(2, 13))
def test_cosine_sum_forms(k):
    w = np.linspace(0.25, math.pi - 0.25, 300)
    np.testing.assert_allclose(kernels.g_over_sin2(k, w), kernels.g(k, w) / np.sin(w) ** 2, atol=1e-12)


@pytest.mark.parametrize("k", range(2, 13))
def test_g_endpoint_values(k):
    # g_k(0) = 2 for even k, 0 for odd k; g_k(pi) = 0
    assert kernels.g(k, 0.0) == pytest.approx(2.0 if k % 2 == 0 else 0.0, abs=1e-13)
    assert kernels.g(k, math.pi) == pytest.approx(0.0, abs=1e-12)


def test_g_over_sin2_finite_at_pi():
    for k in range(2, 13):
        v = kernels.g_over_sin2(k, math.pi)
        assert np.isfinite(v)
        w = math.pi - 1e-4
        assert v == pytest.approx(float(kernels.g_over_sin2(k, w)), abs=1e-4 * k**3)


@pytest.mark.parametrize("m", range(2, 11))
def test_g_fprime_link(m):
    rhs = 1 + (-1) ** m / 2 * (kernels.f_hurwitz_deriv(m, W) + 2 * np.cos(W))
    np.testing.assert_allclose(kernels.g(m, W), rhs, atol=1e-12)


@pytest.mark.parametrize("m", range(2, 12))
def test_hurwitz_derivative_forms(m):
    np.testing.assert_allclose(
        kernels.f_hurwitz_deriv(m, W), kernels.f_hurwitz_deriv(m, W, factored=False), atol=1e-12 * m * m
    )
    np.testing.assert_allclose(kernels.f_hurwitz_deriv(m, W_IN), fd_derivative(lambda x: kernels.f_hurwitz(m, x), W_IN), atol=1e-8)


@pytest.mark.parametrize("m", range(2, 12))
def test_hurwitz_small_angle(m):
    # f_m' / (2 (1 - cos)) -> m**2 and f_m = O(w**3) with the Taylor branch continuous
    w = 1e-6
    assert kernels.f_hurwitz_deriv(m, w) / (2 * kernels.half_angle_one_minus_cos(w)) == pytest.approx(m * m, rel=1e-9)
    edge = 0.5 / (m + 1)
    below, above = kernels.f_hurwitz(m, np.array([edge * (1 - 1e-12), edge * (1 + 1e-12)]))
    assert below == pytest.approx(above, rel=1e-9)
    x = mpmath.mpf("1e-3")
    exact = -2 * mpmath.sin(x) + mpmath.mpf(m + 1) / (m - 1) * mpmath.sin((m - 1) * x) - mpmath.mpf(m - 1) / (m + 1) * mpmath.sin((m + 1) * x)
    assert float(kernels.f_hurwitz(m, 1e-3)) == pytest.approx(float(exact), rel=1e-12)


def test_hurwitz_domain():
    with pytest.raises(DomainError):
        kernels.f_hurwitz(1, 0.3)


@pytest.mark.parametrize("r", range(0, 9))
@pytest.mark.parametrize("j", [1, 2, 3, 6, 11])
def test_V_against_quadrature(r, j):
    exact = mpmath.quad(lambda x: x**r * mpmath.cos(j * x), [0, mpmath.pi])
    assert kernels.V(r, j) == pytest.approx(float(exact), rel=1e-12, abs=1e-12)


@given(st.integers(0, 14), st.integers(0, 7))
def test_I_against_quadrature(m, half_k):
    k = 2 * half_k
    exact = mpmath.quad(lambda x: mpmath.sin(x) ** m * mpmath.cos(k * x), [0, mpmath.pi])
    assert kernels.I(m, k) == pytest.approx(float(exact), rel=1e-12, abs=1e-13)


def test_I_frozen_values():
    assert kernels.I(3, 6) == pytest.approx(4.0 / 315.0, rel=1e-14)
    assert kernels.I(2, 4) == 0.0
    assert kernels.I(0, 0) == pytest.approx(math.pi)
    with pytest.raises(DomainError):
        kernels.I(3, 3)
