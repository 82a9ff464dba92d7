"""Body-independent kernels of the visual angle.

``h_k`` weights ``c_k**2`` in the first integral formula, ``g_k`` in the
level-set area, ``f_m`` are the Hurwitz test functions. ``V`` and ``I`` are
the moment integrals ``int_0^pi w**r cos(j w) dw`` and
``int_0^pi sin(w)**m cos(k w) dw``.

All kernels accept scalars or numpy arrays for the angle.
"""
from __future__ import annotations

import math
from functools import lru_cache

import numpy as np

from .special_fn import DomainError, gamma, rgamma

__all__ = [
    "h",
    "h_direct",
    "h_over_sin3",
    "l2_kernel",
    "g",
    "g_over_sin2",
    "f_hurwitz",
    "f_hurwitz_deriv",
    "V",
    "I",
    "half_angle_one_minus_cos",
]


def half_angle_one_minus_cos(w):
    """``1 - cos(w)`` computed as ``2 sin(w/2)**2`` (no cancellation near 0)."""
    s = np.sin(0.5 * np.asarray(w, dtype=float))
    return 2.0 * s * s


def _sign(k: int) -> float:
    return -1.0 if k % 2 else 1.0


def h(k: int, w):
    """Kernel ``h_k`` in its four-cosine form.

    ``h_1`` vanishes identically and ``h_k(0) = 2 (1 + (-1)**k)``.
    """
    w = np.asarray(w, dtype=float)
    if k == 1:
        return np.zeros_like(w)
    s = _sign(k) / 4.0
    return s * (
        (k + 1) ** 2 * np.cos((k - 2) * w)
        + (k - 1) ** 2 * np.cos((k + 2) * w)
        - 2 * (k * k - 3) * np.cos(k * w)
    ) + 2.0 * np.cos(w)


def h_direct(k: int, w):
    """Kernel ``h_k`` written with products of ``sin`` and ``cos`` (cross-check form)."""
    w = np.asarray(w, dtype=float)
    c, s = np.cos(w), np.sin(w)
    ck, sk = np.cos(k * w), np.sin(k * w)
    inner = -ck * (1.0 + c * c) - 2 * k * sk * s * c + k * k * ck * s * s
    return 2.0 * c + _sign(k + 1) * inner


def h_over_sin3(k: int, w):
    """``h_k(w) / sin(w)**3`` without the division.

    Uses ``h_k / sin**3 = -(g_k / sin**2)'`` together with the cosine sums of
    :func:`g_over_sin2`. For even ``k`` the result carries the same
    ``cos(w/2) / (2 sin(w/2)**3)`` singularity at 0 as :func:`l2_kernel`;
    near ``pi`` everything is a plain sine sum.
    """
    w = np.asarray(w, dtype=float)
    out = np.zeros_like(w)
    if k % 2 == 0:
        half = 0.5 * w
        sh = np.sin(half)
        out += np.cos(half) / (2.0 * sh * sh * sh)
        js = range(1, k, 2)
        sign = 2.0
    else:
        js = range(2, k, 2)
        sign = -2.0
    for j in js:
        out += sign * j * j * np.sin(j * w)
    return out


def l2_kernel(w):
    """``(1 + cos w)**2 / sin(w)**3`` written as ``cos(w/2) / (2 sin(w/2)**3)``."""
    half = 0.5 * np.asarray(w, dtype=float)
    sh = np.sin(half)
    return np.cos(half) / (2.0 * sh * sh * sh)


def g(k: int, w):
    """Kernel ``g_k`` of the level-set area formula, ``k >= 2``."""
    w = np.asarray(w, dtype=float)
    return 1.0 + 0.5 * _sign(k) * ((k + 1) * np.cos((k - 1) * w) - (k - 1) * np.cos((k + 1) * w))


def g_over_sin2(k: int, w):
    """``g_k(w) / sin(w)**2`` through finite cosine sums.

    Even ``k``: ``1/(1 - cos w) + 2 sum_{j odd < k} j cos(j w)``.
    Odd ``k``: ``-2 sum_{j even < k} j cos(j w)``, finite on all of ``[0, pi]``.
    """
    w = np.asarray(w, dtype=float)
    out = np.zeros_like(w)
    if k % 2 == 0:
        out += 1.0 / half_angle_one_minus_cos(w)
        js = range(1, k, 2)
        sign = 2.0
    else:
        js = range(2, k, 2)
        sign = -2.0
    for j in js:
        out += sign * j * np.cos(j * w)
    return out


def _hurwitz_taylor(m: int, w, nterms: int = 14):
    # f_m(w) = sum_i (-1)^i w^(2i+1)/(2i+1)! [-2 + (m+1)(m-1)^(2i) - (m-1)(m+1)^(2i)]
    out = np.zeros_like(w)
    w2 = w * w
    power = w.copy()
    for i in range(nterms):
        coef = -2.0 + (m + 1) * float(m - 1) ** (2 * i) - (m - 1) * float(m + 1) ** (2 * i)
        out += (-1) ** i * coef / math.factorial(2 * i + 1) * power
        power = power * w2
    return out


def f_hurwitz(m: int, w):
    """Hurwitz function ``f_m``, ``m >= 2``.

    Below ``w < 0.5/(m+1)`` a Taylor series replaces the three sines, whose
    sum cancels down to ``O(w**3)``.
    """
    if m < 2:
        raise DomainError(f"Hurwitz functions need m >= 2, got {m}")
    w = np.asarray(w, dtype=float)
    out = (
        -2.0 * np.sin(w)
        + (m + 1) / (m - 1) * np.sin((m - 1) * w)
        - (m - 1) / (m + 1) * np.sin((m + 1) * w)
    )
    small = np.abs(w) < 0.5 / (m + 1)
    if np.any(small):
        out = np.where(small, _hurwitz_taylor(m, np.where(small, w, 0.0)), out)
    return out


def f_hurwitz_deriv(m: int, w, *, factored: bool = True):
    """Derivative of :func:`f_hurwitz`.

    The factored form ``2(1 - cos w)(1 + 2 sum_{j<m} j cos(jw) + (m-1) cos(mw))``
    keeps full relative accuracy near 0; ``factored=False`` differentiates the
    three sines directly.
    """
    if m < 2:
        raise DomainError(f"Hurwitz functions need m >= 2, got {m}")
    w = np.asarray(w, dtype=float)
    if not factored:
        return -2.0 * np.cos(w) + (m + 1) * np.cos((m - 1) * w) - (m - 1) * np.cos((m + 1) * w)
    acc = np.ones_like(w) + (m - 1) * np.cos(m * w)
    for j in range(1, m):
        acc += 2.0 * j * np.cos(j * w)
    return 2.0 * half_angle_one_minus_cos(w) * acc


@lru_cache(maxsize=4096)
def V(r: int, j: int) -> float:
    """``int_0^pi w**r cos(j w) dw`` for ``r >= 0``, ``j >= 1``.

    Bases ``V(0, j) = 0`` and ``V(1, j) = ((-1)**j - 1)/j**2``; for ``r >= 2``
    the two-step integration-by-parts recurrence
    ``V(r, j) = r/j**2 ((-1)**j pi**(r-1) - (r-1) V(r-2, j))``.
    """
    if r < 0 or j < 1:
        raise DomainError(f"V needs r >= 0 and j >= 1, got ({r}, {j})")
    sj = _sign(j)
    if r == 0:
        return 0.0
    if r == 1:
        return (sj - 1.0) / (j * j)
    return r / (j * j) * (sj * math.pi ** (r - 1) - (r - 1) * V(r - 2, j))


@lru_cache(maxsize=4096)
def I(m: int, k: int) -> float:  # noqa: E743
    """``int_0^pi sin(w)**m cos(k w) dw`` for even ``k``.

    Zero when ``1 + (m - k)/2`` is a non-positive integer.
    """
    if k % 2:
        raise DomainError(f"I(m, k) closed form needs even k, got k={k}")
    if m < 0:
        raise DomainError(f"I(m, k) needs m >= 0, got m={m}")
    k = abs(k)
    sign = -1.0 if (k // 2) % 2 else 1.0
    r = rgamma(1 + (m - k) / 2)
    if r == 0.0:
        return 0.0
    return sign * math.factorial(m) * math.pi / 2.0**m * r / gamma(1 + (m + k) / 2)
