"""Functions of the visual angle with derivative access.

Built-in kinds are evaluated in forms that keep relative accuracy as
``w -> 0``, where every admissible function behaves like ``w**3`` and the
integral formulas divide by ``sin(w)**3``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from . import kernels

__all__ = [
    "VisualFunction",
    "GrowthError",
    "parse_function",
    "omega_minus_sin",
    "omega_pow_minus_sin_pow",
]

KINDS = ("crofton", "sin_power", "hurwitz", "omega_minus_sin_power", "custom")


class GrowthError(ValueError):
    """The function is not ``O(w**3)`` at ``w = 0``."""

    def __init__(self, exponent: float, name: str):
        self.exponent = exponent
        super().__init__(
            f"{name} is not O(w^3) as w -> 0 (measured growth exponent {exponent:.3f})"
        )


def omega_minus_sin(w):
    """``w - sin(w)``; Taylor series below 0.5 to avoid cancellation."""
    w = np.asarray(w, dtype=float)
    out = w - np.sin(w)
    small = np.abs(w) < 0.5
    if np.any(small):
        x = np.where(small, w, 0.0)
        x2 = x * x
        term = x * x2 / 6.0
        acc = term.copy()
        for i in range(2, 12):
            term = -term * x2 / ((2 * i) * (2 * i + 1))
            acc = acc + term
        out = np.where(small, acc, out)
    return out


def omega_pow_minus_sin_pow(w, n: int):
    """``w**n - sin(w)**n`` as ``(w - sin w) sum_i w**(n-1-i) sin(w)**i``."""
    w = np.asarray(w, dtype=float)
    if n == 0:
        return np.zeros_like(w)
    s = np.sin(w)
    acc = np.zeros_like(w)
    for i in range(n):
        acc = acc + w ** (n - 1 - i) * s**i
    return omega_minus_sin(w) * acc


def _omsp_deriv(w, m: int):
    # m (w^(m-1) - sin^(m-1) w cos w) = m [(w^(m-1) - sin^(m-1)) + sin^(m-1) (1 - cos w)]
    w = np.asarray(w, dtype=float)
    return m * (
        omega_pow_minus_sin_pow(w, m - 1) + np.sin(w) ** (m - 1) * kernels.half_angle_one_minus_cos(w)
    )


@dataclass(frozen=True)
class VisualFunction:
    """A function ``f(w)`` of the visual angle on ``[0, pi]`` and its derivative.

    Use the constructors (:meth:`crofton`, :meth:`sin_power`, :meth:`hurwitz`,
    :meth:`omega_minus_sin_power`, :meth:`custom`, :meth:`tabulated`) rather
    than the raw fields.
    """

    kind: str
    m: int | None
    eval: Callable = field(repr=False)
    deriv: Callable = field(repr=False)
    name: str = ""

    def __call__(self, w):
        return self.eval(w)

    @property
    def value_at_pi(self) -> float:
        return float(self.eval(np.array([math.pi]))[0])

    @property
    def label(self) -> str:
        return self.name or self.kind

    def growth_exponent(self) -> float:
        """``log10(|f(1e-2)| / |f(1e-3)|)``; 3 for a function behaving like ``w**3``."""
        f1, f2 = np.abs(self.eval(np.array([1e-2, 1e-3])))
        if f2 == 0.0:
            return math.inf
        if f1 == 0.0:
            return -math.inf
        return math.log10(f1 / f2)

    def check_growth(self, min_exponent: float = 2.9) -> None:
        """Admission gate for the exterior integral: raise :class:`GrowthError` unless ``f = O(w**3)``."""
        e = self.growth_exponent()
        if e < min_exponent:
            raise GrowthError(e, self.label)

    # -- constructors --------------------------------------------------------
    @classmethod
    def crofton(cls) -> "VisualFunction":
        return cls("crofton", 1, omega_minus_sin, lambda w: kernels.half_angle_one_minus_cos(w), "w-sin(w)")

    @classmethod
    def omega_minus_sin_power(cls, m: int) -> "VisualFunction":
        if m < 1:
            raise ValueError(f"m must be >= 1, got {m}")
        if m == 1:
            return cls.crofton()
        return cls(
            "omega_minus_sin_power",
            m,
            lambda w: omega_pow_minus_sin_pow(w, m),
            lambda w: _omsp_deriv(w, m),
            f"w^{m}-sin^{m}(w)",
        )

    @classmethod
    def masotti(cls) -> "VisualFunction":
        return cls.omega_minus_sin_power(2)

    @classmethod
    def sin_power(cls, m: int) -> "VisualFunction":
        if m < 1:
            raise ValueError(f"m must be >= 1, got {m}")

        def f(w):
            return np.sin(np.asarray(w, dtype=float)) ** m

        def df(w):
            w = np.asarray(w, dtype=float)
            return m * np.sin(w) ** (m - 1) * np.cos(w)

        return cls("sin_power", m, f, df, f"sin^{m}(w)")

    @classmethod
    def hurwitz(cls, m: int) -> "VisualFunction":
        if m < 2:
            raise ValueError(f"Hurwitz functions need m >= 2, got {m}")
        return cls(
            "hurwitz",
            m,
            lambda w: kernels.f_hurwitz(m, w),
            lambda w: kernels.f_hurwitz_deriv(m, w),
            f"f_{m}(w)",
        )

    @classmethod
    def custom(cls, f: Callable, df: Callable | None = None, name: str = "custom") -> "VisualFunction":
        """Wrap a vectorised callable. Without ``df`` a 5-point central difference is used."""
        if df is None:
            step = 1e-3

            def df(w):
                w = np.asarray(w, dtype=float)
                return (
                    -f(w + 2 * step) + 8 * f(w + step) - 8 * f(w - step) + f(w - 2 * step)
                ) / (12 * step)

        return cls("custom", None, lambda w: np.asarray(f(np.asarray(w, dtype=float)), dtype=float), df, name)

    @classmethod
    def tabulated(cls, w, values, name: str = "tabulated") -> "VisualFunction":
        """Cubic-spline interpolant of samples on ``[0, pi]``."""
        from scipy.interpolate import CubicSpline

        spline = CubicSpline(np.asarray(w, dtype=float), np.asarray(values, dtype=float))
        return cls("custom", None, lambda x: spline(np.asarray(x, dtype=float)), spline.derivative(), name)


def parse_function(selector: str) -> VisualFunction:
    """``crofton | masotti | sinpow:<m> | hurwitz:<m> | omspow:<m>``."""
    name, _, arg = selector.strip().partition(":")
    name = name.lower()
    if name == "crofton" and not arg:
        return VisualFunction.crofton()
    if name == "masotti" and not arg:
        return VisualFunction.masotti()
    builders = {
        "sinpow": VisualFunction.sin_power,
        "hurwitz": VisualFunction.hurwitz,
        "omspow": VisualFunction.omega_minus_sin_power,
    }
    if name in builders:
        try:
            m = int(arg)
        except ValueError:
            raise ValueError(f"{selector!r}: expected an integer after ':'") from None
        return builders[name](m)
    raise ValueError(
        f"unknown function selector {selector!r}; use crofton, masotti, sinpow:<m>, hurwitz:<m>, omspow:<m>"
    )
