"""Built-in battery of numerical identity checks.

Each check returns a :class:`CheckResult` holding its largest residual and
the tolerance it is held to. ``run_checks`` drives the battery in a fixed
order so reports are reproducible.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import formulas, kernels
from .body import circle, cw3, ellipse, random_body
from .bounds import bounds_report
from .functions import VisualFunction
from .quadrature import integrate_exterior, level_set_area_direct

__all__ = ["CheckResult", "CHECKS", "run_checks", "fd_derivative"]


@dataclass
class CheckResult:
    name: str
    residual: float
    tolerance: float
    detail: str = ""

    @property
    def passed(self) -> bool:
        return bool(self.residual <= self.tolerance)


def fd_derivative(fun: Callable, x, step: float = 1e-5):
    """Five-point central difference."""
    x = np.asarray(x, dtype=float)
    return (-fun(x + 2 * step) + 8 * fun(x + step) - 8 * fun(x - step) + fun(x - 2 * step)) / (12 * step)


def _rel(a: float, b: float) -> float:
    return abs(a - b) / max(abs(a), abs(b), 1e-300)


def check_kernel_derivative() -> CheckResult:
    w = np.linspace(0.1, math.pi - 0.1, 400)
    res = 0.0
    for k in range(2, 13):
        fd = -fd_derivative(lambda x, k=k: kernels.g_over_sin2(k, x), w)
        res = max(res, float(np.max(np.abs(kernels.h_over_sin3(k, w) - fd))))
    return CheckResult("kernel-derivative", res, 1e-6, "h_k/sin^3 + (g_k/sin^2)', k=2..12")


def check_cosine_sums() -> CheckResult:
    w = np.linspace(0.25, math.pi - 0.25, 400)
    res = 0.0
    for k in range(2, 13):
        direct = kernels.g(k, w) / np.sin(w) ** 2
        res = max(res, float(np.max(np.abs(kernels.g_over_sin2(k, w) - direct))))
    return CheckResult("cosine-sums", res, 1e-12, "g_k/sin^2 cosine sums vs division, k=2..12")


def check_g_fprime_link() -> CheckResult:
    w = np.linspace(0.0, math.pi, 401)
    res = 0.0
    for m in range(2, 11):
        rhs = 1.0 + (-1) ** m / 2.0 * (kernels.f_hurwitz_deriv(m, w) + 2 * np.cos(w))
        res = max(res, float(np.max(np.abs(kernels.g(m, w) - rhs))))
    return CheckResult("g-fprime-link", res, 1e-12, "g_m = 1 + (-1)^m (f_m' + 2 cos)/2, m=2..10")


def check_m_values() -> CheckResult:
    pairs = [
        (formulas.M_of(VisualFunction.crofton()), math.pi),
        (formulas.M_of(VisualFunction.masotti()), 8.0),
        (formulas.M_of(VisualFunction.omega_minus_sin_power(3)), formulas.M_m(3)),
    ]
    res = max(abs(a - b) for a, b in pairs)
    return CheckResult("m-values", res, 1e-10, "M(w-sin w)=pi, M(w^2-sin^2)=8, M_3 series vs quadrature")


def check_crofton_beta() -> CheckResult:
    f = VisualFunction.crofton()
    res = max(abs(formulas.beta_k_of(f, k, path="direct")) for k in range(2, 21))
    return CheckResult("crofton-beta", res, 1e-10, "beta_k(w - sin w) = 0, k=2..20")


def check_masotti_even_beta() -> CheckResult:
    f = VisualFunction.masotti()
    res = max(abs(formulas.beta_k_of(f, k, path="direct") - 8.0 / (1 - k * k)) for k in range(2, 13, 2))
    return CheckResult("masotti-even-beta", res, 1e-9, "beta_k(w^2-sin^2) = 8/(1-k^2), even k")


def check_masotti_odd_beta() -> CheckResult:
    f = VisualFunction.masotti()
    res = max(abs(formulas.beta_k_of(f, k, path="direct")) for k in range(3, 13, 2))
    return CheckResult("masotti-odd-beta", res, 1e-10, "beta_k(w^2-sin^2) = 0, odd k")


def check_beta_paths() -> CheckResult:
    res = 0.0
    for m in range(3, 7):
        f = VisualFunction.omega_minus_sin_power(m)
        M = formulas.M_of(f)
        for k in range(2, 11):
            d = formulas.beta_k_of(f, k, path="direct")
            s = formulas.beta_k_of(f, k, path="split", M=M)
            c = formulas.omega_minus_sin_power_beta(m, k)
            res = max(res, abs(d - s), abs(d - c))
    return CheckResult("beta-paths", res, 1e-9, "beta_k(w^m - sin^m): direct, split and moment forms, m=3..6")


def check_circle_exact() -> CheckResult:
    c = circle(1.0)
    pi = math.pi
    pairs = [
        (formulas.crofton(c), pi**2),
        (formulas.masotti(c), 16 * pi - pi**3),
        (formulas.sin_power(c, 3), 3 * pi**2),
    ]
    pairs += [(formulas.hurwitz_integral(c, m), 4 * pi**2) for m in range(2, 9)]
    res = max(abs(a - b) for a, b in pairs)
    return CheckResult("circle-exact", res, 1e-10, "unit circle closed forms")


def check_route_agreement() -> CheckResult:
    body = ellipse(1.5, 1.0, 16)
    fs = [
        VisualFunction.crofton(),
        VisualFunction.masotti(),
        VisualFunction.sin_power(4),
        VisualFunction.hurwitz(3),
        VisualFunction.omega_minus_sin_power(3),
    ]
    res = 0.0
    for f in fs:
        s = formulas.master_series(body, f).value
        fr = formulas.functional_route(body, f).value
        d = integrate_exterior(body, f).value
        res = max(res, _rel(s, d), _rel(fr, d), _rel(s, fr))
    return CheckResult("route-agreement", res, 1e-6, "series, functional and direct on ellipse(1.5,1)")


def _battery():
    return [ellipse(1.5, 1.0, 16), random_body(7, 16), cw3(1.0, 0.05)]


def check_hurwitz_decomposition() -> CheckResult:
    res = max(
        abs(formulas.hurwitz_decomposition_check(b, m)) for b in _battery() for m in (3, 5, 7)
    )
    return CheckResult("hurwitz-decomposition", res, 1e-9, "odd m=3,5,7 on three bodies")


def check_level_sets() -> CheckResult:
    body = ellipse(1.5, 1.0, 16)
    res = 0.0
    for w in (0.5, 1.0, 2.0, 3.0):
        res = max(res, _rel(float(formulas.level_set_area(body, w)), level_set_area_direct(body, w)))
    return CheckResult("level-sets", res, 1e-7, "F(w) series vs direct, ellipse(1.5,1)")


def check_bounds() -> CheckResult:
    worst = 0.0
    for body in (random_body(7), cw3(1.0, 0.05)):
        for m in range(1, 9):
            for rec in bounds_report(body, m).bounds:
                if not rec.satisfied:
                    worst = max(worst, -rec.slack / max(1.0, abs(rec.bound_value)), 1.0)
    return CheckResult("bounds", worst, 0.0, "every applicable bound, m=1..8")


CHECKS: dict[str, Callable[[], CheckResult]] = {
    "kernel-derivative": check_kernel_derivative,
    "cosine-sums": check_cosine_sums,
    "g-fprime-link": check_g_fprime_link,
    "m-values": check_m_values,
    "crofton-beta": check_crofton_beta,
    "masotti-even-beta": check_masotti_even_beta,
    "masotti-odd-beta": check_masotti_odd_beta,
    "beta-paths": check_beta_paths,
    "circle-exact": check_circle_exact,
    "route-agreement": check_route_agreement,
    "hurwitz-decomposition": check_hurwitz_decomposition,
    "level-sets": check_level_sets,
    "bounds": check_bounds,
}


def run_checks(only=None) -> list[CheckResult]:
    """Run the named checks (all by default) in battery order."""
    names = list(CHECKS) if not only else list(only)
    unknown = [n for n in names if n not in CHECKS]
    if unknown:
        raise KeyError(f"unknown check(s) {', '.join(unknown)}; available: {', '.join(CHECKS)}")
    return [CHECKS[n]() for n in names]
