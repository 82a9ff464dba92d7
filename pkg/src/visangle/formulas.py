"""Closed forms and series for integrals of functions of the visual angle.

Two general routes are available for an admissible ``f``:

* :func:`master_series` -- coefficients ``int f (1+cos)^2/sin^3`` and
  ``int f h_k/sin^3`` multiplying ``L**2/(2 pi)`` and ``pi c_k**2``;
* :func:`functional_route` -- ``-f(pi) F + M(f) L**2/(2 pi) + pi sum beta_k(f) c_k**2``.

The remaining functions are closed forms for particular families (Crofton,
Masotti, Hurwitz, powers of sine, ``w**m - sin(w)**m``).
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .body import ConvexBody
from .functions import VisualFunction
from .kernels import I, V
from .quadrature import IntegralResult, QuadratureError, QuadratureSpec, integrate_1d
from .special_fn import EULER_GAMMA, DomainError, bernoulli, digamma, gamma, rgamma

__all__ = [
    "SeriesTerms",
    "master_series",
    "functional_route",
    "M_of",
    "beta_k_of",
    "level_set_area",
    "level_set_area_sin2",
    "crofton",
    "masotti",
    "hurwitz_integral",
    "M_sin_power",
    "sin_power_beta",
    "sin_power_beta_via_I",
    "sin_power_terms",
    "sin_power",
    "M_omega_power",
    "M_m",
    "omega_minus_sin_power_beta",
    "omega_minus_sin_power_terms",
    "omega_minus_sin_power",
    "omega_minus_sin_cubed_digamma",
    "hurwitz_decomposition",
    "hurwitz_decomposition_check",
    "M_MAX",
]

M_MAX = 20


@dataclass
class SeriesTerms:
    """Body-independent coefficients of an integral formula.

    ``total = L2_coeff * L**2/(2 pi) + pi * sum_k ck_coeffs[k] * c_k**2 + boundary_term``.
    ``ck_coeffs`` is indexed by ``k``; entries 0 and 1 are zero.
    """

    L2_coeff: float
    ck_coeffs: np.ndarray
    boundary_term: float = 0.0
    errors: dict = field(default_factory=dict)

    def total(self, body: ConvexBody) -> float:
        c2 = body.c2
        n = min(len(c2), len(self.ck_coeffs))
        parts = [self.L2_coeff * body.length**2 / (2 * math.pi), self.boundary_term]
        parts.extend((math.pi * self.ck_coeffs[2:n] * c2[2:n]).tolist())
        return math.fsum(parts)


def _coef_spec(spec: QuadratureSpec | None) -> QuadratureSpec:
    return spec or QuadratureSpec(rel_tol=1e-13, abs_tol=1e-15)


def _quad(fun, spec, initial_panels: int, what: str) -> IntegralResult:
    res = integrate_1d(fun, 0.0, math.pi, spec, initial_panels=initial_panels)
    if not res.converged:
        raise QuadratureError(res, what)
    return res


# -- general routes -----------------------------------------------------------------


def master_series(body: ConvexBody, f: VisualFunction, spec: QuadratureSpec | None = None) -> IntegralResult:
    """First integral formula, summed up to the body's truncation order."""
    f.check_growth()
    spec = _coef_spec(spec)
    l2 = _quad(lambda w: f.eval(w) * kernels.l2_kernel(w), spec, 4, "L^2 coefficient")
    ck = np.zeros(body.K + 1)
    err = l2.error_estimate * body.length**2 / (2 * math.pi)
    c2 = body.c2
    for k in range(2, body.K + 1):
        if c2[k] == 0.0:
            continue
        r = _quad(lambda w, k=k: f.eval(w) * kernels.h_over_sin3(k, w), spec, max(4, k), f"h_{k} coefficient")
        ck[k] = r.value
        err += math.pi * c2[k] * r.error_estimate
    terms = SeriesTerms(l2.value, ck)
    return IntegralResult(terms.total(body), "series", err, True, {"K": body.K, "terms": terms})


def M_of(f: VisualFunction, spec: QuadratureSpec | None = None) -> float:
    """``M(f) = int_0^pi f'(w) / (1 - cos w) dw`` by quadrature."""
    spec = _coef_spec(spec)
    return _quad(lambda w: f.deriv(w) / kernels.half_angle_one_minus_cos(w), spec, 4, "M(f)").value


def _cos_moment(f: VisualFunction, j: int, spec) -> float:
    return _quad(lambda w: f.deriv(w) * np.cos(j * w), spec, max(4, j), f"cos({j}w) moment").value


def beta_k_of(
    f: VisualFunction, k: int, spec: QuadratureSpec | None = None, *, path: str = "split", M: float | None = None
) -> float:
    """``beta_k(f) = int_0^pi f'(w) g_k(w) / sin(w)**2 dw``.

    ``path="direct"`` integrates the definition (kernel from the cosine-sum
    form of ``g_k/sin**2``); ``path="split"`` uses
    ``M(f) + 2 sum_{j odd<k} j int f' cos(jw)`` for even ``k`` and
    ``-2 sum_{j even<k} j int f' cos(jw)`` for odd ``k``.
    """
    if k < 2:
        raise DomainError(f"beta_k needs k >= 2, got {k}")
    spec = _coef_spec(spec)
    if path == "direct":
        return _quad(lambda w: f.deriv(w) * kernels.g_over_sin2(k, w), spec, max(4, k), f"beta_{k}").value
    if path != "split":
        raise ValueError(f"unknown path {path!r}")
    if k % 2 == 0:
        base = M_of(f, spec) if M is None else M
        return math.fsum([base] + [2.0 * j * _cos_moment(f, j, spec) for j in range(1, k, 2)])
    return math.fsum(-2.0 * j * _cos_moment(f, j, spec) for j in range(2, k, 2))


def functional_route(
    body: ConvexBody, f: VisualFunction, spec: QuadratureSpec | None = None, *, path: str = "split"
) -> IntegralResult:
    """``-f(pi) F + M(f) L**2/(2 pi) + pi sum beta_k(f) c_k**2``.

    The lower boundary term vanishes because ``F(w) ~ H/w**2`` while ``f = O(w**3)``.
    """
    f.check_growth()
    spec = _coef_spec(spec)
    M = M_of(f, spec)
    c2 = body.c2
    ck = np.zeros(body.K + 1)
    for k in range(2, body.K + 1):
        if c2[k] != 0.0:
            ck[k] = beta_k_of(f, k, spec, path=path, M=M)
    terms = SeriesTerms(M, ck, boundary_term=-f.value_at_pi * body.area)
    return IntegralResult(terms.total(body), "functional", 0.0, True, {"K": body.K, "terms": terms})


# -- level sets -------------------------------------------------------------------------


def level_set_area_sin2(body: ConvexBody, w) -> np.ndarray:
    """``F(w) sin(w)**2 = L**2/(2 pi) (1 + cos w) + pi sum c_k**2 g_k(w)``, valid on ``[0, pi]``."""
    w = np.asarray(w, dtype=float)
    out = body.length**2 / (2 * math.pi) * (1.0 + np.cos(w))
    c2 = body.c2
    for k in range(2, body.K + 1):
        if c2[k] != 0.0:
            out = out + math.pi * c2[k] * kernels.g(k, w)
    return out


def level_set_area(body: ConvexBody, w) -> np.ndarray:
    """Area ``F(w)`` enclosed by the curve of points seeing ``body`` under angle ``w``.

    Written as ``L**2/(4 pi sin(w/2)**2) + pi sum c_k**2 g_k(w)/sin(w)**2``
    with the cosine-sum kernels, so it is accurate up to ``w = pi`` where it
    equals the area of the body.
    """
    w = np.asarray(w, dtype=float)
    if np.any((w <= 0.0) | (w > math.pi)):
        raise ValueError("level_set_area needs 0 < w <= pi")
    out = body.length**2 / (4 * math.pi * np.sin(0.5 * w) ** 2)
    c2 = body.c2
    for k in range(2, body.K + 1):
        if c2[k] != 0.0:
            out = out + math.pi * c2[k] * kernels.g_over_sin2(k, w)
    return out


# -- classical closed forms ------------------------------------------------------------


def crofton(body: ConvexBody) -> float:
    """``int (w - sin w) dP = -pi F + L**2/2``."""
    return -math.pi * body.area + body.length**2 / 2


def masotti(body: ConvexBody) -> float:
    """``int (w**2 - sin(w)**2) dP = -pi**2 F + 4 L**2/pi + 8 pi sum_{k even} c_k**2/(1 - k**2)``."""
    c2 = body.c2
    corr = [c2[k] / (1.0 - k * k) for k in range(2, body.K + 1, 2)]
    return -math.pi**2 * body.area + 4 * body.length**2 / math.pi + 8 * math.pi * math.fsum(corr)


def hurwitz_integral(body: ConvexBody, m: int) -> float:
    """``int f_m dP = L**2 + (-1)**m pi**2 (m**2 - 1) c_m**2``."""
    if m < 2:
        raise DomainError(f"Hurwitz functions need m >= 2, got {m}")
    cm2 = body.c2[m] if m <= body.K else 0.0
    sign = -1.0 if m % 2 else 1.0
    return body.length**2 + sign * math.pi**2 * (m * m - 1) * cm2


# -- powers of sine ----------------------------------------------------------------------


def _check_sin_m(m: int) -> None:
    if m < 3:
        raise DomainError(f"sine-power formulas need m >= 3, got {m}")
    if m > 150:
        raise DomainError("m too large for double precision factorials")


def M_sin_power(m: int) -> float:
    """``M(sin**m) = pi m! / (2**(m-1) (m-2) Gamma((m+1)/2)**2)``."""
    _check_sin_m(m)
    return math.pi * math.factorial(m) / (2.0 ** (m - 1) * (m - 2)) * rgamma((m + 1) / 2) ** 2


def sin_power_beta(m: int, k: int) -> float:
    """Coefficient ``beta_k(sin**m)``; zero for odd ``k`` and, for odd ``m``, for ``k > m``."""
    _check_sin_m(m)
    if k % 2:
        return 0.0
    sign = 1.0 if (k // 2) % 2 else -1.0
    pref = math.factorial(m) * math.pi / (2.0 ** (m - 1) * (m - 2))
    return pref * sign * (k * k - 1) * rgamma((m + 1 + k) / 2) * rgamma((m + 1 - k) / 2)


def _sumais(m: int, k: int) -> float:
    # sum_{j odd < k} int (sin^m)' (sin jw)' dw through the moments I(m, k)
    a = m * (m - 1) / 2.0
    b = m * m / 2.0
    return math.fsum([-a * I(m - 3, 0), b * I(m - 1, 0), a * I(m - 3, k), -b * I(m - 1, k)])


def sin_power_beta_via_I(m: int, k: int) -> float:
    """``beta_k(sin**m)`` for even ``k`` as ``M(sin**m) + 2 * (moment sum)``; cross-check of :func:`sin_power_beta`."""
    _check_sin_m(m)
    if k % 2:
        return 0.0
    return M_sin_power(m) + 2.0 * _sumais(m, k)


def sin_power_terms(m: int, kmax: int) -> SeriesTerms:
    ck = np.zeros(max(kmax, 1) + 1)
    for k in range(2, kmax + 1):
        ck[k] = sin_power_beta(m, k)
    return SeriesTerms(M_sin_power(m), ck)


def sin_power(body: ConvexBody, m: int) -> float:
    """``int sin(w)**m dP`` in closed form, ``m >= 3``."""
    return sin_power_terms(m, body.K).total(body)


# -- w**m - sin(w)**m ------------------------------------------------------------------


def _check_omega_m(m: int) -> None:
    if m < 1 or m > M_MAX:
        raise DomainError(f"m must lie in [1, {M_MAX}], got {m}")


def M_omega_power(m: int) -> float:
    """``M(w**m)`` for ``m >= 3`` from its Bernoulli-number series."""
    _check_omega_m(m)
    if m < 3:
        raise DomainError("M(w**m) diverges for m < 3")
    terms = [1.0 / (m - 2)]
    partial = terms[0]
    k = 1
    pi2 = math.pi**2
    while True:
        t = (-1) ** k * pi2**k * bernoulli(k) / ((m - 2 + 2 * k) * math.factorial(2 * k))
        terms.append(t)
        partial += t
        if abs(t) < 1e-17 * abs(partial) or k >= 60:
            break
        k += 1
    return 2.0 * m * (m - 1) * math.pi ** (m - 2) * math.fsum(terms)


def M_m(m: int) -> float:
    """``M(w**m - sin(w)**m)``; ``pi`` for ``m = 1`` and ``8`` for ``m = 2``."""
    _check_omega_m(m)
    if m == 1:
        return math.pi
    if m == 2:
        return 8.0
    return M_omega_power(m) - M_sin_power(m)


def omega_minus_sin_power_beta(m: int, k: int) -> float:
    """``beta_k(w**m - sin(w)**m)`` from the moments ``V`` and ``I`` (no quadrature)."""
    _check_omega_m(m)
    if k < 2:
        raise DomainError(f"beta_k needs k >= 2, got {k}")
    if m == 1:
        return 0.0
    if k % 2:
        return -2.0 * m * math.fsum(j * V(m - 1, j) for j in range(2, k, 2))
    if m == 2:
        return 8.0 / (1.0 - k * k)
    omega_part = math.fsum(2.0 * j * m * V(m - 1, j) for j in range(1, k, 2))
    return math.fsum([M_m(m), omega_part, -2.0 * _sumais(m, k)])


def omega_minus_sin_power_terms(m: int, kmax: int) -> SeriesTerms:
    ck = np.zeros(max(kmax, 1) + 1)
    for k in range(2, kmax + 1):
        ck[k] = omega_minus_sin_power_beta(m, k)
    return SeriesTerms(M_m(m), ck)


def omega_minus_sin_power(body: ConvexBody, m: int) -> float:
    """``int (w**m - sin(w)**m) dP = -pi**m F + M_m L**2/(2 pi) + pi sum beta_k c_k**2``."""
    _check_omega_m(m)
    if m == 1:
        return crofton(body)
    if m == 2:
        return masotti(body)
    terms = omega_minus_sin_power_terms(m, body.K)
    return math.fsum([-math.pi**m * body.area, terms.total(body)])


def omega_minus_sin_cubed_digamma(body: ConvexBody) -> float:
    """The ``m = 3`` case written with the digamma function."""
    c2 = body.c2
    ln2 = math.log(2.0)
    parts = [
        -math.pi**3 * body.area,
        (12 * math.pi * ln2 - 1.5 * math.pi) * body.length**2 / (2 * math.pi),
    ]
    if body.K >= 2:
        parts.append(12 * math.pi**2 * (ln2 - 19.0 / 16.0) * c2[2])
    for k in range(3, body.K + 1):
        parts.append(-6 * math.pi**2 * (digamma((k + 1) / 2) + EULER_GAMMA) * c2[k])
    return math.fsum(parts)


# -- sine powers as combinations of Hurwitz integrals ---------------------------------------


def hurwitz_decomposition(body: ConvexBody, m: int) -> tuple[float, float]:
    """Both sides of ``int sin**m dP = m!/(2**(m-1)(m-2)) sum_p (-1)**(p+1) int f_{2p} dP / (Gamma Gamma)``.

    Only odd ``m`` gives a finite sum (``p <= (m-1)/2``).
    """
    _check_sin_m(m)
    if m % 2 == 0:
        raise DomainError("the Hurwitz decomposition is a finite sum only for odd m")
    half = (m + 1) / 2
    pref = math.factorial(m) / (2.0 ** (m - 1) * (m - 2))
    parts = []
    for p in range(1, (m - 1) // 2 + 1):
        w = rgamma(half + p) * rgamma(half - p)
        parts.append((-1) ** (p + 1) * w * hurwitz_integral(body, 2 * p))
    return sin_power(body, m), pref * math.fsum(parts)


def hurwitz_decomposition_check(body: ConvexBody, m: int) -> float:
    lhs, rhs = hurwitz_decomposition(body, m)
    return abs(lhs - rhs)
