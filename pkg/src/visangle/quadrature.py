"""Adaptive 1D quadrature and the direct exterior integral in ``(phi, w)`` coordinates.

The 1D engine is a globally adaptive Gauss-Legendre scheme: every panel is
integrated with 20 and 10 nodes, the difference is the panel's error
estimate, and the worst panel is bisected until the summed estimate meets the
tolerance. Only interior nodes are evaluated, so integrands that are 0/0 at
the endpoints are fine as long as they extend continuously.

The exterior integral uses ``dP = T T1 / sin(w) dphi dw``: a periodic
trapezoid rule over ``phi`` (exact for trigonometric-polynomial bodies) inside
the adaptive rule over ``w``.
"""
from __future__ import annotations

import heapq
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable

import numpy as np

from .body import ConvexBody
from .functions import VisualFunction

__all__ = [
    "QuadratureSpec",
    "IntegralResult",
    "QuadratureError",
    "integrate_1d",
    "integrate_exterior",
    "level_set_area_direct",
    "phi_integral_TT1",
]

THREADS_ENV = "VISANGLE_THREADS"
ROUNDOFF = 200 * np.finfo(float).eps


@dataclass(frozen=True)
class QuadratureSpec:
    rel_tol: float = 1e-12
    abs_tol: float = 1e-14
    max_panels: int = 4000
    endpoint_margin: float = 1e-3

    def __post_init__(self):
        if self.rel_tol < 1e-13:
            raise ValueError(f"rel_tol must be >= 1e-13, got {self.rel_tol}")
        if not 0.0 < self.endpoint_margin <= 1e-2:
            raise ValueError(f"endpoint_margin must lie in (0, 1e-2], got {self.endpoint_margin}")
        if self.max_panels < 1:
            raise ValueError("max_panels must be positive")


@dataclass
class IntegralResult:
    """Value of an integral together with how it was obtained.

    ``method`` is one of ``series``, ``direct``, ``functional``,
    ``closed_form`` or ``quadrature``.
    """

    value: float
    method: str
    error_estimate: float = 0.0
    converged: bool = True
    metadata: dict = field(default_factory=dict)

    def __float__(self) -> float:
        return float(self.value)


class QuadratureError(RuntimeError):
    """Adaptive quadrature hit ``max_panels``; ``result`` holds the best estimate."""

    def __init__(self, result: IntegralResult, what: str = "integral"):
        self.result = result
        super().__init__(
            f"{what} did not converge within {result.metadata.get('panels')} panels "
            f"(value {result.value:.15g}, error estimate {result.error_estimate:.3g})"
        )


@lru_cache(maxsize=None)
def _gauss(n: int):
    x, w = np.polynomial.legendre.leggauss(n)
    return x, w


def _panel_rules(f, lefts, rights):
    """Apply G20 and G10 to a batch of panels with one vectorised call of ``f``."""
    x20, w20 = _gauss(20)
    x10, w10 = _gauss(10)
    lefts = np.asarray(lefts, dtype=float)
    rights = np.asarray(rights, dtype=float)
    half = 0.5 * (rights - lefts)
    mid = 0.5 * (rights + lefts)
    nodes = np.concatenate([mid[:, None] + half[:, None] * x20, mid[:, None] + half[:, None] * x10], axis=1)
    vals = np.asarray(f(nodes.ravel()), dtype=float).reshape(nodes.shape)
    g20 = half * (vals[:, :20] @ w20)
    g10 = half * (vals[:, 20:] @ w10)
    l1 = np.abs(half) * (np.abs(vals[:, :20]) @ w20)
    return g20, np.abs(g20 - g10), l1


def integrate_1d(
    f: Callable,
    a: float,
    b: float,
    spec: QuadratureSpec | None = None,
    *,
    initial_panels: int = 1,
    method: str = "quadrature",
) -> IntegralResult:
    """Integrate a vectorised ``f`` over ``(a, b)`` without evaluating the endpoints.

    Returns an :class:`IntegralResult`; ``converged`` is False (and the value
    is the best estimate) if ``spec.max_panels`` was reached first.
    """
    spec = spec or QuadratureSpec()
    if b == a:
        return IntegralResult(0.0, method, 0.0, True, {"panels": 0})
    edges = np.linspace(a, b, max(1, initial_panels) + 1)
    vals, errs, l1s = _panel_rules(f, edges[:-1], edges[1:])
    # heap of (-err, left, right, value, int |f|)
    heap = [
        (-float(e), float(l), float(r), float(v), float(n))
        for l, r, v, e, n in zip(edges[:-1], edges[1:], vals, errs, l1s)
    ]
    heapq.heapify(heap)
    min_width = 64 * np.finfo(float).eps * max(abs(a), abs(b), 1.0)
    frozen = []  # panels too narrow to split further
    converged = False
    while True:
        total = math.fsum(p[3] for p in heap) + math.fsum(p[3] for p in frozen)
        err = math.fsum(-p[0] for p in heap) + math.fsum(-p[0] for p in frozen)
        l1 = math.fsum(p[4] for p in heap) + math.fsum(p[4] for p in frozen)
        # below ROUNDOFF * int|f| the estimate only measures cancellation noise
        if err <= max(spec.abs_tol, spec.rel_tol * abs(total), ROUNDOFF * l1):
            converged = True
            break
        if not heap or len(heap) + len(frozen) >= spec.max_panels:
            break
        panel = heapq.heappop(heap)
        l, r = panel[1], panel[2]
        if r - l < min_width:
            frozen.append(panel)
            continue
        m = 0.5 * (l + r)
        cv, ce, cn = _panel_rules(f, [l, m], [m, r])
        heapq.heappush(heap, (-float(ce[0]), l, m, float(cv[0]), float(cn[0])))
        heapq.heappush(heap, (-float(ce[1]), m, r, float(cv[1]), float(cn[1])))
    panels = sorted(heap + frozen, key=lambda p: p[1])
    value = math.fsum(p[3] for p in panels)
    error = math.fsum(-p[0] for p in panels)
    return IntegralResult(value, method, error, converged, {"panels": len(panels)})


def _resolve_workers(workers: int | None) -> int:
    if workers is None:
        try:
            workers = int(os.environ.get(THREADS_ENV, "1"))
        except ValueError:
            workers = 1
    return max(1, workers)


def phi_integral_TT1(body: ConvexBody, w, n_phi: int | None = None, workers: int | None = None):
    """``int_0^{2 pi} T T1 dphi`` for each angle in ``w`` (periodic trapezoid rule).

    ``body`` must have the origin in its interior. Chunks of ``w`` may be
    evaluated on several threads; the result is assembled in input order.
    """
    w = np.atleast_1d(np.asarray(w, dtype=float))
    N = n_phi or max(4 * body.K + 8, 64)
    phi = np.linspace(0.0, 2 * math.pi, N, endpoint=False)

    def chunk(ws):
        T, T1 = body._tangent_lengths(phi[None, :], ws[:, None])
        return (2 * math.pi / N) * np.sum(T * T1, axis=1)

    workers = _resolve_workers(workers)
    if workers == 1 or len(w) < 2 * workers:
        return chunk(w)
    parts = np.array_split(w, workers)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        results = list(pool.map(chunk, parts))
    return np.concatenate(results)


def _prepare(body: ConvexBody) -> ConvexBody:
    b = body.recentered()
    if not b.origin_is_interior():
        raise ValueError("Steiner point is not interior to the body")
    return b


def _integrate_w(integrand, lo: float, hi: float, spec: QuadratureSpec, method: str, initial_panels=8):
    """Outer integral over ``(lo, hi)``; the slivers within ``endpoint_margin`` of 0 and pi are separate."""
    d = spec.endpoint_margin
    pieces = []
    a = lo
    if lo < d:
        pieces.append(integrate_1d(integrand, lo, d, spec))
        a = d
    b = hi
    tail = None
    if hi > math.pi - d:
        b = math.pi - d
        tail = integrate_1d(integrand, max(b, a), hi, spec)
    if b > a:
        pieces.append(integrate_1d(integrand, a, b, spec, initial_panels=initial_panels))
    if tail is not None:
        pieces.append(tail)
    value = math.fsum(p.value for p in pieces)
    error = math.fsum(p.error_estimate for p in pieces)
    return IntegralResult(
        value,
        method,
        error,
        all(p.converged for p in pieces),
        {"panels": sum(p.metadata["panels"] for p in pieces), "endpoint_margin": d},
    )


def integrate_exterior(
    body: ConvexBody,
    f: VisualFunction,
    spec: QuadratureSpec | None = None,
    *,
    n_phi: int | None = None,
    workers: int | None = None,
) -> IntegralResult:
    """Brute-force ``int_{P not in K} f(w) dP`` over the exterior of ``body``.

    The body is moved to its Steiner point first (the integral is invariant).

    Raises
    ------
    GrowthError
        If ``f`` is not ``O(w**3)`` at 0.
    """
    spec = spec or QuadratureSpec(rel_tol=1e-11)
    f.check_growth()
    b = _prepare(body)
    N = n_phi or max(4 * b.K + 8, 64)

    def integrand(w):
        return f.eval(w) / np.sin(w) * phi_integral_TT1(b, w, N, workers)

    res = _integrate_w(integrand, 0.0, math.pi, spec, "direct")
    res.metadata.update(n_phi=N, K=b.K)
    return res


def level_set_area_direct(
    body: ConvexBody, w0: float, spec: QuadratureSpec | None = None, *, n_phi: int | None = None
) -> float:
    """Area enclosed by the curve of points seeing ``body`` under angle ``w0``.

    ``F + int_{w0}^{pi} (1/sin t) int T T1 dphi dt``, by direct quadrature.
    """
    if not 0.0 < w0 < math.pi:
        raise ValueError(f"w0 must lie in (0, pi), got {w0}")
    spec = spec or QuadratureSpec(rel_tol=1e-12)
    b = _prepare(body)
    N = n_phi or max(4 * b.K + 8, 64)

    def integrand(w):
        return phi_integral_TT1(b, w, N) / np.sin(w)

    res = _integrate_w(integrand, w0, math.pi, spec, "direct")
    if not res.converged:
        raise QuadratureError(res, "level-set area")
    return body.area + res.value
