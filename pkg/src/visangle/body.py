"""Planar convex bodies described by a truncated Fourier series of the support function.

A body is

    p(phi) = a0 + sum_{k=1}^{K} (a_k cos(k phi) + b_k sin(k phi))

and every geometric functional used by the integral formulas (length, area,
pedal area, Steiner point, isoperimetric deficit, the limit ``H`` of
``F(w) sin(w)**2``) is computed from the coefficients.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np
from scipy.optimize import brentq, minimize_scalar

__all__ = [
    "ConvexBody",
    "BodySummary",
    "ConvexityError",
    "OriginNotInteriorError",
    "BodySpecError",
    "from_fourier",
    "from_samples",
    "circle",
    "ellipse",
    "cw3",
    "random_body",
    "parse_body",
    "load_body",
    "dump_body",
    "visual_angle_at",
]

DEFAULT_K = 32


class ConvexityError(ValueError):
    """The series violates ``p + p'' >= 0``; carries the worst angle and value."""

    def __init__(self, phi: float, value: float, tol: float):
        self.phi = phi
        self.value = value
        self.tol = tol
        super().__init__(
            f"not convex: p + p'' = {value:.6g} at phi = {phi:.6g} (tolerance -{tol:.3g})"
        )


class OriginNotInteriorError(ValueError):
    """The origin is not an interior point of the body."""


class BodySpecError(ValueError):
    """A body description (preset string or JSON) could not be parsed."""


@dataclass(frozen=True, eq=False)
class ConvexBody:
    """Support function ``a0 + sum (a_k cos k phi + b_k sin k phi)``, ``k = 1..K``.

    Build instances with :func:`from_fourier` (which validates convexity) or
    one of the presets. ``a[k-1]`` and ``b[k-1]`` hold ``a_k`` and ``b_k``.
    """

    a0: float
    a: np.ndarray
    b: np.ndarray
    convexity_margin: float = math.nan

    def __post_init__(self):
        for arr in (self.a, self.b):
            arr.setflags(write=False)

    # -- series evaluation -------------------------------------------------
    @property
    def K(self) -> int:
        return len(self.a)

    @property
    def coeffs(self) -> list[tuple[float, float]]:
        return [(float(x), float(y)) for x, y in zip(self.a, self.b)]

    @property
    def ks(self) -> np.ndarray:
        return np.arange(1, self.K + 1)

    def support(self, phi, nu: int = 0):
        """``nu``-th derivative of the support function, termwise."""
        phi = np.asarray(phi, dtype=float)
        out = np.full(phi.shape, self.a0 if nu == 0 else 0.0)
        for k, ak, bk in zip(self.ks, self.a, self.b):
            if ak == 0.0 and bk == 0.0:
                continue
            c, s = np.cos(k * phi), np.sin(k * phi)
            # d/dphi cycles (cos, sin) -> (-sin, cos)
            r = nu % 4
            if r == 0:
                term = ak * c + bk * s
            elif r == 1:
                term = -ak * s + bk * c
            elif r == 2:
                term = -ak * c - bk * s
            else:
                term = ak * s - bk * c
            out = out + float(k) ** nu * term
        return out

    def radius_of_curvature(self, phi):
        """``p + p''`` evaluated from the series."""
        return self.support(phi) + self.support(phi, 2)

    def support_difference(self, phi, eps):
        """``p(phi + eps) - p(phi)`` without cancellation for small ``eps``."""
        phi = np.asarray(phi, dtype=float)
        eps = np.asarray(eps, dtype=float)
        out = np.zeros(np.broadcast(phi, eps).shape)
        mid = phi + 0.5 * eps
        for k, ak, bk in zip(self.ks, self.a, self.b):
            if ak == 0.0 and bk == 0.0:
                continue
            out = out + 2.0 * np.sin(0.5 * k * eps) * (-ak * np.sin(k * mid) + bk * np.cos(k * mid))
        return out

    # -- functionals -----------------------------------------------------------
    @property
    def c2(self) -> np.ndarray:
        """``c_k**2 = a_k**2 + b_k**2`` indexed by ``k``; entry 0 is unused (zero)."""
        return np.concatenate(([0.0], self.a * self.a + self.b * self.b))

    @property
    def length(self) -> float:
        return 2.0 * math.pi * self.a0

    @property
    def area(self) -> float:
        c2 = self.c2
        k = np.arange(len(c2))
        corr = math.fsum(((k[2:] ** 2 - 1) * c2[2:]).tolist())
        return self.length**2 / (4.0 * math.pi) - 0.5 * math.pi * corr

    @property
    def pedal_area(self) -> float:
        """Area of the pedal curve about the Steiner point."""
        return math.pi * self.a0**2 + 0.5 * math.pi * math.fsum(self.c2[2:].tolist())

    @property
    def steiner_point(self) -> tuple[float, float]:
        if self.K == 0:
            return (0.0, 0.0)
        return (float(self.a[0]), float(self.b[0]))

    @property
    def deficit(self) -> float:
        """Isoperimetric deficit ``L**2 - 4 pi F``, from the coefficients."""
        c2 = self.c2
        k = np.arange(len(c2))
        return 2.0 * math.pi**2 * math.fsum(((k[2:] ** 2 - 1) * c2[2:]).tolist())

    @property
    def hurwitz_limit(self) -> float:
        """``H``, the limit of ``F(w) sin(w)**2`` as ``w -> 0``."""
        even = self.c2[2::2]
        return self.length**2 / math.pi + 2.0 * math.pi * math.fsum(even.tolist())

    def is_constant_width(self, tol: float = 1e-12) -> bool:
        even = self.c2[2::2]
        if even.size == 0:
            return True
        return bool(np.sqrt(even.max()) <= tol * self.a0)

    def curvature_radius_coeffs(self) -> list[tuple[float, float]]:
        """Fourier coefficients ``((1 - k**2) a_k, (1 - k**2) b_k)`` of ``p + p''``."""
        f = 1.0 - self.ks.astype(float) ** 2
        return [(float(x), float(y)) for x, y in zip(f * self.a, f * self.b)]

    def summary(self) -> "BodySummary":
        return BodySummary(
            L=self.length,
            F=self.area,
            A=self.pedal_area,
            steiner=self.steiner_point,
            delta=self.deficit,
            H=self.hurwitz_limit,
            constant_width=self.is_constant_width(),
            convexity_margin=self.convexity_margin,
        )

    # -- rigid motions -------------------------------------------------------
    def recentered(self) -> "ConvexBody":
        """Same body with the origin moved to its Steiner point."""
        if self.K == 0 or (self.a[0] == 0.0 and self.b[0] == 0.0):
            return self
        a, b = self.a.copy(), self.b.copy()
        a[0] = b[0] = 0.0
        return ConvexBody(self.a0, a, b, self.convexity_margin)

    def translated(self, dx: float, dy: float) -> "ConvexBody":
        """Body translated by ``(dx, dy)`` (only the first harmonic changes)."""
        K = max(self.K, 1)
        a = np.zeros(K)
        b = np.zeros(K)
        a[: self.K], b[: self.K] = self.a, self.b
        a[0] += dx
        b[0] += dy
        return ConvexBody(self.a0, a, b, self.convexity_margin)

    def rotated(self, theta: float) -> "ConvexBody":
        """Body rotated by ``theta`` about the origin: ``p_new(phi) = p(phi - theta)``."""
        kt = self.ks * theta
        c, s = np.cos(kt), np.sin(kt)
        a = self.a * c - self.b * s
        b = self.a * s + self.b * c
        return ConvexBody(self.a0, a, b, self.convexity_margin)

    # -- exterior coordinates ----------------------------------------------------
    def origin_is_interior(self) -> bool:
        if self.a0 > math.fsum(np.sqrt(self.c2[1:]).tolist()):
            return True
        grid = np.linspace(0.0, 2 * math.pi, max(64 * self.K, 256), endpoint=False)
        return bool(self.support(grid).min() > 0.0)

    def tangent_lengths(self, phi, w):
        """Distances ``T``, ``T1`` from the exterior point ``(phi, w)`` to its two tangency points.

        The origin must be interior. The numerators are rearranged in terms of
        ``p(phi1) - p(phi)`` so that both lengths keep their relative accuracy as
        ``w -> pi`` (where they vanish).
        """
        if not self.origin_is_interior():
            raise OriginNotInteriorError(
                "tangent lengths need the origin inside the body; recenter to the Steiner point"
            )
        return self._tangent_lengths(phi, w)

    def _tangent_lengths(self, phi, w):
        phi = np.asarray(phi, dtype=float)
        w = np.asarray(w, dtype=float)
        eps = math.pi - w
        phi1 = phi + eps
        p = self.support(phi)
        dp = self.support(phi, 1)
        p1 = self.support(phi1)
        dp1 = self.support(phi1, 1)
        diff = self.support_difference(phi, eps)
        sw = np.sin(eps)
        one_plus_cos = 2.0 * np.sin(0.5 * eps) ** 2
        T = (diff + p * one_plus_cos - dp * sw) / sw
        T1 = (-diff + p1 * one_plus_cos + dp1 * sw) / sw
        return T, T1

    def exterior_point(self, phi, w):
        """Cartesian point seeing the body under angle ``w``, first tangent normal at ``phi``."""
        phi = np.asarray(phi, dtype=float)
        w = np.asarray(w, dtype=float)
        p = self.support(phi)
        p1 = self.support(math.pi + phi - w)
        sw = np.sin(w)
        X = -(p * np.sin(phi - w) + p1 * np.sin(phi)) / sw
        Y = (p * np.cos(phi - w) + p1 * np.cos(phi)) / sw
        return X, Y


@dataclass(frozen=True)
class BodySummary:
    L: float
    F: float
    A: float
    steiner: tuple[float, float]
    delta: float
    H: float
    constant_width: bool
    convexity_margin: float = math.nan

    def as_dict(self) -> dict:
        return {
            "L": self.L,
            "F": self.F,
            "A": self.A,
            "steiner_x": self.steiner[0],
            "steiner_y": self.steiner[1],
            "delta": self.delta,
            "H": self.H,
            "constant_width": self.constant_width,
            "convexity_margin": self.convexity_margin,
        }


def _min_radius_of_curvature(body: ConvexBody) -> tuple[float, float]:
    """Global minimum of ``p + p''``: dense grid, then Brent refinement of the lowest cells."""
    n = max(32 * body.K, 512)
    grid = np.linspace(0.0, 2 * math.pi, n, endpoint=False)
    rho = body.radius_of_curvature(grid)
    h = 2 * math.pi / n
    best_phi = float(grid[np.argmin(rho)])
    best = float(rho.min())
    # local minima of the periodic grid sequence
    is_min = (rho <= np.roll(rho, 1)) & (rho <= np.roll(rho, -1))
    candidates = np.flatnonzero(is_min)
    candidates = candidates[np.argsort(rho[candidates])][:4]
    for i in candidates:
        res = minimize_scalar(
            lambda x: float(body.radius_of_curvature(x)),
            bounds=(grid[i] - h, grid[i] + h),
            method="bounded",
            options={"xatol": 1e-12},
        )
        if res.fun < best:
            best, best_phi = float(res.fun), float(res.x) % (2 * math.pi)
    return best_phi, best


def from_fourier(a0: float, coeffs: Iterable[Sequence[float]] = (), *, check: bool = True) -> ConvexBody:
    """Validated body from ``a0`` and ``[(a1, b1), (a2, b2), ...]``.

    Raises
    ------
    ValueError
        If ``a0 <= 0``.
    ConvexityError
        If ``min (p + p'') < -1e-9 a0``.
    """
    a0 = float(a0)
    if not a0 > 0.0:
        raise ValueError(f"a0 must be positive (mean width > 0), got {a0!r}")
    pairs = np.asarray(list(coeffs), dtype=float).reshape(-1, 2)
    a = np.ascontiguousarray(pairs[:, 0])
    b = np.ascontiguousarray(pairs[:, 1])
    body = ConvexBody(a0, a, b)
    if not check:
        return body
    phi, rho_min = _min_radius_of_curvature(body)
    tol = 1e-9 * a0
    if rho_min < -tol:
        raise ConvexityError(phi, rho_min, tol)
    return ConvexBody(a0, a, b, convexity_margin=rho_min)


def from_samples(samples, K: int = DEFAULT_K) -> ConvexBody:
    """Least-squares projection of ``(phi, p(phi))`` samples onto harmonics ``0..K``.

    For equispaced samples this is the discrete Fourier projection. At least
    ``4 K`` samples are required.
    """
    samples = np.asarray(samples, dtype=float)
    if samples.ndim != 2 or samples.shape[1] != 2:
        raise ValueError("samples must be a sequence of (phi, p) pairs")
    if len(samples) < 4 * K:
        raise ValueError(f"need at least 4K = {4 * K} samples, got {len(samples)}")
    phi, p = samples[:, 0], samples[:, 1]
    k = np.arange(1, K + 1)
    design = np.hstack([np.ones((len(phi), 1)), np.cos(np.outer(phi, k)), np.sin(np.outer(phi, k))])
    sol, *_ = np.linalg.lstsq(design, p, rcond=None)
    return from_fourier(sol[0], np.column_stack([sol[1 : K + 1], sol[K + 1 :]]))


# -- presets ---------------------------------------------------------------------


def circle(r: float = 1.0) -> ConvexBody:
    return from_fourier(r, [])


def ellipse(a: float, b: float, K: int = DEFAULT_K, n_samples: int | None = None) -> ConvexBody:
    """Ellipse with semi-axes ``a`` (along x) and ``b``, projected onto ``K`` harmonics."""
    n = n_samples or max(16 * K, 512)
    phi = np.linspace(0.0, 2 * math.pi, n, endpoint=False)
    p = np.sqrt((a * np.cos(phi)) ** 2 + (b * np.sin(phi)) ** 2)
    return from_samples(np.column_stack([phi, p]), K)


def cw3(a0: float = 1.0, a3: float = 0.05) -> ConvexBody:
    """Constant-width body ``p = a0 + a3 cos(3 phi)``; convex for ``|a3| <= a0/8``."""
    return from_fourier(a0, [(0.0, 0.0), (0.0, 0.0), (a3, 0.0)])


def random_body(seed: int, K: int = 8, decay: float = 3.0) -> ConvexBody:
    """Random smooth convex body, reproducible from ``seed``.

    Harmonics ``k >= 2`` are Gaussian with standard deviation ``k**-decay``
    and rescaled so that ``sum (k**2 - 1) c_k`` is a random fraction in
    ``[0.2, 0.9]`` of ``a0 = 1``, which guarantees ``p + p'' > 0``. The first
    harmonic is a random translation.
    """
    rng = np.random.default_rng(seed)
    k = np.arange(1, K + 1)
    scale = k.astype(float) ** (-decay)
    a = rng.standard_normal(K) * scale
    b = rng.standard_normal(K) * scale
    weight = (k[1:] ** 2 - 1) * np.hypot(a[1:], b[1:])
    target = rng.uniform(0.2, 0.9)
    if weight.sum() > 0:
        s = target / weight.sum()
        a[1:] *= s
        b[1:] *= s
    a[0], b[0] = rng.uniform(-0.3, 0.3, size=2)
    return from_fourier(1.0, np.column_stack([a, b]))


def _floats(text: str) -> list[float]:
    try:
        return [float(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise BodySpecError(f"bad numeric list {text!r}") from exc


def parse_body(spec: str) -> ConvexBody:
    """Body from a preset string or a JSON file path.

    Presets: ``circle:r``, ``ellipse:a,b[,K]``, ``cw3:a0,a3``,
    ``random:seed[,K[,decay]]``. Anything else is read as a JSON body file.
    """
    name, _, args = spec.partition(":")
    name = name.strip().lower()
    try:
        if name == "circle":
            vals = _floats(args) or [1.0]
            return circle(vals[0])
        if name == "ellipse":
            vals = _floats(args)
            if len(vals) < 2:
                raise BodySpecError("ellipse needs a,b[,K]")
            K = int(vals[2]) if len(vals) > 2 else DEFAULT_K
            return ellipse(vals[0], vals[1], K)
        if name == "cw3":
            vals = _floats(args)
            if len(vals) != 2:
                raise BodySpecError("cw3 needs a0,a3")
            return cw3(*vals)
        if name == "random":
            vals = _floats(args)
            if not vals:
                raise BodySpecError("random needs seed[,K[,decay]]")
            K = int(vals[1]) if len(vals) > 1 else 8
            decay = vals[2] if len(vals) > 2 else 3.0
            return random_body(int(vals[0]), K, decay)
    except ConvexityError:
        raise
    except BodySpecError:
        raise
    except (ValueError, TypeError) as exc:
        raise BodySpecError(f"{spec!r}: {exc}") from exc
    path = Path(spec)
    if not path.exists():
        raise BodySpecError(f"{spec!r} is neither a preset nor an existing body file")
    return load_body(path)


def load_body(path) -> ConvexBody:
    """Read ``{"a0": ..., "coeffs": [[a1, b1], ...]}``."""
    text = Path(path).read_text()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise BodySpecError(f"{path}: line {exc.lineno}: {exc.msg}") from exc
    if not isinstance(data, dict) or "a0" not in data:
        raise BodySpecError(f"{path}: field 'a0' is required")
    coeffs = data.get("coeffs", [])
    for i, pair in enumerate(coeffs, start=1):
        if not (isinstance(pair, (list, tuple)) and len(pair) == 2):
            raise BodySpecError(f"{path}: coeffs[{i - 1}] (harmonic {i}) must be a pair [a, b]")
    try:
        return from_fourier(data["a0"], coeffs)
    except (TypeError, ValueError) as exc:
        if isinstance(exc, ConvexityError):
            raise
        raise BodySpecError(f"{path}: {exc}") from exc


def dump_body(body: ConvexBody, path=None) -> str:
    text = json.dumps({"a0": body.a0, "coeffs": [list(c) for c in body.coeffs]})
    if path is not None:
        Path(path).write_text(text + "\n")
    return text


def visual_angle_at(body: ConvexBody, x: float, y: float) -> float:
    """Visual angle of ``body`` from the exterior point ``(x, y)``.

    Independent of the ``(phi, w)`` parametrisation: the support lines through
    the point are the zeros of ``d(phi) = x cos phi + y sin phi - p(phi)``, and
    the visual angle is ``pi`` minus the angular measure of ``{d > 0}``.
    """
    n = max(64 * body.K, 2048)
    grid = np.linspace(0.0, 2 * math.pi, n + 1)

    def d(phi):
        return x * np.cos(phi) + y * np.sin(phi) - body.support(phi)

    vals = d(grid)
    if vals.max() <= 0.0:
        raise ValueError("point is not exterior to the body")
    roots = []
    for i in range(n):
        if vals[i] == 0.0:
            roots.append(grid[i])
        elif vals[i] * vals[i + 1] < 0.0:
            roots.append(brentq(lambda t: float(d(t)), grid[i], grid[i + 1], xtol=1e-15, rtol=1e-15))
    if len(roots) != 2:
        raise ValueError(f"expected two support lines through the point, found {len(roots)}")
    r0, r1 = roots
    mid = 0.5 * (r0 + r1)
    positive_arc = r1 - r0 if d(mid) > 0 else 2 * math.pi - (r1 - r0)
    return math.pi - positive_arc
