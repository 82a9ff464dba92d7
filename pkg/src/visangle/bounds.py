"""Inequalities for integrals of ``w**m - sin(w)**m`` and ``sin(w)**m``.

Bound sides come from closed forms only; the integral side is
:func:`visangle.formulas.omega_minus_sin_power`, so no quadrature noise
enters a verdict.
"""
from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field

from .body import ConvexBody
from .formulas import M_m, M_sin_power, masotti, omega_minus_sin_power, sin_power

__all__ = [
    "BoundRecord",
    "BoundsReport",
    "NotApplicableError",
    "upper_bound",
    "masotti_lower_bounds",
    "constant_width_lower_bound",
    "sin_power_constant_width",
    "bounds_report",
]


class NotApplicableError(ValueError):
    """The inequality's hypotheses are not met by this body (e.g. not of constant width)."""


def _tol(bound_value: float) -> float:
    return 1e-9 * max(1.0, abs(bound_value))


@dataclass
class BoundRecord:
    name: str
    side: str  # "upper" or "lower"
    bound_value: float
    integral_value: float
    applicability: str = "all"  # all | constant_width | m_eq_2
    slack: float = field(init=False)
    satisfied: bool = field(init=False)

    def __post_init__(self):
        if self.side == "upper":
            self.slack = self.bound_value - self.integral_value
        elif self.side == "lower":
            self.slack = self.integral_value - self.bound_value
        else:
            raise ValueError(f"side must be 'upper' or 'lower', got {self.side!r}")
        self.satisfied = self.slack >= -_tol(self.bound_value)

    def as_dict(self) -> dict:
        return asdict(self)


@dataclass
class BoundsReport:
    m: int
    integral_value: float
    bounds: list[BoundRecord]
    skipped: list[str] = field(default_factory=list)

    @property
    def all_satisfied(self) -> bool:
        return all(b.satisfied for b in self.bounds)


def upper_bound(body: ConvexBody, m: int) -> BoundRecord:
    """``int (w**m - sin**m) dP <= -pi**m F + M_m L**2/(2 pi)``; equality for circles."""
    bound = -math.pi**m * body.area + M_m(m) * body.length**2 / (2 * math.pi)
    return BoundRecord("upper", "upper", bound, omega_minus_sin_power(body, m))


def masotti_lower_bounds(body: ConvexBody) -> list[BoundRecord]:
    """Three lower bounds for ``int (w**2 - sin**2) dP``, weakest last.

    ``santalo``: ``(16 - pi**2) F``.
    ``hurwitz_limit``: ``-pi**2 F + 4 L**2/pi - (4/3)(H - L**2/pi)``, equality for
    circles and curves parallel to an astroid.
    ``pedal``: ``(16 - pi**2) F + (32/3)(A - F)``.
    """
    F, L, H, A = body.area, body.length, body.hurwitz_limit, body.pedal_area
    value = masotti(body)
    return [
        BoundRecord("hurwitz_limit", "lower", -math.pi**2 * F + 4 * L**2 / math.pi - 4.0 / 3.0 * (H - L**2 / math.pi), value, "m_eq_2"),
        BoundRecord("pedal", "lower", (16 - math.pi**2) * F + 32.0 / 3.0 * (A - F), value, "m_eq_2"),
        BoundRecord("santalo", "lower", (16 - math.pi**2) * F, value, "m_eq_2"),
    ]


def _require_constant_width(body: ConvexBody, tol: float) -> None:
    if not body.is_constant_width(tol):
        raise NotApplicableError("body is not of constant width (even harmonics present)")


def constant_width_lower_bound(body: ConvexBody, m: int, tol: float = 1e-12) -> list[BoundRecord]:
    """Lower-bound chain for constant-width bodies.

    ``int >= -pi**m F + M_m L**2/(2 pi) - pi**(m-1)/4 (1 - (3/4)**m) Delta``
    and that bound is itself ``>= pi**(m-1)/4 (3/4)**m Delta >= 0``. Two
    records are returned, one per inequality.
    """
    _require_constant_width(body, tol)
    delta = body.deficit
    first = (
        -math.pi**m * body.area
        + M_m(m) * body.length**2 / (2 * math.pi)
        - math.pi ** (m - 1) / 4 * (1 - 0.75**m) * delta
    )
    margin = math.pi ** (m - 1) / 4 * 0.75**m * delta
    return [
        BoundRecord("constant_width", "lower", first, omega_minus_sin_power(body, m), "constant_width"),
        # the bound plays the role of the "integral" in the second link of the chain
        BoundRecord("constant_width_margin", "lower", margin, first, "constant_width"),
    ]


def sin_power_constant_width(body: ConvexBody, m: int, tol: float = 1e-12) -> BoundRecord:
    """``int sin**m dP = M(sin**m) L**2/(2 pi)`` for constant width (an equality).

    Recorded as an upper bound; ``satisfied`` additionally requires
    ``|slack| <= 1e-9 L**2``.
    """
    _require_constant_width(body, tol)
    rec = BoundRecord(
        "sin_power_constant_width",
        "upper",
        M_sin_power(m) * body.length**2 / (2 * math.pi),
        sin_power(body, m),
        "constant_width",
    )
    rec.satisfied = abs(rec.slack) <= 1e-9 * body.length**2
    return rec


def bounds_report(body: ConvexBody, m: int) -> BoundsReport:
    """Every inequality that applies to ``body`` at exponent ``m``."""
    records = [upper_bound(body, m)]
    skipped = []
    if m == 2:
        records.extend(masotti_lower_bounds(body))
    else:
        skipped.append("masotti lower bounds (m != 2)")
    try:
        records.extend(constant_width_lower_bound(body, m))
    except NotApplicableError:
        skipped.append("constant-width chain (not constant width)")
    if m >= 3:
        try:
            records.append(sin_power_constant_width(body, m))
        except NotApplicableError:
            skipped.append("sin-power constant-width identity (not constant width)")
    return BoundsReport(m, omega_minus_sin_power(body, m), records, skipped)
