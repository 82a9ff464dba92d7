import math

import pytest

from visangle.body import circle, cw3, ellipse, from_fourier, random_body
from visangle.bounds import (
    BoundRecord,
    NotApplicableError,
    bounds_report,
    constant_width_lower_bound,
    masotti_lower_bounds,
    sin_power_constant_width,
    upper_bound,
)


def test_record_slack_sign():
    up = BoundRecord("x", "upper", 2.0, 1.5)
    lo = BoundRecord("y", "lower", 2.0, 1.5)
    assert up.slack == 0.5 and up.satisfied
    assert lo.slack == -0.5 and not lo.satisfied
    with pytest.raises(ValueError):
        BoundRecord("z", "sideways", 1.0, 1.0)


@pytest.mark.parametrize("m", range(1, 9))
def test_upper_bound_tight_on_circle(m):
    rec = upper_bound(circle(1.7), m)
    assert abs(rec.slack) <= 1e-9 * max(1.0, abs(rec.bound_value))


@pytest.mark.parametrize("seed", range(15))
def test_upper_bound_random(seed):
    b = random_body(seed)
    for m in range(1, 9):
        rec = upper_bound(b, m)
        assert rec.satisfied
        if m >= 2:
            assert rec.slack > 0  # strict for non-disks


@pytest.mark.parametrize("seed", range(15))
def test_masotti_ordering(seed):
    h, p, s = masotti_lower_bounds(random_body(seed))
    assert h.satisfied and p.satisfied and s.satisfied
    assert h.bound_value >= p.bound_value - 1e-12
    assert p.bound_value >= s.bound_value - 1e-12


@pytest.mark.parametrize("a2", [0.0, 0.1, 0.2, 1.0 / 3.0])
def test_astroid_parallel_equality(a2):
    # p = a0 + a2 cos 2 phi is a curve parallel to an astroid
    b = from_fourier(1.0, [(0.0, 0.0), (a2, 0.0)])
    h = masotti_lower_bounds(b)[0]
    assert abs(h.slack) <= 1e-8


def test_constant_width_chain():
    for a3 in (0.02, 0.05, 0.1, 0.125):
        b = cw3(1.0, a3)
        for m in range(1, 9):
            first, second = constant_width_lower_bound(b, m)
            assert first.satisfied and second.satisfied
            assert second.bound_value >= 0
            assert second.slack >= -1e-9 * max(1.0, abs(second.bound_value))


def test_constant_width_not_applicable():
    with pytest.raises(NotApplicableError):
        constant_width_lower_bound(ellipse(1.5, 1.0, 16), 3)
    with pytest.raises(NotApplicableError):
        sin_power_constant_width(random_body(1), 4)


@pytest.mark.parametrize("m", range(3, 9))
def test_sin_power_constant_width(m):
    rec = sin_power_constant_width(cw3(1.0, 0.1), m)
    assert rec.satisfied
    assert abs(rec.slack) <= 1e-9 * cw3(1.0, 0.1).length ** 2


def test_report_skips_inapplicable():
    rep = bounds_report(ellipse(1.5, 1.0, 16), 2)
    names = [b.name for b in rep.bounds]
    assert names == ["upper", "hurwitz_limit", "pedal", "santalo"]
    assert rep.all_satisfied
    assert any("constant-width" in s for s in rep.skipped)
    rep = bounds_report(cw3(1.0, 0.05), 4)
    assert {"constant_width", "constant_width_margin", "sin_power_constant_width"} <= {b.name for b in rep.bounds}
    assert rep.integral_value == pytest.approx(rep.bounds[0].integral_value)
    assert not math.isnan(rep.integral_value)
