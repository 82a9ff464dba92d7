import json
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.special import ellipe

from visangle.body import (
    BodySpecError,
    ConvexityError,
    OriginNotInteriorError,
    circle,
    cw3,
    dump_body,
    ellipse,
    from_fourier,
    from_samples,
    load_body,
    parse_body,
    random_body,
    visual_angle_at,
)


def ellipse_perimeter(a, b):
    a, b = max(a, b), min(a, b)
    return 4 * a * ellipe(1 - (b / a) ** 2)


def test_circle_functionals():
    c = circle(2.0)
    assert c.length == pytest.approx(4 * math.pi)
    assert c.area == pytest.approx(4 * math.pi)
    assert c.pedal_area == pytest.approx(4 * math.pi)
    assert c.deficit == 0.0
    assert c.hurwitz_limit == pytest.approx(c.length**2 / math.pi)
    assert c.is_constant_width()
    assert c.steiner_point == (0.0, 0.0)


@pytest.mark.parametrize("a,b", [(1.5, 1.0), (1.0, 1.2), (2.0, 1.0)])
def test_ellipse_area_and_perimeter(a, b):
    e = ellipse(a, b, 32)
    assert e.area == pytest.approx(math.pi * a * b, rel=1e-10)
    assert e.length == pytest.approx(ellipse_perimeter(a, b), rel=1e-12)
    assert not e.is_constant_width()


def test_deficit_identity():
    b = random_body(3, 12)
    assert b.deficit == pytest.approx(b.length**2 - 4 * math.pi * b.area, rel=1e-12)
    assert b.pedal_area >= b.area


def test_cw3_constant_width():
    b = cw3(1.0, 0.05)
    assert b.is_constant_width()
    phi = np.linspace(0, 2 * math.pi, 50)
    np.testing.assert_allclose(b.support(phi) + b.support(phi + math.pi), 2.0, atol=1e-15)


def test_convexity_rejected():
    with pytest.raises(ConvexityError) as info:
        from_fourier(1.0, [(0, 0), (0.4, 0)])
    assert info.value.value < 0
    # cw3 is convex exactly up to a3 = a0/8
    cw3(1.0, 0.125)
    with pytest.raises(ConvexityError):
        cw3(1.0, 0.13)


def test_non_positive_a0():
    with pytest.raises(ValueError):
        from_fourier(0.0, [])


def test_convexity_margin():
    b = from_fourier(1.0, [(0, 0), (0.1, 0)])
    assert b.convexity_margin == pytest.approx(0.7, abs=1e-12)


@pytest.mark.parametrize("seed", range(20))
def test_random_bodies_valid(seed):
    b = random_body(seed)
    assert b.convexity_margin > 0
    assert b.K == 8
    again = random_body(seed)
    np.testing.assert_array_equal(b.a, again.a)


def test_support_derivatives():
    b = random_body(5, 10)
    phi = np.linspace(0.1, 6.0, 40)
    h = 1e-5
    fd = (b.support(phi + h) - b.support(phi - h)) / (2 * h)
    np.testing.assert_allclose(b.support(phi, 1), fd, atol=1e-8)
    np.testing.assert_allclose(b.support_difference(phi, 0.3), b.support(phi + 0.3) - b.support(phi), atol=1e-14)


@settings(max_examples=25, deadline=None)
@given(st.floats(0.0, 2 * math.pi), st.floats(-math.pi, math.pi), st.floats(-0.5, 0.5), st.floats(-0.5, 0.5))
def test_rigid_motions_keep_functionals(phi0, theta, dx, dy):
    b = random_body(9, 8)
    m = b.rotated(theta).translated(dx, dy)
    assert m.length == pytest.approx(b.length, rel=1e-14)
    assert m.area == pytest.approx(b.area, rel=1e-12)
    np.testing.assert_allclose(m.c2[2:], b.c2[2:], rtol=1e-12, atol=1e-18)
    # rotation moves the Steiner point by the same rotation
    sx, sy = b.steiner_point
    rx, ry = m.steiner_point
    assert rx == pytest.approx(sx * math.cos(theta) - sy * math.sin(theta) + dx, abs=1e-14)
    assert ry == pytest.approx(sx * math.sin(theta) + sy * math.cos(theta) + dy, abs=1e-14)
    # p_new(phi) = p(phi - theta) after rotation
    assert float(b.rotated(theta).support(phi0)) == pytest.approx(float(b.support(phi0 - theta)), abs=1e-14)


def test_recentered():
    b = random_body(2)
    r = b.recentered()
    assert r.steiner_point == (0.0, 0.0)
    assert r.origin_is_interior()


@settings(max_examples=30, deadline=None)
@given(st.floats(0.0, 2 * math.pi), st.floats(0.05, math.pi - 0.05))
def test_exterior_point_visual_angle(phi, w):
    b = random_body(4, 8).recentered()
    x, y = b.exterior_point(phi, w)
    assert visual_angle_at(b, float(x), float(y)) == pytest.approx(w, abs=1e-9)


@settings(max_examples=30, deadline=None)
@given(st.floats(0.0, 2 * math.pi), st.floats(0.05, math.pi - 1e-6))
def test_tangent_lengths_are_distances(phi, w):
    b = ellipse(1.5, 1.0, 16).recentered()
    x, y = b.exterior_point(phi, w)
    T, T1 = b.tangent_lengths(phi, w)
    # tangency points: p n + p' n_perp at the two normals
    def touch(t):
        return (
            b.support(t) * math.cos(t) - b.support(t, 1) * math.sin(t),
            b.support(t) * math.sin(t) + b.support(t, 1) * math.cos(t),
        )

    t0 = touch(phi)
    t1 = touch(math.pi + phi - w)
    assert T == pytest.approx(math.hypot(x - t0[0], y - t0[1]), rel=1e-9, abs=1e-12)
    assert T1 == pytest.approx(math.hypot(x - t1[0], y - t1[1]), rel=1e-9, abs=1e-12)


def test_tangent_lengths_need_interior_origin():
    b = circle(1.0).translated(3.0, 0.0)
    with pytest.raises(OriginNotInteriorError):
        b.tangent_lengths(0.0, 1.0)


def test_circle_visual_angle():
    c = circle(1.0)
    assert visual_angle_at(c, 2.0, 0.0) == pytest.approx(2 * math.asin(0.5), abs=1e-12)
    with pytest.raises(ValueError):
        visual_angle_at(c, 0.5, 0.0)


def test_from_samples_roundtrip():
    b = random_body(6, 6)
    phi = np.linspace(0, 2 * math.pi, 48, endpoint=False)
    fit = from_samples(np.column_stack([phi, b.support(phi)]), 6)
    np.testing.assert_allclose(fit.a, b.a, atol=1e-14)
    with pytest.raises(ValueError):
        from_samples(np.column_stack([phi[:10], b.support(phi[:10])]), 6)


def test_parse_presets():
    assert parse_body("circle:2").a0 == 2.0
    assert parse_body("ellipse:1.5,1,16").K == 16
    assert parse_body("cw3:1,0.05").is_constant_width()
    assert parse_body("random:7").K == 8
    assert parse_body("random:7,12,2.5").K == 12


@pytest.mark.parametrize("spec", ["ellipse:1", "cw3:1", "random:", "circle:abc", "nothing-here"])
def test_parse_errors(spec):
    with pytest.raises(BodySpecError):
        parse_body(spec)


def test_json_roundtrip(tmp_path):
    b = random_body(8)
    path = tmp_path / "body.json"
    dump_body(b, path)
    back = load_body(path)
    np.testing.assert_array_equal(back.a, b.a)
    np.testing.assert_array_equal(back.b, b.b)
    assert parse_body(str(path)).a0 == b.a0


def test_json_errors(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"a0": 1.0,\n "coeffs": [[0, 0], [0.1]]}')
    with pytest.raises(BodySpecError, match=r"coeffs\[1\]"):
        load_body(bad)
    bad.write_text('{"a0": 1.0,\n "coeffs": [[0, 0],, ]}')
    with pytest.raises(BodySpecError, match="line 2"):
        load_body(bad)
    bad.write_text(json.dumps({"coeffs": []}))
    with pytest.raises(BodySpecError, match="a0"):
        load_body(bad)
    bad.write_text(json.dumps({"a0": 1.0, "coeffs": [[0, 0], [0.5, 0]]}))
    with pytest.raises(ConvexityError):
        load_body(bad)
