"""Upper half-space isometries: metric, axes, perpendiculars, audits."""

import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dispbound import (
    H3Point,
    MoebiusMap,
    audit_pair,
    axis,
    classify,
    common_perpendicular,
    displacement,
    dist,
    jorgensen_number,
    loxodromic_data,
    schottky_sample,
)
from dispbound.hypgeom import dist_to_axis, isometric_circles, schottky_certificate

XI = MoebiusMap(2.0, 0.0, 0.0, 0.5)
ETA = MoebiusMap(1.0, 1.0, 1.0, 2.0)


def _random_map(rng):
    a, b, c, d = (complex(*rng.normal(size=2)) for _ in range(4))
    det = a * d - b * c
    if abs(det) < 1e-6:
        a += 1.0
        det = a * d - b * c
    r = cmath.sqrt(det)
    return MoebiusMap(a / r, b / r, c / r, d / r)


def _random_point(rng):
    return H3Point(complex(*rng.normal(size=2)), math.exp(rng.normal()))


def test_classification():
    assert classify(XI) == "loxodromic"
    assert classify(ETA) == "loxodromic"
    assert classify(MoebiusMap(1.0, 1.0, 0.0, 1.0)) == "parabolic"
    assert classify(MoebiusMap(1.0, 0.0, 0.0, 1.0)) == "identity"


def test_distance_is_a_metric():
    rng = np.random.default_rng(0)
    for _ in range(50):
        p, q, r = (_random_point(rng) for _ in range(3))
        assert dist(p, q) == pytest.approx(dist(q, p), rel=1e-12)
        assert dist(p, p) == pytest.approx(0.0, abs=1e-9)
        assert dist(p, r) <= dist(p, q) + dist(q, r) + 1e-12


def test_known_vertical_distance():
    # Points on a vertical line: the distance is the log-ratio of heights.
    p, q = H3Point(0j, 1.0), H3Point(0j, math.e)
    assert dist(p, q) == pytest.approx(1.0, rel=1e-12)


@settings(max_examples=30, deadline=None)
@given(st.integers(min_value=0, max_value=10**6))
def test_isometries_preserve_the_metric(seed):
    rng = np.random.default_rng(seed)
    m = _random_map(rng)
    p, q = _random_point(rng), _random_point(rng)
    assert dist(m.apply(p), m.apply(q)) == pytest.approx(dist(p, q), rel=1e-11)


def test_metric_invariance_under_long_compositions():
    # Word maps accumulate huge entries; the carried determinant keeps the
    # normalization exact.
    rng = np.random.default_rng(2)
    for _ in range(10):
        word = _random_map(rng)
        for _ in range(11):
            word = word.compose(_random_map(rng))
        p, q = _random_point(rng), _random_point(rng)
        assert dist(word.apply(p), word.apply(q)) == pytest.approx(
            dist(p, q), rel=1e-11
        )


def test_displacement_equals_conjugation_invariant_translation():
    rng = np.random.default_rng(4)
    p = _random_point(rng)
    for m in (XI, ETA):
        g = _random_map(rng)
        conj = g.compose(m).compose(g.inverse())
        assert displacement(conj, g.apply(p)) == pytest.approx(
            displacement(m, p), rel=1e-9
        )


def test_axis_endpoints_are_fixed():
    for m in (XI, ETA):
        g = axis(m)
        for e in (g.p, g.q):
            image = m.apply_boundary(e)
            if cmath.isinf(e):
                assert cmath.isinf(image)
            else:
                assert abs(image - e) < 1e-9


def test_loxodromic_data_consistency():
    for m in (XI, ETA):
        data = loxodromic_data(m)
        u = data["u"]
        assert u + 1 / u == pytest.approx(data["trace"], rel=1e-12)
        assert data["length"] == pytest.approx(2 * math.log(abs(u)), rel=1e-12)
        assert abs(u) > 1


def test_displacement_identity_links_axis_distance_and_length():
    # sinh^2(d/2) = sinh^2(T/2) cosh^2(rho) + sin^2(theta) sinh^2(rho)
    rng = np.random.default_rng(6)
    for m, _ in schottky_sample(5, seed=3):
        data = loxodromic_data(m)
        half_t = data["length"] / 2
        theta = data["angle"]
        g = axis(m)
        for _ in range(4):
            p = _random_point(rng)
            rho = dist_to_axis(g, p)
            lhs = math.sinh(displacement(m, p) / 2) ** 2
            rhs = (
                math.sinh(half_t) ** 2 * math.cosh(rho) ** 2
                + math.sin(theta) ** 2 * math.sinh(rho) ** 2
            )
            assert lhs == pytest.approx(rhs, rel=1e-9)


def test_intersecting_axes_are_reported():
    perp = common_perpendicular(axis(XI), axis(ETA))
    assert perp.intersecting
    assert perp.length == 0.0
    assert dist(perp.midpoint, H3Point(0j, 1.0)) < 1e-6


def test_common_perpendicular_geometry():
    x, y = schottky_sample(1, seed=0)[0]
    a, b = axis(x), axis(y)
    perp = common_perpendicular(a, b)
    assert not perp.intersecting
    assert perp.length > 0
    assert dist_to_axis(a, perp.foot1) == pytest.approx(0.0, abs=1e-9)
    assert dist_to_axis(b, perp.foot2) == pytest.approx(0.0, abs=1e-9)
    assert dist(perp.foot1, perp.foot2) == pytest.approx(perp.length, rel=1e-9)
    assert dist(perp.midpoint, perp.foot1) == pytest.approx(
        perp.length / 2, rel=1e-9
    )
    assert dist(perp.midpoint, perp.foot2) == pytest.approx(
        perp.length / 2, rel=1e-9
    )


def test_worked_jorgensen_number():
    assert jorgensen_number(XI, ETA) == pytest.approx(4.5, abs=1e-12)


def test_jorgensen_number_two_routes_agree():
    for x, y in schottky_sample(5, seed=1):
        report = audit_pair(x, y)
        assert report["jorgensen"] == pytest.approx(
            report["jorgensen_frame"], rel=1e-9
        )


def test_audit_report_on_certified_samples():
    pairs = schottky_sample(10, seed=7)
    for x, y in pairs:
        assert schottky_certificate(x, y)
        report = audit_pair(x, y)
        assert report["bound"]
        assert report["trace_ok"]
        assert report["ordering_base_first"]
        assert not report["hypothesis"]
        assert report["shift_max"] >= report["half_log"] - 1e-9
        assert report["midpoint_equidistance"] < 1e-9


def test_conjugate_axis_midpoints_are_swapped_by_the_second_map():
    # The second map carries one common perpendicular to the other, so the
    # two midpoints lie on a single orbit and the perpendiculars have equal
    # length.
    for x, y in schottky_sample(5, seed=9):
        rep = audit_pair(x, y)
        z1 = H3Point(complex(rep["z1"][0], rep["z1"][1]), rep["z1"][2])
        z2 = H3Point(complex(rep["z2"][0], rep["z2"][1]), rep["z2"][2])
        assert dist(y.apply(z2), z1) < 1e-6
        assert rep["perp_lengths"][0] == pytest.approx(
            rep["perp_lengths"][1], rel=1e-9
        )


def test_audit_rejects_a_shared_axis():
    with pytest.raises(ValueError):
        audit_pair(XI, MoebiusMap(4.0, 0.0, 0.0, 0.25))


def test_isometric_circles_and_certificate():
    center_in, center_out = isometric_circles(ETA)
    assert center_in[1] == pytest.approx(1.0, rel=1e-12)
    assert center_in[0] == pytest.approx(-2.0 + 0j)
    assert center_out[0] == pytest.approx(1.0 + 0j)
    # Radius-1 circles at distance 3 are disjoint, but the pair shares them
    # with itself, so the self test fails.
    assert not schottky_certificate(ETA, ETA)
    with pytest.raises(ValueError):
        isometric_circles(XI)
    assert not schottky_certificate(XI, ETA)
    for x, y in schottky_sample(3, seed=2):
        assert schottky_certificate(x, y)
