"""Busemann functions, truncations, horocycles."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from funkdisc.busemann import (
    BusemannField,
    HorocycleLevel,
    MetricType,
    busemann_gradient_covector,
    busemann_truncated,
    busemann_value,
    horocycle_points,
)
from funkdisc.errors import DomainError, EmptyLevelSetError, UnsupportedModel
from funkdisc.geodesics import (
    BoundaryPoint,
    FunkRay,
    HilbertLine,
    funk_distance,
    funk_geodesic,
    hilbert_distance,
    hilbert_geodesic,
)
from funkdisc.metrics import DiscPoint

TOL_EXACT = 1e-12
TOL_LEVEL = 1e-10
TOL_LIMIT = 1e-6

_FIELD_F = BusemannField(MetricType.FUNK, DiscPoint(0.0, 0.0), BoundaryPoint(1.0, 0.0))
_FIELD_H = BusemannField(
    MetricType.HILBERT, DiscPoint(0.0, 0.0), BoundaryPoint(1.0, 0.0)
)


def test_closed_form_values():
    x = DiscPoint(0.5, 0.0)
    assert abs(busemann_value(_FIELD_F, x) - math.log(2.0)) < TOL_EXACT
    assert abs(busemann_value(_FIELD_H, x) - 0.5 * math.log(3.0)) < TOL_EXACT
    assert abs(busemann_value(_FIELD_F, _FIELD_F.p)) < TOL_EXACT


def test_value_along_the_ray():
    # b(gamma(t)) = t when the field is based at the ray's start: the
    # limit t' - d(gamma(t), gamma(t')) is t' - (t' - t)
    field = BusemannField(MetricType.FUNK, DiscPoint(0.2, -0.1), BoundaryPoint.from_angle(0.8))
    ray = FunkRay(field.p, field.y)
    for t in (0.0, 1.0, 3.0, 7.0):
        assert abs(busemann_value(field, funk_geodesic(ray, t)) - t) < TOL_EXACT


def test_truncation_matches_naive_route_at_moderate_t():
    x = DiscPoint(-0.3, 0.45)
    t = 3.0
    naive = t - funk_distance(x, funk_geodesic(FunkRay(_FIELD_F.p, _FIELD_F.y), t))
    assert abs(busemann_truncated(_FIELD_F, x, t) - naive) < TOL_EXACT
    naive = t - hilbert_distance(
        x, hilbert_geodesic(HilbertLine(_FIELD_H.p, _FIELD_H.y), t)
    )
    assert abs(busemann_truncated(_FIELD_H, x, t) - naive) < TOL_EXACT


def test_truncation_converges():
    x = DiscPoint(-0.3, 0.45)
    for field in (_FIELD_F, _FIELD_H):
        b = busemann_value(field, x)
        assert abs(busemann_truncated(field, x, 20.0) - b) < TOL_LIMIT
        # monotone improvement between t = 10 and t = 20
        assert abs(busemann_truncated(field, x, 20.0) - b) <= abs(
            busemann_truncated(field, x, 10.0) - b
        ) + 1e-15


def test_truncation_at_the_moving_point():
    # x = gamma(t) gives b_t(x) = t - 0 exactly
    ray = FunkRay(_FIELD_F.p, _FIELD_F.y)
    t = 2.5
    assert busemann_truncated(_FIELD_F, funk_geodesic(ray, t), t) == t


@st.composite
def field_and_point(draw):
    seed = draw(st.integers(min_value=0, max_value=2**31 - 1))
    rng = np.random.default_rng(seed)
    r = 0.6 * math.sqrt(rng.uniform())
    th = rng.uniform(0.0, 2.0 * math.pi)
    p = DiscPoint(r * math.cos(th), r * math.sin(th))
    y = BoundaryPoint.from_angle(rng.uniform(0.0, 2.0 * math.pi))
    r = 0.9 * math.sqrt(rng.uniform())
    th = rng.uniform(0.0, 2.0 * math.pi)
    return p, y, DiscPoint(r * math.cos(th), r * math.sin(th))


@settings(max_examples=60, deadline=None)
@given(data=field_and_point())
def test_funk_busemann_is_one_lipschitz(data):
    # b(x) - b(z) <= d_F(z, x): mind the order, the distance is asymmetric
    p, y, x = data
    field = BusemannField(MetricType.FUNK, p, y)
    z = DiscPoint(0.1, -0.2)
    slack = funk_distance(z, x) - (busemann_value(field, x) - busemann_value(field, z))
    assert slack > -TOL_EXACT


def test_gradient_covector():
    db = busemann_gradient_covector(_FIELD_F, DiscPoint(0.0, 0.0))
    assert abs(db.xi1 - 1.0) < TOL_EXACT and abs(db.xi2) < TOL_EXACT
    with pytest.raises(UnsupportedModel):
        busemann_gradient_covector(_FIELD_H, DiscPoint(0.0, 0.0))


@pytest.mark.parametrize("a", [-0.5, 0.0, 0.4, 1.2])
def test_funk_horocycle_levels(a):
    field = BusemannField(MetricType.FUNK, DiscPoint(0.3, 0.2), BoundaryPoint.from_angle(1.1))
    pts = horocycle_points(HorocycleLevel(field, a), 16)
    assert len(pts) == 16
    y = field.y.array
    for z in pts:
        assert abs(busemann_value(field, z) - a) < TOL_LEVEL
    # the level set is a chord perpendicular to the segment 0 -> y
    d = pts[-1].array - pts[0].array
    assert abs((d / np.linalg.norm(d)) @ y) < TOL_EXACT


@pytest.mark.parametrize("a", [-1.0, 0.0, 0.8, 1.5])
def test_hilbert_horocycle_levels(a):
    field = BusemannField(
        MetricType.HILBERT, DiscPoint(0.1, -0.25), BoundaryPoint.from_angle(-2.0)
    )
    pts = horocycle_points(HorocycleLevel(field, a), 24)
    assert len(pts) == 24
    for z in pts:
        assert z.x1 * z.x1 + z.x2 * z.x2 < 1.0
        assert abs(busemann_value(field, z) - a) < TOL_LEVEL


def test_horocycle_domain_limits():
    with pytest.raises(EmptyLevelSetError):
        HorocycleLevel(_FIELD_F, -2.0)  # level sits outside the disc
    with pytest.raises(DomainError):
        HorocycleLevel(_FIELD_F, 13.0)  # too close to the ideal point to certify
    with pytest.raises(DomainError):
        HorocycleLevel(_FIELD_H, 7.0)
    with pytest.raises(DomainError):
        horocycle_points(HorocycleLevel(_FIELD_F, 0.0), 1)
