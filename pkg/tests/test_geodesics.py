"""Geodesics, distances, and chord-image classification."""

import math

import numpy as np
import pytest

from funkdisc.errors import (
    DegenerateError,
    DomainError,
    NoIntersectionError,
    UnsupportedModel,
    ZeroVectorError,
)
from funkdisc.geodesics import (
    BoundaryPoint,
    Chord,
    FunkRay,
    GeodesicKind,
    HilbertLine,
    backward_hit,
    band_branch_residuals,
    chord_through,
    classify_image,
    forward_hit,
    funk_distance,
    funk_geodesic,
    funk_velocity,
    hilbert_distance,
    hilbert_geodesic,
    hilbert_velocity,
    lambda_roots,
)
from funkdisc.metrics import DiscPoint, ModelId, TangentVector, eval_funk, eval_hilbert

TOL_EXACT = 1e-12
TOL_SPEED = 1e-12
TOL_ADD = 1e-10


def test_forward_hit_values():
    h = forward_hit(DiscPoint(0.0, 0.5), TangentVector(1.0, 0.0))
    assert abs(h.y1 - math.sqrt(0.75)) < TOL_EXACT
    assert abs(h.y2 - 0.5) < TOL_EXACT
    h = forward_hit(DiscPoint(0.5, 0.0), TangentVector(-1.0, 0.0))
    assert abs(h.y1 + 1.0) < TOL_EXACT and abs(h.y2) < TOL_EXACT


def test_backward_hit_is_reversed_forward():
    x, v = DiscPoint(0.2, -0.3), TangentVector(0.4, 0.9)
    b = backward_hit(x, v)
    f = forward_hit(x, TangentVector(-0.4, -0.9))
    assert abs(b.y1 - f.y1) < TOL_EXACT and abs(b.y2 - f.y2) < TOL_EXACT
    with pytest.raises(ZeroVectorError):
        forward_hit(x, TangentVector(0.0, 0.0))


def test_lambda_roots_known():
    l1, l2 = lambda_roots(DiscPoint(0.0, 0.0), DiscPoint(0.5, 0.0))
    assert abs(l1 + 1.0) < TOL_EXACT
    assert abs(l2 - 3.0) < TOL_EXACT
    with pytest.raises(DegenerateError):
        lambda_roots(DiscPoint(0.1, 0.1), DiscPoint(0.1, 0.1))


def test_distance_values():
    o, h = DiscPoint(0.0, 0.0), DiscPoint(0.5, 0.0)
    assert abs(funk_distance(o, h) - math.log(2.0)) < TOL_EXACT
    assert abs(funk_distance(h, o) - math.log(1.5)) < TOL_EXACT
    assert abs(hilbert_distance(o, h) - 0.5 * math.log(3.0)) < TOL_EXACT
    assert abs(hilbert_distance(o, DiscPoint(math.tanh(1.0), 0.0)) - 1.0) < TOL_EXACT
    assert funk_distance(o, o) == 0.0


def test_hilbert_is_arithmetic_mean_of_funk():
    x, z = DiscPoint(0.3, 0.4), DiscPoint(-0.5, 0.1)
    two_h = funk_distance(x, z) + funk_distance(z, x)
    assert abs(2.0 * hilbert_distance(x, z) - two_h) < TOL_EXACT


def test_funk_geodesic_track():
    ray = FunkRay(DiscPoint(0.0, 0.0), BoundaryPoint(1.0, 0.0))
    g = funk_geodesic(ray, math.log(2.0))
    assert abs(g.x1 - 0.5) < TOL_EXACT and abs(g.x2) < TOL_EXACT


def test_hilbert_geodesic_track():
    line = HilbertLine(DiscPoint(0.0, 0.0), BoundaryPoint(1.0, 0.0))
    g = hilbert_geodesic(line, 1.0)
    assert abs(g.x1 - math.tanh(1.0)) < TOL_EXACT
    # defined for all real t; backward endpoint is the antipode here
    b = line.backward_endpoint
    assert abs(b.y1 + 1.0) < TOL_EXACT
    g = hilbert_geodesic(line, -1.0)
    assert abs(g.x1 + math.tanh(1.0)) < TOL_EXACT


@pytest.mark.parametrize("t", [0.0, 0.5, 1.5, 3.0, 5.0])
def test_funk_unit_speed(t):
    ray = FunkRay(DiscPoint(0.21, -0.4), BoundaryPoint.from_angle(2.1))
    val = eval_funk(funk_geodesic(ray, t), funk_velocity(ray, t))
    assert abs(val.total - 1.0) < TOL_SPEED


@pytest.mark.parametrize("t", [-2.0, -0.5, 0.0, 1.0, 3.0])
def test_hilbert_unit_speed(t):
    line = HilbertLine(DiscPoint(0.21, -0.4), BoundaryPoint.from_angle(2.1))
    val = eval_hilbert(hilbert_geodesic(line, t), hilbert_velocity(line, t))
    assert abs(val.total - 1.0) < TOL_SPEED


def test_funk_additivity_along_ray():
    ray = FunkRay(DiscPoint(0.1, 0.55), BoundaryPoint.from_angle(-0.7))
    for s, t in [(0.0, 1.0), (0.5, 4.0), (2.0, 9.5)]:
        d = funk_distance(funk_geodesic(ray, s), funk_geodesic(ray, t))
        assert abs(d - (t - s)) < TOL_ADD


def test_hilbert_additivity_along_line():
    line = HilbertLine(DiscPoint(0.1, 0.55), BoundaryPoint.from_angle(-0.7))
    for s, t in [(-1.5, 1.0), (0.5, 4.0), (-3.0, -1.0)]:
        d = hilbert_distance(hilbert_geodesic(line, s), hilbert_geodesic(line, t))
        assert abs(d - (t - s)) < TOL_ADD


def test_chord_through():
    c = chord_through(DiscPoint(0.0, 0.5), BoundaryPoint(1.0, 0.0))
    assert not c.is_vertical
    assert abs(c.m + 0.5) < TOL_EXACT and abs(c.c - 0.5) < TOL_EXACT
    c = chord_through(DiscPoint(0.3, 0.0), BoundaryPoint(0.3, math.sqrt(0.91)))
    assert c.is_vertical and abs(c.k - 0.3) < TOL_EXACT


def test_classification_catalog():
    gc = classify_image(ModelId.FU, Chord.slope_intercept(0.25, 0.25))
    assert gc.kind is GeodesicKind.VERTICAL_RAY
    assert abs(gc.params[0] - 0.5) < TOL_EXACT

    gc = classify_image(ModelId.FP, Chord.vertical(0.5))
    assert gc.kind is GeodesicKind.ORTHO_ARC
    cx, cy, r = gc.params
    assert abs(cx - 2.0) < TOL_EXACT and cy == 0.0
    assert abs(r * r - 3.0) < TOL_EXACT
    assert abs(cx * cx + cy * cy - r * r - 1.0) < TOL_EXACT

    gc = classify_image(ModelId.FU, Chord.vertical(0.0))
    assert gc.kind is GeodesicKind.CONCENTRIC_SEMICIRCLE
    assert abs(gc.params[0] - 2.0) < TOL_EXACT

    gc = classify_image(ModelId.FP, Chord.slope_intercept(0.7, 0.0))
    assert gc.kind is GeodesicKind.DIAMETER

    gc = classify_image(ModelId.FB, Chord.vertical(0.5))
    assert gc.kind is GeodesicKind.BAND_VERTICAL
    assert abs(gc.params[0] - 0.5 * math.log(4.0 / 3.0)) < TOL_EXACT


def test_band_central_chord_is_axis():
    # the image of x2 = 0 must satisfy sin X2 = 0, the minus branch with m = c = 0
    minus, _ = band_branch_residuals(0.0, 0.0, (0.3, 0.0))
    assert minus == 0.0


def test_classification_errors():
    with pytest.raises(NoIntersectionError):
        classify_image(ModelId.FP, Chord.slope_intercept(0.0, 2.0))
    with pytest.raises(UnsupportedModel):
        classify_image(ModelId.FF, Chord.vertical(0.0))
    with pytest.raises(DomainError):
        Chord(m=1.0, c=None, k=None)


def test_boundary_point_validation():
    with pytest.raises(DomainError):
        BoundaryPoint(0.5, 0.0)
    b = BoundaryPoint(1.0 + 1e-9, 0.0)  # renormalized
    assert abs(math.hypot(b.y1, b.y2) - 1.0) < 1e-15
