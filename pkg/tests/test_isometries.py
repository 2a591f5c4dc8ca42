"""Isometry catalog: maps, inverses, differentials, pullbacks."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from funkdisc.errors import DomainError
from funkdisc.isometries import (
    IsometryId,
    apply,
    apply_inverse,
    differential,
    pullback_residual,
)
from funkdisc.metrics import DiscPoint, ModelId, ModelPoint, TangentVector

TOL_VALUE = 1e-12
TOL_PULLBACK = 1e-10
TOL_FD = 1e-6
FD_STEP = 1e-6


@st.composite
def disc_samples(draw, rmax=0.9):
    seed = draw(st.integers(min_value=0, max_value=2**31 - 1))
    rng = np.random.default_rng(seed)
    r = rmax * math.sqrt(rng.uniform())
    th = rng.uniform(0.0, 2.0 * math.pi)
    v = rng.normal(size=2)
    while v @ v <= 1e-12:
        v = rng.normal(size=2)
    return DiscPoint(r * math.cos(th), r * math.sin(th)), TangentVector(v[0], v[1])


def _source_point(iso_id, x: DiscPoint):
    if iso_id.source is ModelId.FB:
        return apply(IsometryId.XI, x)
    return ModelPoint(iso_id.source, (x.x1, x.x2))


@pytest.mark.parametrize(
    "iso_id,x,want",
    [
        (IsometryId.ETA, (0.0, 0.0), (0.0, 0.0, 1.0)),
        (IsometryId.XI, (0.0, 0.0), (math.log(2.0), 0.0)),
        (IsometryId.F_MAP, (0.6, 0.0), (1.0 / 3.0, 0.0)),
        (IsometryId.PSI, (0.0, 0.0), (0.0, 0.0, 1.0)),
        (IsometryId.G_MAP, (0.0, 0.0), (0.0, 2.0)),
    ],
)
def test_known_images(iso_id, x, want):
    got = apply(iso_id, DiscPoint(*x)).coords
    assert np.max(np.abs(np.array(got) - np.array(want))) < TOL_VALUE


def test_known_inverse_images():
    got = apply_inverse(IsometryId.XI, ModelPoint(ModelId.FB, (math.log(2.0), 0.0)))
    assert np.max(np.abs(got.array)) < TOL_VALUE
    got = apply_inverse(IsometryId.PHI, ModelPoint(ModelId.FU, (0.0, 2.0)))
    assert abs(got.coords[0] - math.log(2.0)) < TOL_VALUE
    assert abs(got.coords[1]) < TOL_VALUE


def test_differential_at_center():
    d = differential(IsometryId.ETA, DiscPoint(0.0, 0.0)).array
    assert np.allclose(d, np.array([[1.0, 0.0], [0.0, 1.0], [0.0, 0.0]]), atol=TOL_VALUE)
    d = differential(IsometryId.PHI, ModelPoint(ModelId.FB, (math.log(2.0), 0.0)))
    assert np.allclose(d.push(TangentVector(1.0, 0.0)), [0.0, 2.0], atol=TOL_VALUE)
    assert np.allclose(d.push(TangentVector(0.0, 1.0)), [-2.0, 0.0], atol=TOL_VALUE)


@pytest.mark.parametrize("iso_id", list(IsometryId))
def test_differential_matches_finite_differences(iso_id):
    src = _source_point(iso_id, DiscPoint(0.31, -0.24))
    d = differential(iso_id, src).array
    base = np.array(src.coords)
    for j in range(2):
        step = np.zeros(2)
        step[j] = FD_STEP
        hi = apply(iso_id, ModelPoint(iso_id.source, tuple(base + step))).array
        lo = apply(iso_id, ModelPoint(iso_id.source, tuple(base - step))).array
        assert np.max(np.abs((hi - lo) / (2 * FD_STEP) - d[:, j])) < TOL_FD


@pytest.mark.parametrize("iso_id", list(IsometryId))
def test_pullback_at_fixed_points(iso_id):
    for coords, vec in [((0.3, 0.1), (1.0, 0.4)), ((-0.5, 0.4), (-0.2, 0.9))]:
        src = _source_point(iso_id, DiscPoint(*coords))
        assert pullback_residual(iso_id, src, TangentVector(*vec)) < TOL_PULLBACK


@pytest.mark.parametrize("iso_id", list(IsometryId))
@given(sample=disc_samples())
@settings(max_examples=50, deadline=None)
def test_pullback_property(iso_id, sample):
    x, v = sample
    src = _source_point(iso_id, x)
    assert pullback_residual(iso_id, src, v) < TOL_PULLBACK


@pytest.mark.parametrize("iso_id", list(IsometryId))
@given(sample=disc_samples())
@settings(max_examples=50, deadline=None)
def test_roundtrip_property(iso_id, sample):
    x, _ = sample
    src = _source_point(iso_id, x)
    back = apply_inverse(iso_id, apply(iso_id, src))
    assert np.max(np.abs(back.array - src.array)) < TOL_PULLBACK


def test_g_factors_through_the_band():
    x = DiscPoint(0.2, -0.6)
    direct = apply(IsometryId.G_MAP, x).array
    via = apply(IsometryId.PHI, apply(IsometryId.XI, x)).array
    assert np.max(np.abs(direct - via)) < TOL_VALUE


def test_source_chart_is_checked():
    with pytest.raises(DomainError):
        apply(IsometryId.PHI, DiscPoint(0.1, 0.1))
    with pytest.raises(DomainError):
        apply_inverse(IsometryId.ETA, ModelPoint(ModelId.FUS1, (0.0, 0.0, 1.0)))
