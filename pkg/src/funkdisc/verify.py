r"""Seeded verification suites covering the package's numerical identities.

Each suite draws its own numpy.random.default_rng(seed) (PCG64), so a rerun
with the same seed and sample count reproduces the report byte for byte.

A suite mixes sub-checks with different native tolerances (pullbacks at
1e-10, unit-speed residuals at 1e-12, truncation limits at 1e-6, finite
difference oracles at 1e-4).  The report carries a single pair
(max_residual, tolerance), so every sub-residual is scaled into suite
tolerance units, residual * tolerance / check_tolerance, before taking the
max; passed <=> max_residual <= tolerance then means each sub-check met its
own bound.  Window checks (the truncation decay slope) contribute 0 inside
the window and 2 * tolerance * (1 + overshoot) outside.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from . import busemann as bus
from . import geodesics as geo
from . import isometries as iso
from . import laplace as lap
from .metrics import (
    Covector,
    DiscPoint,
    ModelId,
    ModelPoint,
    TangentVector,
    eval_funk,
    eval_hilbert,
)

FUNK_TIMES = tuple(0.25 * i for i in range(1, 21))      # 0.25 .. 5.0
HILBERT_TIMES = tuple(0.15 * i for i in range(1, 21))   # 0.15 .. 3.0


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one suite; max_residual is in suite tolerance units."""

    suite: str
    samples: int
    seed: int
    tolerance: float
    max_residual: float
    passed: bool
    checks: tuple

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "samples": self.samples,
            "seed": self.seed,
            "tolerance": _f15(self.tolerance),
            "max_residual": _f15(self.max_residual),
            "passed": self.passed,
            "checks": [
                {"name": n, "residual": _f15(r), "tolerance": _f15(t)}
                for (n, r, t) in self.checks
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def _f15(v: float) -> float:
    return float(format(v, ".15g"))


class _Collector:
    def __init__(self, suite: str, tolerance: float) -> None:
        self.suite = suite
        self.tolerance = tolerance
        self._worst: dict = {}

    def add(self, name: str, residual: float, check_tol: Optional[float] = None) -> None:
        tol = self.tolerance if check_tol is None else check_tol
        residual = float(residual)
        prev = self._worst.get(name)
        if prev is None or residual > prev[0]:
            self._worst[name] = (residual, tol)

    def window(self, name: str, value: float, lo: float, hi: float) -> None:
        if lo <= value <= hi:
            self.add(name, 0.0)
        else:
            overshoot = max(lo - value, value - hi)
            self.add(name, 2.0 * self.tolerance * (1.0 + overshoot))

    def report(self, samples: int, seed: int) -> VerificationReport:
        checks = tuple(sorted((n, r, t) for n, (r, t) in self._worst.items()))
        scaled = float(
            max((r * self.tolerance / t for (n, r, t) in checks), default=0.0)
        )
        return VerificationReport(
            suite=self.suite,
            samples=samples,
            seed=seed,
            tolerance=self.tolerance,
            max_residual=scaled,
            passed=scaled <= self.tolerance,
            checks=checks,
        )


def _disc(rng: np.random.Generator, rmax: float) -> DiscPoint:
    r = rmax * math.sqrt(rng.uniform())
    th = rng.uniform(0.0, 2.0 * math.pi)
    return DiscPoint(r * math.cos(th), r * math.sin(th))


def _boundary(rng: np.random.Generator) -> geo.BoundaryPoint:
    return geo.BoundaryPoint.from_angle(rng.uniform(0.0, 2.0 * math.pi))


def _vector(rng: np.random.Generator) -> TangentVector:
    while True:
        v = rng.normal(size=2)
        if v @ v > 1e-12:
            return TangentVector(v[0], v[1])


def _source_sample(rng: np.random.Generator, iso_id: iso.IsometryId) -> ModelPoint:
    x = _disc(rng, 0.95)
    if iso_id.source is ModelId.FB:
        return iso.apply(iso.IsometryId.XI, x)
    return ModelPoint(iso_id.source, (x.x1, x.x2))


def run_isometries(samples: int = 1000, seed: int = 0) -> VerificationReport:
    """Pullback, roundtrip, and composition residuals for all catalog maps."""
    rng = np.random.default_rng(seed)
    col = _Collector("isometries", 1e-10)
    for iso_id in iso.IsometryId:
        for _ in range(samples):
            src = _source_sample(rng, iso_id)
            v = _vector(rng)
            col.add(f"pullback_{iso_id.value}", iso.pullback_residual(iso_id, src, v))
            back = iso.apply_inverse(iso_id, iso.apply(iso_id, src))
            col.add(
                f"roundtrip_{iso_id.value}",
                float(np.max(np.abs(back.array - src.array))),
            )
    for _ in range(samples):
        x = _disc(rng, 0.95)
        direct = iso.apply(iso.IsometryId.XI, x)
        via = iso.apply_inverse(iso.IsometryId.PHI, iso.apply(iso.IsometryId.G_MAP, x))
        col.add(
            "composed_ff_fb_via_fu",
            float(np.max(np.abs(direct.array - via.array))),
            1e-9,
        )
    return col.report(samples, seed)


def _family_residual(gc: geo.GeodesicClass, pt: np.ndarray) -> float:
    k = gc.kind
    if k is geo.GeodesicKind.DIAMETER:
        (m,) = gc.params
        return abs(pt[0]) if math.isinf(m) else abs(pt[1] - m * pt[0])
    if k is geo.GeodesicKind.ORTHO_ARC:
        cx, cy, r = gc.params
        return abs(math.hypot(pt[0] - cx, pt[1] - cy) - r)
    if k is geo.GeodesicKind.VERTICAL_RAY:
        (x1,) = gc.params
        return abs(pt[0] - x1)
    if k is geo.GeodesicKind.CONCENTRIC_SEMICIRCLE:
        (r,) = gc.params
        return abs(math.hypot(pt[0], pt[1]) - r)
    if k is geo.GeodesicKind.SEMICIRCLE_ON_AXIS:
        cx, r = gc.params
        return abs(math.hypot(pt[0] - cx, pt[1]) - r)
    if k is geo.GeodesicKind.BAND_VERTICAL:
        (x1,) = gc.params
        return abs(pt[0] - x1)
    m, c = gc.params
    return geo.band_implicit_residual(m, c, (pt[0], pt[1]))


_CLASSIFIED = {
    ModelId.FP: iso.IsometryId.F_MAP,
    ModelId.FU: iso.IsometryId.G_MAP,
    ModelId.FB: iso.IsometryId.XI,
}


def _chord_points(rng: np.random.Generator, chord: geo.Chord, count: int) -> list:
    pts = []
    if chord.is_vertical:
        half = math.sqrt(1.0 - chord.k * chord.k)
        for _ in range(count):
            s = half * rng.uniform(-0.9, 0.9)
            pts.append(DiscPoint(chord.k, s))
        return pts
    m, c = chord.m, chord.c
    q = 1.0 + m * m
    disc = math.sqrt(q - c * c)
    a1 = (-m * c - disc) / q
    a2 = (-m * c + disc) / q
    for _ in range(count):
        u = rng.uniform(0.1, 0.9)
        x1 = a1 + (a2 - a1) * u
        pts.append(DiscPoint(x1, m * x1 + c))
    return pts


def run_geodesics(samples: int = 1000, seed: int = 0) -> VerificationReport:
    """Unit speed, additivity, distances, reversal, and image classification."""
    rng = np.random.default_rng(seed)
    col = _Collector("geodesics", 1e-10)
    for _ in range(samples):
        p = _disc(rng, 0.6)
        y = _boundary(rng)
        ray = geo.FunkRay(p, y)
        for t in FUNK_TIMES:
            val = eval_funk(geo.funk_geodesic(ray, t), geo.funk_velocity(ray, t))
            col.add("funk_unit_speed", abs(val.total - 1.0), 1e-12)
        line = geo.HilbertLine(p, y)
        for t in HILBERT_TIMES:
            val = eval_hilbert(geo.hilbert_geodesic(line, t), geo.hilbert_velocity(line, t))
            col.add("hilbert_unit_speed", abs(val.total - 1.0), 1e-12)
        # additivity along the same ray / line
        t1 = rng.uniform(0.0, 5.0)
        t2 = t1 + rng.uniform(0.1, 5.0)
        d = geo.funk_distance(geo.funk_geodesic(ray, t1), geo.funk_geodesic(ray, t2))
        col.add("funk_additivity", abs(d - (t2 - t1)))
        s1 = rng.uniform(-2.0, 2.0)
        s2 = s1 + rng.uniform(0.1, 4.0)
        dh = geo.hilbert_distance(
            geo.hilbert_geodesic(line, s1), geo.hilbert_geodesic(line, s2)
        )
        col.add("hilbert_additivity", abs(dh - (s2 - s1)))
        # reversal factor F(p, -v) = k F(p, v) with k from the line through p, y
        v = TangentVector(y.y1 - p.x1, y.y2 - p.x2)
        k = line.k
        fwd = eval_funk(p, v).total
        rev = eval_funk(p, TangentVector(-v.v1, -v.v2)).total
        col.add("funk_reversal_factor", abs(rev - k * fwd) / max(1.0, abs(rev)))
        # metric symmetry / asymmetry on random pairs
        x2 = _disc(rng, 0.8)
        col.add(
            "hilbert_symmetry", abs(geo.hilbert_distance(p, x2) - geo.hilbert_distance(x2, p))
        )
        mid = _disc(rng, 0.8)
        tri = geo.funk_distance(p, x2) - geo.funk_distance(p, mid) - geo.funk_distance(mid, x2)
        col.add("funk_triangle", max(tri, 0.0))
    n_chords = max(8, samples // 10)
    for _ in range(n_chords):
        m = rng.uniform(-2.0, 2.0)
        c = rng.uniform(-0.85, 0.85) * math.hypot(1.0, m)
        if abs(m - c) < 0.05:
            c = m  # exercise the vertical-ray family exactly
        chord = geo.Chord.slope_intercept(m, c)
        for model, iso_id in _CLASSIFIED.items():
            gc = geo.classify_image(model, chord)
            for x in _chord_points(rng, chord, 4):
                col.add(
                    f"classify_{model.value}",
                    _family_residual(gc, iso.apply(iso_id, x).array),
                )
        kv = rng.uniform(-0.85, 0.85)
        vchord = geo.Chord.vertical(kv)
        for model, iso_id in _CLASSIFIED.items():
            gc = geo.classify_image(model, vchord)
            for x in _chord_points(rng, vchord, 4):
                col.add(
                    f"classify_{model.value}",
                    _family_residual(gc, iso.apply(iso_id, x).array),
                )
    for _ in range(n_chords):
        m = rng.uniform(-2.0, 2.0)
        c = rng.uniform(0.05, 0.85) * math.hypot(1.0, m) * (1 if rng.uniform() < 0.5 else -1)
        gc = geo.classify_image(ModelId.FP, geo.Chord.slope_intercept(m, c))
        cx, cy, r = gc.params
        col.add("ortho_arc_identity", abs(cx * cx + cy * cy - r * r - 1.0))
    return col.report(samples, seed)


def run_busemann(samples: int = 1000, seed: int = 0) -> VerificationReport:
    """Truncation convergence and decay, ray values, Lipschitz, horocycles."""
    rng = np.random.default_rng(seed)
    col = _Collector("busemann", 1e-6)
    fit_ts = (5.0, 7.5, 10.0, 12.5, 15.0, 17.5, 20.0)
    n_slope = max(4, min(samples, 50))
    for i in range(samples):
        p = _disc(rng, 0.6)
        y = _boundary(rng)
        x = _disc(rng, 0.8)
        for metric in (bus.MetricType.FUNK, bus.MetricType.HILBERT):
            field = bus.BusemannField(metric, p, y)
            limit = bus.busemann_value(field, x)
            col.add(
                f"truncation_{metric.value}",
                abs(bus.busemann_truncated(field, x, 20.0) - limit),
            )
        field = bus.BusemannField(bus.MetricType.FUNK, p, y)
        ray = geo.FunkRay(p, y)
        for t in (0.0, 1.0, 3.0, 5.0, 7.0):
            col.add(
                "funk_value_on_ray",
                abs(bus.busemann_value(field, geo.funk_geodesic(ray, t)) - t),
                1e-12,
            )
        x2 = _disc(rng, 0.8)
        gap = (
            bus.busemann_value(field, x2)
            - bus.busemann_value(field, x)
            - geo.funk_distance(x, x2)
        )
        col.add("funk_lipschitz", max(gap, 0.0), 1e-12)
        if i < n_slope:
            res = [
                abs(bus.busemann_truncated(field, x, t) - bus.busemann_value(field, x))
                for t in fit_ts
            ]
            if min(res) > 0.0:
                slope = np.polyfit(fit_ts, np.log(res), 1)[0]
                col.window("funk_decay_slope", float(slope), -1.05, -0.95)
    n_levels = max(4, samples // 100)
    for _ in range(n_levels):
        p = _disc(rng, 0.5)
        y = _boundary(rng)
        funk_field = bus.BusemannField(bus.MetricType.FUNK, p, y)
        a = rng.uniform(0.0, 1.5)
        level = bus.HorocycleLevel(funk_field, a)
        pts = bus.horocycle_points(level, 16)
        for z in pts:
            col.add(
                "funk_horocycle_value",
                abs(bus.busemann_value(funk_field, z) - a),
                1e-10,
            )
        d = pts[1].array - pts[0].array
        col.add(
            "funk_horocycle_perpendicular",
            abs(d @ y.array) / math.hypot(d[0], d[1]),
            1e-10,
        )
        hil_field = bus.BusemannField(bus.MetricType.HILBERT, p, y)
        ah = rng.uniform(-1.0, 1.5)
        hlevel = bus.HorocycleLevel(hil_field, ah)
        for z in bus.horocycle_points(hlevel, 16):
            col.add(
                "hilbert_horocycle_value",
                abs(bus.busemann_value(hil_field, z) - ah),
                1e-10,
            )
    return col.report(samples, seed)


def run_laplacian(samples: int = 1000, seed: int = 0) -> VerificationReport:
    """Dual metric and tensor against oracles, gradients, densities, Laplacians."""
    rng = np.random.default_rng(seed)
    col = _Collector("laplacian", 1e-4)
    for _ in range(samples):
        x = _disc(rng, 0.8)
        v = _vector(rng)
        xi = Covector(v.v1, v.v2)
        closed = lap.dual_funk(x, xi).total
        col.add(
            "dual_vs_grid_oracle",
            abs(closed - lap.dual_funk_support_oracle(x, xi)),
            1e-6,
        )
        gstar = lap.dual_tensor(x, xi).array
        col.add(
            "dual_tensor_vs_fd",
            float(np.max(np.abs(gstar - lap.dual_tensor_fd(x, xi)))),
            1e-6,
        )
        p = _disc(rng, 0.6)
        y = _boundary(rng)
        field = bus.BusemannField(bus.MetricType.FUNK, p, y)
        db = bus.busemann_gradient_covector(field, x)
        col.add("dual_of_db_is_one", abs(lap.dual_funk(x, db).total - 1.0), 1e-10)
        grad = lap.gradient(field, x)
        col.add(
            "gradient_is_y_minus_x",
            float(
                np.max(np.abs(grad.array - (y.array - x.array)))
            ),
            1e-10,
        )
        col.add("gradient_unit_funk_norm", abs(eval_funk(x, grad).total - 1.0), 1e-10)
        for kind in lap.MeasureKind:
            col.add(
                f"density_norm_route_{kind.value}",
                abs(lap.volume_density(kind, x) - lap.volume_density_from_norm(kind, x)),
                1e-10,
            )
        xo = x if math.hypot(x.x1, x.x2) > 0.05 else DiscPoint(0.3, 0.1)
        for kind in lap.MeasureKind:
            col.add(
                f"laplacian_fd_{kind.value}",
                abs(
                    lap.laplacian_busemann(kind, field, xo)
                    - lap.laplacian_fd_oracle(kind, field, xo)
                ),
                1e-4,
            )
    col.add("mean_curvature_limit", abs(lap.mean_curvature_sphere(100.0) + 2.0), 1e-12)
    return col.report(samples, seed)


_SUITES: dict = {
    "isometries": run_isometries,
    "geodesics": run_geodesics,
    "busemann": run_busemann,
    "laplacian": run_laplacian,
}


def run_suite(name: str, samples: int = 1000, seed: int = 0) -> list:
    """Run one suite by name, or all four with 'all'; returns a list of reports."""
    if name == "all":
        return [fn(samples, seed) for fn in _SUITES.values()]
    if name not in _SUITES:
        raise ValueError(f"unknown suite {name}; choose from {sorted(_SUITES)} or all")
    return [_SUITES[name](samples, seed)]
