r"""Busemann functions and horocycles of the Funk and Hilbert discs.

For the forward Funk ray gamma from p toward the ideal point y,

    b(x) = ln((1 - <p, y>) / (1 - <x, y>))

and for the Hilbert line through p with forward endpoint y,

    b(x) = (1/2) ln((1 - |x|^2)(1 - <p, y>)^2 / ((1 - |p|^2)(1 - <x, y>)^2)).

busemann_truncated evaluates b_t(x) = t - d(x, gamma(t)) without ever
materializing gamma(t) near the boundary: the e^{-t} factors of the chord
quadratic cancel against t analytically, so the truncation error e^{-t} stays
resolvable down to the resolution of the closed form itself.

Horocycles are the level sets b = a.  Funk levels are chords perpendicular
to the segment from the origin to y; Hilbert levels are ellipses internally
tangent to the unit circle at y with matching curvature, so close to the
tangency the gap to the circle opens only at fourth order and double
precision cannot certify the level value there.  horocycle_points therefore
samples away from an excluded angular cap around the tangency direction; see
GAP_MIN below.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import DomainError, EmptyLevelSetError, UnsupportedModel
from .geodesics import BoundaryPoint, FunkRay, HilbertLine
from .metrics import EPS_BOUND, Covector, DiscPoint

T_MAX = 40.0     # horizon beyond which e^{-t} is below double resolution of the limit
GAP_MIN = 1e-5   # smallest boundary gap 1 - |x|^2 at which |b(x) - a| < 1e-10 is certifiable


class MetricType(Enum):
    FUNK = "funk"
    HILBERT = "hilbert"


@dataclass(frozen=True)
class BusemannField:
    """Busemann function of a Funk ray or a Hilbert line from p toward y."""

    metric: MetricType
    p: DiscPoint
    y: BoundaryPoint


def _funk_b(p: np.ndarray, y: np.ndarray, x: np.ndarray) -> float:
    return math.log((1.0 - p @ y) / (1.0 - x @ y))


def _hilbert_b(p: np.ndarray, y: np.ndarray, x: np.ndarray) -> float:
    dp = 1.0 - p @ y
    dx = 1.0 - x @ y
    return 0.5 * math.log((1.0 - x @ x) * dp * dp / ((1.0 - p @ p) * dx * dx))


def _hilbert_db(p: np.ndarray, y: np.ndarray, x: np.ndarray) -> np.ndarray:
    return -x / (1.0 - x @ x) + y / (1.0 - x @ y)


def busemann_value(field: BusemannField, x: DiscPoint) -> float:
    """Closed-form Busemann function b(x) = lim_t (t - d(x, gamma(t)))."""
    p, y, xa = field.p.array, field.y.array, x.array
    if field.metric is MetricType.FUNK:
        return _funk_b(p, y, xa)
    return _hilbert_b(p, y, xa)


def busemann_truncated(field: BusemannField, x: DiscPoint, t: float) -> float:
    """b_t(x) = t - d(x, gamma(t)), evaluated with the e^{-t} factors cancelled."""
    p, y, xa = field.p.array, field.y.array, x.array
    e1 = y - xa
    e2 = y - p
    cc = e2 @ e2
    if field.metric is MetricType.FUNK:
        u = math.exp(-t)
        dp = 1.0 - p @ y
        # gamma(t) - x = e1 - u e2; 1 - |gamma|^2 = u (2 dp - u cc)
        a = e1 @ e1 - 2.0 * u * (e1 @ e2) + u * u * cc
        if a < 1e-28:
            return t
        ctil = 2.0 * dp - u * cc  # (1 - |gamma|^2) / u, exact factorization
        g = xa + (e1 - u * e2)    # gamma(t)
        b = g @ (xa - g)
        disc = math.sqrt(b * b + a * u * ctil)
        al2 = disc - b if b < 0.0 else a * u * ctil / (b + disc)  # a * l2
        l1 = -u * ctil / al2
        return math.log(ctil) - math.log(al2) - math.log1p(-l1)
    # Hilbert: 1 - s = (1 + k) e^{-2t} / (1 + k e^{-2t}), 1 - |beta|^2 = (1-s)(cc s + A)
    A = 1.0 - p @ p
    k = cc / A
    e = math.exp(-2.0 * t)
    den = 1.0 + k * e
    s = (1.0 - e) / den
    g = p + s * e2
    d = xa - g
    a = d @ d
    if a < 1e-28:
        return t
    depth = cc * s + A
    b = g @ d
    ctil = (1.0 + k) * depth / den  # (1 - |beta|^2) / e^{-2t}
    disc = math.sqrt(b * b + a * e * ctil)
    al2 = disc - b if b < 0.0 else a * e * ctil / (b + disc)
    l1 = -e * ctil / al2
    l2 = al2 / a
    return (
        0.5 * math.log(ctil / al2)
        - 0.5 * math.log1p(-l1)
        + 0.5 * math.log1p(-1.0 / l2)
    )


def busemann_gradient_covector(field: BusemannField, x: DiscPoint) -> Covector:
    """db at x for a Funk field: db_i = y_i / (1 - <x, y>)."""
    if field.metric is not MetricType.FUNK:
        raise UnsupportedModel("gradient covector is provided for Funk fields only")
    d = 1.0 - x.array @ field.y.array
    return Covector(field.y.y1 / d, field.y.y2 / d)


@dataclass(frozen=True)
class HorocycleLevel:
    """Level set b = a of a Busemann field, validated on construction."""

    field: BusemannField
    a: float

    def __post_init__(self) -> None:
        if self.field.metric is MetricType.FUNK:
            h = self._funk_offset()
            if not abs(h) < 1.0 - EPS_BOUND:
                raise EmptyLevelSetError(
                    f"level {self.a} puts the chord outside the open disc"
                )
            if 1.0 - h < 2.0 * GAP_MIN:
                raise DomainError(
                    "level chord is too close to the ideal point for double "
                    "precision to certify the level value"
                )
        else:
            ep, pp = self._hilbert_ep()
            if 4.0 * ep * pp / (ep + pp) ** 2 < 2.0 * GAP_MIN:
                raise DomainError(
                    "level ellipse hugs the boundary everywhere; no point admits "
                    "a double-precision certificate of the level value"
                )

    def _funk_offset(self) -> float:
        dp = 1.0 - self.field.p.array @ self.field.y.array
        return 1.0 - math.exp(-self.a) * dp

    def _hilbert_ep(self):
        p, y = self.field.p.array, self.field.y.array
        pp = (1.0 - p @ y) ** 2
        ep = math.exp(2.0 * self.a) * (1.0 - p @ p)
        return ep, pp


def _conic(level: HorocycleLevel):
    # quadratic form of the Hilbert level ellipse: x M x + L.x + c0 = 0
    y = level.field.y.array
    ep, pp = level._hilbert_ep()
    m = pp * np.eye(2) + ep * np.outer(y, y)
    return m, -2.0 * ep * y, ep - pp, ep, pp


def _hilbert_radius(level: HorocycleLevel, cen: np.ndarray, ang: float) -> float:
    """Distance from the ellipse center to the level set along one ray.

    Seeds with the conic quadratic root, then runs a bracket-safeguarded
    Newton iteration on b(cen + t d) - a; plain Newton can overshoot where
    the ray runs nearly tangent to an eccentric ellipse.
    """
    p, y = level.field.p.array, level.field.y.array
    a_level = level.a
    m, ll, c0, _, _ = _conic(level)
    d = np.array([math.cos(ang), math.sin(ang)])
    qa = d @ m @ d
    qb = (2.0 * m @ cen + ll) @ d
    qc = cen @ m @ cen + ll @ cen + c0
    seed = (-qb + math.sqrt(max(qb * qb - qa * qc, 0.0))) / qa
    # bracket from the center to just inside the unit circle
    cb = cen @ d
    t_hi = -cb + math.sqrt(max(cb * cb - (cen @ cen - (1.0 - 1e-12)), 0.0))
    lo, hi = 0.0, t_hi
    t = min(max(seed, 1e-15), t_hi)
    for _ in range(100):
        z = cen + t * d
        h = _hilbert_b(p, y, z) - a_level
        if h > 0.0:
            lo = t
        else:
            hi = t
        fp = _hilbert_db(p, y, z) @ d
        t_new = t - h / fp if fp != 0.0 else 0.5 * (lo + hi)
        if not (lo < t_new < hi):
            t_new = 0.5 * (lo + hi)
        if abs(t_new - t) <= 1e-17 * max(1.0, abs(t)):
            return t_new
        t = t_new
    return t


def horocycle_points(level: HorocycleLevel, n: int) -> list:
    """n points of the level set, each certified |busemann_value(x) - a| < 1e-10.

    Funk levels are chords sampled uniformly by arc length; Hilbert levels
    are ellipses sampled by angle about the center with a per-angle root
    solve, skipping the cap around the boundary tangency where the gap to
    the unit circle drops below GAP_MIN.
    """
    if n < 2:
        raise DomainError("need n >= 2 sample points")
    field = level.field
    if field.metric is MetricType.FUNK:
        y = field.y.array
        h = level._funk_offset()
        tau = np.array([-y[1], y[0]])
        s2 = (1.0 - EPS_BOUND) - h * h
        if s2 <= 0.0:
            raise EmptyLevelSetError("level chord misses the open disc")
        smax = math.sqrt(s2) * (1.0 - 1e-12)
        pts = []
        for j in range(n):
            s = smax * (-1.0 + (2 * j + 1) / n)
            z = h * y + s * tau
            pts.append(DiscPoint(z[0], z[1]))
        return pts

    p, y = field.p.array, field.y.array
    _, _, _, ep, pp = _conic(level)
    cen = (ep / (ep + pp)) * y
    th_y = math.atan2(y[1], y[0])

    def gap(dth: float) -> float:
        t = _hilbert_radius(level, cen, th_y + dth)
        z = cen + t * np.array([math.cos(th_y + dth), math.sin(th_y + dth)])
        return 1.0 - z @ z

    lo, hi = 0.0, math.pi
    for _ in range(60):
        mid = 0.5 * (lo + hi)
        if gap(mid) >= GAP_MIN:
            hi = mid
        else:
            lo = mid
    cap = hi
    span = 2.0 * (math.pi - cap)
    pts = []
    for j in range(n):
        ang = th_y + cap + span * (2 * j + 1) / (2 * n)
        t = _hilbert_radius(level, cen, ang)
        z = cen + t * np.array([math.cos(ang), math.sin(ang)])
        k = 0
        while 1.0 - z @ z < 0.5 * GAP_MIN and k < 60:
            # safety nudge toward the deep end; unreachable after the cap scan
            ang = th_y + math.pi - 0.5 * (th_y + math.pi - ang)
            t = _hilbert_radius(level, cen, ang)
            z = cen + t * np.array([math.cos(ang), math.sin(ang)])
            k += 1
        pts.append(DiscPoint(z[0], z[1]))
    return pts
