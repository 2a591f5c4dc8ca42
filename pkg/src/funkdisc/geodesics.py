r"""Geodesics and distances of the Funk and Hilbert discs.

Forward Funk geodesics from p toward a boundary point y are
gamma(t) = e^{-t} p + (1 - e^{-t}) y, unit speed for all t >= 0.  Hilbert
geodesics along the chord from p to y are beta(t) = (1 - s(t)) p + s(t) y
with s(t) = (e^t - e^{-t}) / (e^t + k e^{-t}) and k = |y - p|^2 / (1 - |p|^2).
Both distances come from the crossing parameters of the chord with the unit
circle: with X(l) = z + l (x - z), the circle crossings l1 < 0 < l2 give

    d_Funk(x, z)    = ln((1 - l1) / (-l1))
    d_Hilbert(x, z) = (1/2) ln(l2 (1 - l1) / ((-l1)(l2 - 1)))

Under the isometries the straight chords become the familiar curve families
of each chart (diameters and orthogonal arcs in FP, vertical rays and
semicircles in FU, vertical lines and an implicit exponential family in the
band), which classify_image reports.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple, Union

import numpy as np

from .errors import (
    DegenerateError,
    DomainError,
    NoIntersectionError,
    UnsupportedModel,
    ZeroVectorError,
)
from .metrics import DiscPoint, ModelId, ModelPoint, TangentVector

TOL_BOUNDARY = 1e-6   # accepted distance from the unit circle before renormalizing
TOL_COINCIDE = 1e-14  # two points closer than this are treated as equal


@dataclass(frozen=True)
class BoundaryPoint:
    """Point of the unit circle; inputs within TOL_BOUNDARY are renormalized."""

    y1: float
    y2: float

    def __post_init__(self) -> None:
        n = math.hypot(self.y1, self.y2)
        if abs(n - 1.0) > TOL_BOUNDARY:
            raise DomainError(f"({self.y1}, {self.y2}) is not on the unit circle")
        object.__setattr__(self, "y1", self.y1 / n)
        object.__setattr__(self, "y2", self.y2 / n)

    @classmethod
    def from_angle(cls, theta: float) -> "BoundaryPoint":
        return cls(math.cos(theta), math.sin(theta))

    @property
    def array(self) -> np.ndarray:
        return np.array([self.y1, self.y2])


@dataclass(frozen=True)
class FunkRay:
    """Forward geodesic ray of the Funk disc from p toward boundary point y."""

    p: DiscPoint
    y: BoundaryPoint


@dataclass(frozen=True)
class HilbertLine:
    """Hilbert geodesic line through p with forward ideal endpoint y."""

    p: DiscPoint
    y: BoundaryPoint

    @property
    def k(self) -> float:
        d = self.y.array - self.p.array
        return (d @ d) / (1.0 - self.p.array @ self.p.array)

    @property
    def backward_endpoint(self) -> BoundaryPoint:
        p, y = self.p.array, self.y.array
        c = 2.0 * (1.0 - p @ y) / (1.0 + p @ p - 2.0 * (p @ y))
        b = y + c * (p - y)
        return BoundaryPoint(b[0], b[1])


class GeodesicKind(Enum):
    DIAMETER = "diameter"
    ORTHO_ARC = "ortho_arc"
    VERTICAL_RAY = "vertical_ray"
    SEMICIRCLE_ON_AXIS = "semicircle_on_axis"
    CONCENTRIC_SEMICIRCLE = "concentric_semicircle"
    BAND_VERTICAL = "band_vertical"
    BAND_IMPLICIT = "band_implicit"


@dataclass(frozen=True)
class GeodesicClass:
    model: ModelId
    kind: GeodesicKind
    params: tuple


@dataclass(frozen=True)
class Chord:
    """Disc chord, either x2 = m x1 + c or the vertical line x1 = k."""

    m: Optional[float] = None
    c: Optional[float] = None
    k: Optional[float] = None

    def __post_init__(self) -> None:
        slanted = self.m is not None and self.c is not None and self.k is None
        vertical = self.m is None and self.c is None and self.k is not None
        if not (slanted or vertical):
            raise DomainError("chord needs either (m, c) or k alone")

    @classmethod
    def slope_intercept(cls, m: float, c: float) -> "Chord":
        return cls(m=float(m), c=float(c))

    @classmethod
    def vertical(cls, k: float) -> "Chord":
        return cls(k=float(k))

    @property
    def is_vertical(self) -> bool:
        return self.k is not None

    def meets_disc(self) -> bool:
        if self.is_vertical:
            return abs(self.k) < 1.0
        return abs(self.c) / math.hypot(1.0, self.m) < 1.0


def chord_through(p: DiscPoint, y: BoundaryPoint) -> Chord:
    """Chord of the disc supporting the segment from p to y."""
    dx = y.y1 - p.x1
    dy = y.y2 - p.x2
    if math.hypot(dx, dy) < TOL_COINCIDE:
        raise DegenerateError("p and y coincide")
    if abs(dx) <= 1e-15 * max(1.0, abs(dy)):
        return Chord.vertical(p.x1)
    m = dy / dx
    return Chord.slope_intercept(m, p.x2 - m * p.x1)


def forward_hit(x: DiscPoint, v: TangentVector) -> BoundaryPoint:
    """Boundary point where the ray x + s v (s > 0) leaves the disc."""
    xv = x.array
    vv = v.array
    a = vv @ vv
    if a == 0.0:
        raise ZeroVectorError("direction must be nonzero")
    b = xv @ vv
    c = 1.0 - xv @ xv
    disc = math.sqrt(b * b + a * c)
    s = c / (b + disc) if b > 0.0 else (disc - b) / a
    hit = xv + s * vv
    return BoundaryPoint(hit[0], hit[1])


def backward_hit(x: DiscPoint, v: TangentVector) -> BoundaryPoint:
    return forward_hit(x, TangentVector(-v.v1, -v.v2))


def lambda_roots(x: DiscPoint, z: DiscPoint) -> Tuple[float, float]:
    """Circle crossings of X(l) = z + l (x - z): returns (l1, l2), l1 < 0 < l2."""
    xa, za = x.array, z.array
    d = xa - za
    a = d @ d
    if a < TOL_COINCIDE * TOL_COINCIDE:
        raise DegenerateError("points coincide, no chord is defined")
    b = za @ d
    c = 1.0 - za @ za
    disc = math.sqrt(b * b + a * c)
    if b < 0.0:
        l2 = (disc - b) / a
        l1 = -c / (a * l2)
    else:
        l1 = -(b + disc) / a
        l2 = -c / (a * l1)
    return l1, l2


def funk_distance(x: DiscPoint, z: DiscPoint) -> float:
    """Asymmetric Funk distance from x to z."""
    if math.hypot(z.x1 - x.x1, z.x2 - x.x2) < TOL_COINCIDE:
        return 0.0
    l1, _ = lambda_roots(x, z)
    return math.log((1.0 - l1) / (-l1))


def hilbert_distance(x: DiscPoint, z: DiscPoint) -> float:
    """Hilbert distance between x and z (symmetric)."""
    if math.hypot(z.x1 - x.x1, z.x2 - x.x2) < TOL_COINCIDE:
        return 0.0
    l1, l2 = lambda_roots(x, z)
    return 0.5 * math.log(l2 * (1.0 - l1) / ((-l1) * (l2 - 1.0)))


def funk_geodesic(ray: FunkRay, t: float) -> DiscPoint:
    """gamma(t) = e^{-t} p + (1 - e^{-t}) y; valid while the point stays
    representable inside the open disc (raises DomainError far along the ray)."""
    u = math.exp(-t)
    p, y = ray.p.array, ray.y.array
    g = u * p + (1.0 - u) * y
    return DiscPoint(g[0], g[1])


def funk_velocity(ray: FunkRay, t: float) -> TangentVector:
    u = math.exp(-t)
    return TangentVector(u * (ray.y.y1 - ray.p.x1), u * (ray.y.y2 - ray.p.x2))


def _hilbert_s(line: HilbertLine, t: float) -> Tuple[float, float]:
    # s and s' with the e^{-2t} form, stable for all real t
    k = line.k
    e = math.exp(-2.0 * t)
    den = 1.0 + k * e
    s = (1.0 - e) / den
    sp = 2.0 * (1.0 + k) * e / (den * den)
    return s, sp


def hilbert_geodesic(line: HilbertLine, t: float) -> DiscPoint:
    """beta(t) = (1 - s(t)) p + s(t) y, defined for all real t."""
    s, _ = _hilbert_s(line, t)
    p, y = line.p.array, line.y.array
    g = p + s * (y - p)
    return DiscPoint(g[0], g[1])


def hilbert_velocity(line: HilbertLine, t: float) -> TangentVector:
    _, sp = _hilbert_s(line, t)
    return TangentVector(sp * (line.y.y1 - line.p.x1), sp * (line.y.y2 - line.p.x2))


def classify_image(model: ModelId, chord: Chord) -> GeodesicClass:
    """Curve family traced in the target chart by the image of a disc chord.

    FP families: DIAMETER(m) for chords through the origin (m = inf for the
    vertical diameter) and ORTHO_ARC(cx, cy, r) with |center|^2 = r^2 + 1.
    FU families: VERTICAL_RAY(x1), CONCENTRIC_SEMICIRCLE(r),
    SEMICIRCLE_ON_AXIS(cx, r).  FB families: BAND_VERTICAL(x1) and
    BAND_IMPLICIT(m, c), the curve 4 e^{X1} sin X2 = -(m (4 - e^{2 X1}) +
    c (4 + e^{2 X1})).
    """
    if not chord.meets_disc():
        raise NoIntersectionError("chord does not meet the open unit disc")
    if model is ModelId.FP:
        if chord.is_vertical:
            if chord.k == 0.0:
                return GeodesicClass(model, GeodesicKind.DIAMETER, (math.inf,))
            k = chord.k
            return GeodesicClass(
                model,
                GeodesicKind.ORTHO_ARC,
                (1.0 / k, 0.0, math.sqrt(1.0 - k * k) / abs(k)),
            )
        m, c = chord.m, chord.c
        if c == 0.0:
            return GeodesicClass(model, GeodesicKind.DIAMETER, (m,))
        r = math.sqrt(1.0 + m * m - c * c) / abs(c)
        return GeodesicClass(model, GeodesicKind.ORTHO_ARC, (-m / c, 1.0 / c, r))
    if model is ModelId.FU:
        if chord.is_vertical:
            k = chord.k
            return GeodesicClass(
                model,
                GeodesicKind.CONCENTRIC_SEMICIRCLE,
                (2.0 * math.sqrt((1.0 - k) / (1.0 + k)),),
            )
        m, c = chord.m, chord.c
        if m == c:
            return GeodesicClass(model, GeodesicKind.VERTICAL_RAY, (2.0 * c,))
        r = 2.0 * math.sqrt(m * m - c * c + 1.0) / abs(m - c)
        return GeodesicClass(
            model, GeodesicKind.SEMICIRCLE_ON_AXIS, (-2.0 / (m - c), r)
        )
    if model is ModelId.FB:
        if chord.is_vertical:
            k = chord.k
            x1 = 0.5 * math.log(4.0 * (1.0 - k) / (1.0 + k))
            return GeodesicClass(model, GeodesicKind.BAND_VERTICAL, (x1,))
        return GeodesicClass(model, GeodesicKind.BAND_IMPLICIT, (chord.m, chord.c))
    raise UnsupportedModel(f"no chord-image classification for {model.name}")


PointOrPair = Union[ModelPoint, Tuple[float, float]]


def _band_coords(X: PointOrPair) -> Tuple[float, float]:
    if isinstance(X, ModelPoint):
        if X.model is not ModelId.FB:
            raise DomainError("expected a band chart point")
        return X.coords[0], X.coords[1]
    return float(X[0]), float(X[1])


def band_branch_residuals(m: float, c: float, X: PointOrPair) -> Tuple[float, float]:
    """Residuals of both sign branches of the band implicit equation."""
    x1, x2 = _band_coords(X)
    e1 = math.exp(x1)
    e2 = e1 * e1
    lhs = 4.0 * e1 * math.sin(x2)
    rhs = m * (4.0 - e2) + c * (4.0 + e2)
    return abs(lhs + rhs), abs(lhs - rhs)


def band_implicit_residual(m: float, c: float, X: PointOrPair) -> float:
    """min over the two sign branches; images of disc chords satisfy the minus one."""
    minus, plus = band_branch_residuals(m, c, X)
    return min(minus, plus)
