r"""Dual Funk metric, Busemann gradients, volume forms, and Laplacians.

The dual (co-)metric of the Funk disc is F*(x, xi) = |xi| - <x, xi>, with
dual fundamental tensor

    g*(x, xi) = (1 - <x, u>)(I - u u^T) + (u - x)(u - x)^T,   u = xi / |xi|,

homogeneous of degree 0 in xi.  For the Funk Busemann function b toward the
ideal point y, db = y / (1 - <x, y>) and the Finsler gradient
grad b = g*(x, db) db equals y - x, a unit vector field: F(x, grad b) = 1.

Four volume forms are supported through their densities against the
Lebesgue measure of the disc; for each, the Finsler Laplacian of b is the
weighted divergence (1/sigma) d_i(sigma g*^{ij}(x, db) d_j b).  With the
Busemann-Hausdorff form the Funk disc is asymptotically harmonic:
Delta b = -2 identically.  The Hilbert Busemann Laplacian is the constant
HILBERT_BUSEMANN_LAPLACIAN with respect to its own Riemannian volume.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .busemann import BusemannField, MetricType, busemann_value
from .errors import (
    DomainError,
    OriginSingularityError,
    UnsupportedModel,
    ZeroCovectorError,
)
from .metrics import Covector, DiscPoint, TangentVector
from .numdiff import fd_hessian

EPS_ORIGIN = 1e-6                  # MAX/MIN densities are singular at the origin
HILBERT_BUSEMANN_LAPLACIAN = -0.5  # constant value for the Hilbert disc


class MeasureKind(Enum):
    BUSEMANN_HAUSDORFF = "bh"
    HOLMES_THOMPSON = "ht"
    MAX = "max"
    MIN = "min"


@dataclass(frozen=True)
class DualValue:
    """Split F* = alpha* + beta* of the dual metric."""

    alpha: float
    beta: float

    @property
    def total(self) -> float:
        return self.alpha + self.beta


@dataclass(frozen=True)
class DualTensor:
    g11: float
    g12: float
    g22: float

    @property
    def array(self) -> np.ndarray:
        return np.array([[self.g11, self.g12], [self.g12, self.g22]])


def dual_funk(x: DiscPoint, xi: Covector) -> DualValue:
    """F*(x, xi) = |xi| - <x, xi>, the support function of the unit co-ball."""
    xa, xia = x.array, xi.array
    return DualValue(math.sqrt(xia @ xia), -(xa @ xia))


def dual_funk_support_oracle(x: DiscPoint, xi: Covector, n_directions: int = 100000) -> float:
    """max_u <xi, u> / F(x, u) over a uniform grid of unit directions.

    Independent route to F*(x, xi); discretization error is O((pi/n)^2).
    """
    th = 2.0 * math.pi * np.arange(n_directions) / n_directions
    u = np.stack([np.cos(th), np.sin(th)], axis=1)
    xa, xia = x.array, xi.array
    w = 1.0 - xa @ xa
    xu = u @ xa
    fvals = (np.sqrt(w + xu * xu) + xu) / w  # F(x, u) for unit u
    return float(np.max((u @ xia) / fvals))


def _dual_tensor_arrays(xa: np.ndarray, xia: np.ndarray) -> np.ndarray:
    n = math.sqrt(xia @ xia)
    u = xia / n
    return (1.0 - xa @ u) * (np.eye(2) - np.outer(u, u)) + np.outer(u - xa, u - xa)


def dual_tensor(x: DiscPoint, xi: Covector) -> DualTensor:
    """Dual fundamental tensor g*(x, xi), 0-homogeneous in xi."""
    xia = xi.array
    if xia @ xia == 0.0:
        raise ZeroCovectorError("dual tensor is undefined at xi = 0")
    g = _dual_tensor_arrays(x.array, xia)
    return DualTensor(g[0, 0], 0.5 * (g[0, 1] + g[1, 0]), g[1, 1])


def dual_tensor_fd(x: DiscPoint, xi: Covector) -> np.ndarray:
    """(1/2) Hessian of F*^2 in xi by finite differences, the check route.

    Differenced at the normalized covector (g* is 0-homogeneous in xi),
    which keeps the rounding floor of the second difference small.
    """
    xia = xi.array
    if xia @ xia == 0.0:
        raise ZeroCovectorError("dual tensor is undefined at xi = 0")
    u = xia / math.sqrt(xia @ xia)
    xa = x.array

    def half_f2(z: np.ndarray) -> float:
        val = math.sqrt(z @ z) - xa @ z
        return 0.5 * val * val

    return fd_hessian(half_f2, u)


def gradient(field: BusemannField, x: DiscPoint) -> TangentVector:
    """Finsler gradient of the Funk Busemann function, grad b = g*(x, db) db."""
    if field.metric is not MetricType.FUNK:
        raise UnsupportedModel("gradient is provided for Funk fields only")
    xa, y = x.array, field.y.array
    db = y / (1.0 - xa @ y)
    g = _dual_tensor_arrays(xa, db) @ db
    return TangentVector(g[0], g[1])


_DENSITY_EXPONENT = 1.5


def _density_arrays(kind: MeasureKind, xa: np.ndarray) -> float:
    r2 = xa @ xa
    if kind is MeasureKind.BUSEMANN_HAUSDORFF:
        return 1.0
    if kind is MeasureKind.HOLMES_THOMPSON:
        return (1.0 - r2) ** -_DENSITY_EXPONENT
    r = math.sqrt(r2)
    if kind is MeasureKind.MAX:
        return ((1.0 + r) / (1.0 - r)) ** _DENSITY_EXPONENT
    return ((1.0 - r) / (1.0 + r)) ** _DENSITY_EXPONENT


def volume_density(kind: MeasureKind, x: DiscPoint) -> float:
    """Density of the chosen volume form against Lebesgue measure."""
    return _density_arrays(kind, x.array)


def volume_density_from_norm(kind: MeasureKind, x: DiscPoint) -> float:
    """Check route through the general Randers density factorization.

    Density = factor(|beta|) sqrt(det a) with the factors (1 - |beta|^2)^{3/2},
    1, (1 + |beta|)^3, (1 - |beta|)^3 for BH, HT, MAX, MIN, where a is the
    underlying Riemannian (Klein) metric with sqrt(det a) = (1 - |x|^2)^{-3/2}
    and |beta| = |x| on the Funk disc.
    """
    xa = x.array
    r2 = xa @ xa
    nb = math.sqrt(r2)
    root_det = (1.0 - r2) ** -1.5
    if kind is MeasureKind.BUSEMANN_HAUSDORFF:
        factor = (1.0 - nb * nb) ** 1.5
    elif kind is MeasureKind.HOLMES_THOMPSON:
        factor = 1.0
    elif kind is MeasureKind.MAX:
        factor = (1.0 + nb) ** 3
    else:
        factor = (1.0 - nb) ** 3
    return factor * root_det


def laplacian_busemann(kind: MeasureKind, field: BusemannField, x: DiscPoint) -> float:
    """Closed-form weighted Laplacian of the Funk Busemann function.

    BH gives the constant -2 (asymptotic harmonicity); the other measures add
    the drift term <grad ln sigma, y - x>.  MAX and MIN are singular at the
    origin and raise OriginSingularityError within EPS_ORIGIN of it.
    """
    if field.metric is not MetricType.FUNK:
        raise UnsupportedModel("Busemann Laplacians are provided for Funk fields only")
    xa, y = x.array, field.y.array
    if kind is MeasureKind.BUSEMANN_HAUSDORFF:
        return -2.0
    r2 = xa @ xa
    drift = (xa @ y) - r2
    if kind is MeasureKind.HOLMES_THOMPSON:
        return -2.0 + 3.0 * drift / (1.0 - r2)
    r = math.sqrt(r2)
    if r < EPS_ORIGIN:
        raise OriginSingularityError(
            f"{kind.name} density is singular at the origin (|x| < {EPS_ORIGIN})"
        )
    if kind is MeasureKind.MAX:
        return -2.0 + 3.0 * drift / (r * (1.0 - r2))
    return -2.0 - 3.0 * drift / (r * (1.0 - r2))


def laplacian_fd_oracle(
    kind: MeasureKind,
    field: BusemannField,
    x: DiscPoint,
    h_outer: float = 1e-4,
    h_inner: float = 1e-5,
) -> float:
    """Divergence-form finite-difference route, fully independent of the
    closed forms: db by central differences of busemann_value, flux
    G = sigma g*(., db) db, divergence of G by central differences, then
    divided by sigma(x)."""
    if field.metric is not MetricType.FUNK:
        raise UnsupportedModel("Busemann Laplacians are provided for Funk fields only")
    p, y = field.p.array, field.y.array

    def b_at(z: np.ndarray) -> float:
        return math.log((1.0 - p @ y) / (1.0 - z @ y))

    def flux(z: np.ndarray) -> np.ndarray:
        db = np.array(
            [
                (b_at(z + [h_inner, 0.0]) - b_at(z - [h_inner, 0.0])) / (2.0 * h_inner),
                (b_at(z + [0.0, h_inner]) - b_at(z - [0.0, h_inner])) / (2.0 * h_inner),
            ]
        )
        return _density_arrays(kind, z) * (_dual_tensor_arrays(z, db) @ db)

    xa = x.array
    if kind in (MeasureKind.MAX, MeasureKind.MIN) and math.sqrt(xa @ xa) < EPS_ORIGIN:
        raise OriginSingularityError("density is singular at the origin")
    div = 0.0
    for i in range(2):
        e = np.zeros(2)
        e[i] = h_outer
        div += (flux(xa + e)[i] - flux(xa - e)[i]) / (2.0 * h_outer)
    return div / _density_arrays(kind, xa)


def mean_curvature_sphere(r: float) -> float:
    """Mean curvature (scaled) of the forward Funk sphere of radius r,
    -(1/2) coth(r/2) - 3/2, monotone up to the horospheric limit -2."""
    if not r > 0.0:
        raise DomainError("sphere radius must be positive")
    return -0.5 / math.tanh(0.5 * r) - 1.5
