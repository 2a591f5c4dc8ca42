r"""Randers metrics on the unit disc and its isometric model charts.

The Funk metric on the open unit disc is the Randers metric F = alpha + beta
with

    alpha(x, v) = sqrt((1 - |x|^2)|v|^2 + <x, v>^2) / (1 - |x|^2)
    beta(x, v)  = <x, v> / (1 - |x|^2)

It measures the time to reach the boundary at unit top speed: F(x, v) equals
|v| / |x - a| where a is the point where the forward ray from x through v
hits the unit circle.  The Hilbert metric is its arithmetic symmetrization,
F_H(x, v) = (F(x, v) + F(x, -v)) / 2 = alpha(x, v), the Beltrami-Klein metric.

Seven further charts carry isometric copies: the Finsler-Poincare disc FP,
the Finsler upper half plane FU, a band model FB, two graphs on the upper
hyperboloid sheet (FUH1, FUH2, restrictions of a Lorentz-type Randers form),
and two on the upper unit hemisphere (FUS1, FUS2, restrictions of a deformed
half-space form).  This module evaluates each metric in its own chart; the
maps between charts live in funkdisc.isometries.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Sequence, Union

import numpy as np

from .errors import DomainError, TangencyError, UnsupportedModel, ZeroVectorError
from .numdiff import STEP_HESSIAN, fd_hessian

EPS_BOUND = 1e-9        # open-disc guard: points require |x|^2 < 1 - EPS_BOUND
TOL_CHART = 1e-10       # surface-chart membership tolerance
TOL_TANGENT = 1e-9      # tangency tolerance for 3d surface charts


class ModelId(Enum):
    FF = "ff"                      # Funk disc
    FP = "fp"                      # Finsler-Poincare disc
    FU = "fu"                      # Finsler upper half plane
    FB = "fb"                      # band model
    FUH1 = "fuh1"                  # hyperboloid graph, Funk pullback
    FUH2 = "fuh2"                  # hyperboloid graph, Poincare pullback
    FUS1 = "fus1"                  # hemisphere graph, Funk pullback
    FUS2 = "fus2"                  # hemisphere graph, Poincare pullback
    AMBIENT_HALFSPACE = "ambient"  # ambient upper half space x3 > 0
    HILBERT = "hilbert"            # Hilbert (Beltrami-Klein) metric on the disc

    @property
    def dim(self) -> int:
        return 3 if self in _THREE_D else 2


_THREE_D = frozenset(
    {ModelId.FUH1, ModelId.FUH2, ModelId.FUS1, ModelId.FUS2, ModelId.AMBIENT_HALFSPACE}
)


@dataclass(frozen=True)
class DiscPoint:
    """Point of the open unit disc."""

    x1: float
    x2: float

    def __post_init__(self) -> None:
        if not (self.x1 * self.x1 + self.x2 * self.x2 < 1.0 - EPS_BOUND):
            raise DomainError(
                f"point ({self.x1}, {self.x2}) is not inside the open unit disc"
            )

    @property
    def array(self) -> np.ndarray:
        return np.array([self.x1, self.x2])


@dataclass(frozen=True)
class TangentVector:
    v1: float
    v2: float

    @property
    def array(self) -> np.ndarray:
        return np.array([self.v1, self.v2])


@dataclass(frozen=True)
class Covector:
    xi1: float
    xi2: float

    @property
    def array(self) -> np.ndarray:
        return np.array([self.xi1, self.xi2])


@dataclass(frozen=True)
class ModelPoint:
    """Point of a model chart, validated against the chart's membership test."""

    model: ModelId
    coords: tuple

    def __post_init__(self) -> None:
        c = tuple(float(t) for t in self.coords)
        object.__setattr__(self, "coords", c)
        m = self.model
        if m.dim != len(c):
            raise DomainError(f"{m.name} points need {m.dim} coordinates, got {len(c)}")
        if m in (ModelId.FF, ModelId.FP, ModelId.HILBERT):
            if not (c[0] * c[0] + c[1] * c[1] < 1.0 - EPS_BOUND):
                raise DomainError(f"{m.name} point must lie inside the open unit disc")
        elif m is ModelId.FU:
            if not c[1] > 0.0:
                raise DomainError("FU points need x2 > 0")
        elif m is ModelId.FB:
            if not abs(c[1]) < math.pi / 2.0:
                raise DomainError("FB points need |x2| < pi/2")
        elif m in (ModelId.FUH1, ModelId.FUH2):
            want = math.sqrt(1.0 + c[0] * c[0] + c[1] * c[1])
            if not (c[2] > 0.0 and abs(c[2] - want) <= TOL_CHART):
                raise DomainError("point is not on the upper hyperboloid sheet")
        elif m in (ModelId.FUS1, ModelId.FUS2):
            r2 = c[0] * c[0] + c[1] * c[1] + c[2] * c[2]
            if not (c[2] > 0.0 and abs(r2 - 1.0) <= TOL_CHART):
                raise DomainError("point is not on the open upper unit hemisphere")
        elif m is ModelId.AMBIENT_HALFSPACE:
            if not c[2] > 0.0:
                raise DomainError("half-space points need x3 > 0")

    @property
    def array(self) -> np.ndarray:
        return np.array(self.coords)


@dataclass(frozen=True)
class RandersValue:
    """Split evaluation F = alpha + beta of a Randers metric."""

    alpha: float
    beta: float

    @property
    def total(self) -> float:
        return self.alpha + self.beta


@dataclass(frozen=True)
class FundamentalTensor:
    g11: float
    g12: float
    g22: float

    @property
    def array(self) -> np.ndarray:
        return np.array([[self.g11, self.g12], [self.g12, self.g22]])


VectorLike = Union[TangentVector, Sequence[float], np.ndarray]


def _vec(v: VectorLike, dim: int) -> np.ndarray:
    a = v.array if isinstance(v, TangentVector) else np.asarray(v, dtype=float)
    if a.shape != (dim,):
        raise DomainError(f"expected a {dim}-vector, got shape {a.shape}")
    return a


def eval_funk(x: DiscPoint, v: TangentVector) -> RandersValue:
    r"""Funk metric F(x, v) = alpha + beta on the open unit disc.

    alpha = sqrt((1-|x|^2)|v|^2 + <x,v>^2) / (1-|x|^2),  beta = <x,v> / (1-|x|^2).
    F(x, v) = |v| / |x - a| for the forward boundary hit a, so F >= 0 always
    and F(x, v) = 0 only for v = 0.
    """
    return _funk_arrays(x.array, _vec(v, 2))


def _funk_arrays(x: np.ndarray, v: np.ndarray) -> RandersValue:
    w = 1.0 - x @ x
    xv = x @ v
    al = math.sqrt(max(w * (v @ v) + xv * xv, 0.0)) / w
    return RandersValue(al, xv / w)


def eval_hilbert(x: DiscPoint, v: TangentVector) -> RandersValue:
    """Hilbert metric, the symmetrization (F(x,v) + F(x,-v)) / 2 = alpha_Funk."""
    val = eval_funk(x, v)
    return RandersValue(val.alpha, 0.0)


def _eval_fp(x: np.ndarray, v: np.ndarray) -> RandersValue:
    r2 = x @ x
    w = 1.0 - r2
    al = 2.0 * math.sqrt(v @ v) / w
    be = 4.0 * (x @ v) / (1.0 - r2 * r2)
    return RandersValue(al, be)


def w_field(x1: float, x2: float) -> np.ndarray:
    """Coefficient field of the FU one-form: w = (2 x1 x2, x2^2 - x1^2 - 4)."""
    return np.array([2.0 * x1 * x2, x2 * x2 - x1 * x1 - 4.0])


def _eval_fu(x: np.ndarray, v: np.ndarray) -> RandersValue:
    r2 = x @ x
    al = math.sqrt(v @ v) / x[1]
    be = (w_field(x[0], x[1]) @ v) / (x[1] * (4.0 + r2))
    return RandersValue(al, be)


def _eval_fb(x: np.ndarray, v: np.ndarray) -> RandersValue:
    e2 = math.exp(2.0 * x[0])
    c = math.cos(x[1])
    s = math.sin(x[1])
    al = math.sqrt(v @ v) / c
    be = ((e2 - 4.0) * v[0] * c + (e2 + 4.0) * v[1] * s) / ((e2 + 4.0) * c)
    return RandersValue(al, be)


def eval_lorentz(x: VectorLike, v: VectorLike) -> RandersValue:
    """Lorentz-type Randers form on the upper half space x3 > 0.

    F(x, v) = sqrt(v1^2 + v2^2 - v3^2) + v3 / x3.  Raises DomainError when the
    radicand is negative (the form only applies to spacelike directions) or
    when x3 <= 0.  The total may be negative off the hyperboloid tangents.
    """
    xa = _vec(x, 3) if not isinstance(x, ModelPoint) else x.array
    va = _vec(v, 3)
    if not xa[2] > 0.0:
        raise DomainError("eval_lorentz needs x3 > 0")
    q = va[0] * va[0] + va[1] * va[1] - va[2] * va[2]
    if q < 0.0:
        raise DomainError("direction is not spacelike: v1^2 + v2^2 < v3^2")
    return RandersValue(math.sqrt(q), va[2] / xa[2])


def eval_halfspace(x: VectorLike, v: VectorLike) -> RandersValue:
    """Deformed hyperbolic form F(x, v) = (|v| - v3) / x3 on x3 > 0."""
    xa = _vec(x, 3) if not isinstance(x, ModelPoint) else x.array
    va = _vec(v, 3)
    if not xa[2] > 0.0:
        raise DomainError("eval_halfspace needs x3 > 0")
    return RandersValue(math.sqrt(va @ va) / xa[2], -va[2] / xa[2])


def _eval_fuh(x: np.ndarray, v: np.ndarray) -> RandersValue:
    # tangent to x3^2 - x1^2 - x2^2 = 1: x3 v3 = x1 v1 + x2 v2
    if abs(x[2] * v[2] - x[0] * v[0] - x[1] * v[1]) > TOL_TANGENT:
        raise TangencyError("vector is not tangent to the hyperboloid sheet")
    q = max(v[0] * v[0] + v[1] * v[1] - v[2] * v[2], 0.0)
    return RandersValue(math.sqrt(q), v[2] / x[2])


def _eval_fus(x: np.ndarray, v: np.ndarray) -> RandersValue:
    if abs(x @ v) > TOL_TANGENT:
        raise TangencyError("vector is not tangent to the unit sphere")
    return RandersValue(math.sqrt(v @ v) / x[2], -v[2] / x[2])


def eval_model(p: ModelPoint, v: VectorLike) -> RandersValue:
    """Evaluate the model's own Randers metric at a chart point.

    FUH1/FUH2 take the Lorentz-type form restricted to hyperboloid tangents,
    FUS1/FUS2 the half-space form restricted to sphere tangents; off-tangent
    vectors raise TangencyError.  AMBIENT_HALFSPACE carries both ambient
    forms, so it is rejected here; use eval_lorentz or eval_halfspace.
    """
    m = p.model
    va = _vec(v, m.dim)
    x = p.array
    if m is ModelId.FF:
        return _funk_arrays(x, va)
    if m is ModelId.HILBERT:
        val = _funk_arrays(x, va)
        return RandersValue(val.alpha, 0.0)
    if m is ModelId.FP:
        return _eval_fp(x, va)
    if m is ModelId.FU:
        return _eval_fu(x, va)
    if m is ModelId.FB:
        return _eval_fb(x, va)
    if m in (ModelId.FUH1, ModelId.FUH2):
        return _eval_fuh(x, va)
    if m in (ModelId.FUS1, ModelId.FUS2):
        return _eval_fus(x, va)
    raise UnsupportedModel(
        "AMBIENT_HALFSPACE carries two metrics; call eval_lorentz or eval_halfspace"
    )


_POTENTIAL_MODELS = (ModelId.FF, ModelId.FP, ModelId.FU, ModelId.FB)


def potential(model: ModelId, x: ModelPoint) -> float:
    """Scalar potential whose differential is the model's one-form beta."""
    if model is not x.model:
        raise DomainError(f"point carries chart {x.model.name}, not {model.name}")
    if model not in _POTENTIAL_MODELS:
        raise UnsupportedModel(f"no potential is defined for {model.name}")
    c = x.coords
    r2 = c[0] * c[0] + c[1] * c[1]
    if model is ModelId.FF:
        return -0.5 * math.log1p(-r2)
    if model is ModelId.FP:
        return math.log((1.0 + r2) / (1.0 - r2))
    if model is ModelId.FU:
        return math.log((4.0 + r2) / c[1])
    return c[0] + math.log1p(4.0 * math.exp(-2.0 * c[0])) - math.log(math.cos(c[1]))


def fundamental_tensor(model: ModelId, x: ModelPoint, v: TangentVector) -> FundamentalTensor:
    """g_ij(x, v) = (1/2) d^2 F^2 / dv_i dv_j by Richardson-refined central differences.

    Defined for the planar charts FF, FP, FU, FB and HILBERT.  Positive
    definite exactly where the one-form norm is below 1.
    """
    if model is not x.model:
        raise DomainError(f"point carries chart {x.model.name}, not {model.name}")
    if model not in _POTENTIAL_MODELS and model is not ModelId.HILBERT:
        raise UnsupportedModel(f"fundamental tensor is not provided for {model.name}")
    va = _vec(v, 2)
    if va @ va == 0.0:
        raise ZeroVectorError("fundamental tensor is undefined at v = 0")

    def half_f2(u: np.ndarray) -> float:
        val = eval_model(x, u).total
        return 0.5 * val * val

    h = STEP_HESSIAN * max(1.0, math.sqrt(va @ va))
    g = fd_hessian(half_f2, va, h)
    return FundamentalTensor(g[0, 0], 0.5 * (g[0, 1] + g[1, 0]), g[1, 1])


def one_form_norm(model: ModelId, x: ModelPoint) -> float:
    """Norm of the drift one-form in the model's underlying Riemannian metric.

    Below 1 everywhere on each chart, which is exactly the Randers
    positive-definiteness condition.
    """
    if model is not x.model:
        raise DomainError(f"point carries chart {x.model.name}, not {model.name}")
    c = x.coords
    r2 = c[0] * c[0] + c[1] * c[1]
    if model is ModelId.FF:
        return math.sqrt(r2)
    if model is ModelId.FP:
        return 2.0 * math.sqrt(r2) / (1.0 + r2)
    if model is ModelId.FU:
        w = w_field(c[0], c[1])
        return math.sqrt(w @ w) / (4.0 + r2)
    if model is ModelId.FB:
        e2 = math.exp(2.0 * c[0])
        cc = math.cos(c[1])
        num = (e2 + 4.0) ** 2 - 16.0 * e2 * cc * cc
        return math.sqrt(max(num, 0.0)) / (e2 + 4.0)
    raise UnsupportedModel(f"one-form norm is not provided for {model.name}")
