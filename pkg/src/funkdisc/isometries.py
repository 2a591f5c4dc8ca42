r"""Isometries between the model charts, with inverses and differentials.

Eight maps are provided.  Five leave the Funk disc: eta onto the hyperboloid
graph FUH1, psi onto the hemisphere graph FUS1, xi onto the band FB, f onto
the Finsler-Poincare disc FP, and g onto the upper half plane FU.  Two leave
the Finsler-Poincare disc: pi onto FUH2 and sigma onto FUS2.  The map phi
carries the band FB onto FU and factors g = phi o xi.

Each map pulls the target metric back to the source metric, which is what
pullback_residual measures: |F_target(map(x), Dmap_x v) - F_source(x, v)|.
Differentials are closed-form Jacobians, not finite differences.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Union

import numpy as np

from .errors import DomainError
from .metrics import DiscPoint, ModelId, ModelPoint, TangentVector, eval_model

TOL_ISO = 1e-10


class IsometryId(Enum):
    ETA = "eta"        # FF -> FUH1
    PI = "pi"          # FP -> FUH2
    PSI = "psi"        # FF -> FUS1
    SIGMA = "sigma"    # FP -> FUS2
    XI = "xi"          # FF -> FB
    PHI = "phi"        # FB -> FU
    F_MAP = "f"        # FF -> FP
    G_MAP = "g"        # FF -> FU

    @property
    def source(self) -> ModelId:
        return _ENDPOINTS[self][0]

    @property
    def target(self) -> ModelId:
        return _ENDPOINTS[self][1]


_ENDPOINTS = {
    IsometryId.ETA: (ModelId.FF, ModelId.FUH1),
    IsometryId.PI: (ModelId.FP, ModelId.FUH2),
    IsometryId.PSI: (ModelId.FF, ModelId.FUS1),
    IsometryId.SIGMA: (ModelId.FP, ModelId.FUS2),
    IsometryId.XI: (ModelId.FF, ModelId.FB),
    IsometryId.PHI: (ModelId.FB, ModelId.FU),
    IsometryId.F_MAP: (ModelId.FF, ModelId.FP),
    IsometryId.G_MAP: (ModelId.FF, ModelId.FU),
}


@dataclass(frozen=True)
class Differential:
    """Jacobian of a chart map at a point, rows indexed by target coordinates."""

    rows: tuple

    @property
    def array(self) -> np.ndarray:
        return np.array(self.rows)

    def push(self, v: TangentVector) -> np.ndarray:
        return self.array @ v.array


PointLike = Union[ModelPoint, DiscPoint]


def _source_point(iso: IsometryId, x: PointLike) -> np.ndarray:
    src = iso.source
    if isinstance(x, DiscPoint):
        if src not in (ModelId.FF, ModelId.FP):
            raise DomainError(f"{iso.name} expects a {src.name} chart point")
        return x.array
    if x.model is not src:
        raise DomainError(f"{iso.name} maps from {src.name}, got {x.model.name}")
    return x.array


def _target_point(iso: IsometryId, y: ModelPoint) -> np.ndarray:
    if y.model is not iso.target:
        raise DomainError(f"{iso.name} inverse maps from {iso.target.name}, got {y.model.name}")
    return y.array


def apply(iso: IsometryId, x: PointLike) -> ModelPoint:
    """Forward map into the target chart."""
    a = _source_point(iso, x)
    x1, x2 = a[0], a[1]
    r2 = x1 * x1 + x2 * x2
    s = math.sqrt(1.0 - r2) if r2 < 1.0 else 0.0
    if iso is IsometryId.ETA:
        c = (x1 / s, x2 / s, 1.0 / s)
    elif iso is IsometryId.PI:
        d = 1.0 - r2
        c = (2.0 * x1 / d, 2.0 * x2 / d, (1.0 + r2) / d)
    elif iso is IsometryId.PSI:
        c = (x1, x2, s)
    elif iso is IsometryId.SIGMA:
        e = 1.0 + r2
        c = (2.0 * x1 / e, 2.0 * x2 / e, (1.0 - r2) / e)
    elif iso is IsometryId.XI:
        c = (0.5 * math.log(4.0 * (1.0 - x1) / (1.0 + x1)), -math.atan2(x2, s))
    elif iso is IsometryId.PHI:
        ex = math.exp(x1)
        c = (-ex * math.sin(x2), ex * math.cos(x2))
    elif iso is IsometryId.F_MAP:
        c = (x1 / (1.0 + s), x2 / (1.0 + s))
    else:  # G_MAP
        c = (2.0 * x2 / (1.0 + x1), 2.0 * s / (1.0 + x1))
    return ModelPoint(iso.target, c)


def apply_inverse(iso: IsometryId, y: ModelPoint) -> ModelPoint:
    """Inverse map back into the source chart."""
    a = _target_point(iso, y)
    if iso is IsometryId.ETA:
        c = (a[0] / a[2], a[1] / a[2])
    elif iso in (IsometryId.PI, IsometryId.SIGMA):
        c = (a[0] / (1.0 + a[2]), a[1] / (1.0 + a[2]))
    elif iso is IsometryId.PSI:
        c = (a[0], a[1])
    elif iso is IsometryId.XI:
        e2 = math.exp(2.0 * a[0])
        den = 4.0 + e2
        c = ((4.0 - e2) / den, -4.0 * math.exp(a[0]) * math.sin(a[1]) / den)
    elif iso is IsometryId.PHI:
        r2 = a[0] * a[0] + a[1] * a[1]
        c = (0.5 * math.log(r2), -math.atan2(a[0], a[1]))
    elif iso is IsometryId.F_MAP:
        r2 = a[0] * a[0] + a[1] * a[1]
        c = (2.0 * a[0] / (1.0 + r2), 2.0 * a[1] / (1.0 + r2))
    else:  # G_MAP
        r2 = a[0] * a[0] + a[1] * a[1]
        c = ((4.0 - r2) / (4.0 + r2), 4.0 * a[0] / (4.0 + r2))
    return ModelPoint(iso.source, c)


def differential(iso: IsometryId, x: PointLike) -> Differential:
    """Closed-form Jacobian of the forward map at x."""
    a = _source_point(iso, x)
    x1, x2 = a[0], a[1]
    r2 = x1 * x1 + x2 * x2
    s = math.sqrt(1.0 - r2) if r2 < 1.0 else 0.0
    if iso is IsometryId.ETA:
        s3 = s * s * s
        rows = (
            ((1.0 - x2 * x2) / s3, x1 * x2 / s3),
            (x1 * x2 / s3, (1.0 - x1 * x1) / s3),
            (x1 / s3, x2 / s3),
        )
    elif iso is IsometryId.PI:
        d = 1.0 - r2
        f = 2.0 / (d * d)
        rows = (
            (f * (d + 2.0 * x1 * x1), f * 2.0 * x1 * x2),
            (f * 2.0 * x1 * x2, f * (d + 2.0 * x2 * x2)),
            (f * 2.0 * x1, f * 2.0 * x2),
        )
    elif iso is IsometryId.PSI:
        rows = ((1.0, 0.0), (0.0, 1.0), (-x1 / s, -x2 / s))
    elif iso is IsometryId.SIGMA:
        e = 1.0 + r2
        f = 2.0 / (e * e)
        rows = (
            (f * (e - 2.0 * x1 * x1), -f * 2.0 * x1 * x2),
            (-f * 2.0 * x1 * x2, f * (e - 2.0 * x2 * x2)),
            (-f * 2.0 * x1, -f * 2.0 * x2),
        )
    elif iso is IsometryId.XI:
        u = 1.0 - x1 * x1
        rows = ((-1.0 / u, 0.0), (-x1 * x2 / (u * s), -1.0 / s))
    elif iso is IsometryId.PHI:
        ex = math.exp(x1)
        sn = math.sin(x2)
        cs = math.cos(x2)
        rows = ((-ex * sn, -ex * cs), (ex * cs, -ex * sn))
    elif iso is IsometryId.F_MAP:
        p = 1.0 + s
        q = s * p * p
        rows = (
            (1.0 / p + x1 * x1 / q, x1 * x2 / q),
            (x1 * x2 / q, 1.0 / p + x2 * x2 / q),
        )
    else:  # G_MAP
        p = 1.0 + x1
        rows = (
            (-2.0 * x2 / (p * p), 2.0 / p),
            (-2.0 * (p - x2 * x2) / (s * p * p), -2.0 * x2 / (s * p)),
        )
    return Differential(rows)


def pullback_residual(iso: IsometryId, x: PointLike, v: TangentVector) -> float:
    """|F_target(apply(x), Dmap v) - F_source(x, v)|, zero for an isometry."""
    a = _source_point(iso, x)
    src = ModelPoint(iso.source, (a[0], a[1]))
    f_src = eval_model(src, v).total
    pushed = differential(iso, x).push(v)
    f_tgt = eval_model(apply(iso, x), pushed).total
    return abs(f_tgt - f_src)
