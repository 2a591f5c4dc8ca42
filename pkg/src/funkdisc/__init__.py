"""Funk and Hilbert geometry of the unit disc.

Metric evaluation in eight model charts, the isometries between them,
exact geodesics and distances, Busemann functions with their horocycles,
and weighted Laplacians for the standard Finsler volume forms.
"""

from .busemann import (
    BusemannField,
    HorocycleLevel,
    MetricType,
    busemann_gradient_covector,
    busemann_truncated,
    busemann_value,
    horocycle_points,
)
from .errors import (
    DegenerateError,
    DomainError,
    EmptyLevelSetError,
    GeometryError,
    NoIntersectionError,
    OriginSingularityError,
    TangencyError,
    UnsupportedModel,
    ZeroCovectorError,
    ZeroVectorError,
)
from .geodesics import (
    BoundaryPoint,
    Chord,
    FunkRay,
    GeodesicClass,
    GeodesicKind,
    HilbertLine,
    backward_hit,
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
from .isometries import (
    Differential,
    IsometryId,
    apply,
    apply_inverse,
    differential,
    pullback_residual,
)
from .laplace import (
    HILBERT_BUSEMANN_LAPLACIAN,
    DualTensor,
    DualValue,
    MeasureKind,
    dual_funk,
    dual_tensor,
    gradient,
    laplacian_busemann,
    laplacian_fd_oracle,
    mean_curvature_sphere,
    volume_density,
    volume_density_from_norm,
)
from .metrics import (
    Covector,
    DiscPoint,
    FundamentalTensor,
    ModelId,
    ModelPoint,
    RandersValue,
    TangentVector,
    eval_funk,
    eval_halfspace,
    eval_hilbert,
    eval_lorentz,
    eval_model,
    fundamental_tensor,
    one_form_norm,
    potential,
    w_field,
)
from .verify import VerificationReport, run_suite

__version__ = "0.1.0"

__all__ = [
    "BoundaryPoint",
    "BusemannField",
    "Chord",
    "Covector",
    "DegenerateError",
    "Differential",
    "DiscPoint",
    "DomainError",
    "DualTensor",
    "DualValue",
    "EmptyLevelSetError",
    "FundamentalTensor",
    "FunkRay",
    "GeodesicClass",
    "GeodesicKind",
    "GeometryError",
    "HILBERT_BUSEMANN_LAPLACIAN",
    "HilbertLine",
    "HorocycleLevel",
    "IsometryId",
    "MeasureKind",
    "MetricType",
    "ModelId",
    "ModelPoint",
    "NoIntersectionError",
    "OriginSingularityError",
    "RandersValue",
    "TangencyError",
    "TangentVector",
    "UnsupportedModel",
    "VerificationReport",
    "ZeroCovectorError",
    "ZeroVectorError",
    "apply",
    "apply_inverse",
    "backward_hit",
    "busemann_gradient_covector",
    "busemann_truncated",
    "busemann_value",
    "chord_through",
    "classify_image",
    "differential",
    "dual_funk",
    "dual_tensor",
    "eval_funk",
    "eval_halfspace",
    "eval_hilbert",
    "eval_lorentz",
    "eval_model",
    "forward_hit",
    "fundamental_tensor",
    "funk_distance",
    "funk_geodesic",
    "funk_velocity",
    "gradient",
    "hilbert_distance",
    "hilbert_geodesic",
    "hilbert_velocity",
    "horocycle_points",
    "lambda_roots",
    "laplacian_busemann",
    "laplacian_fd_oracle",
    "mean_curvature_sphere",
    "one_form_norm",
    "potential",
    "pullback_residual",
    "run_suite",
    "volume_density",
    "volume_density_from_norm",
    "w_field",
]
