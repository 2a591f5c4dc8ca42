"""Exception types shared across the package."""

from __future__ import annotations


class GeometryError(ValueError):
    """Base class for all domain and input errors raised by this package."""


class DomainError(GeometryError):
    """Input lies outside the mathematical domain of the operation."""


class TangencyError(GeometryError):
    """Vector is not tangent to the surface carrying the metric."""


class UnsupportedModel(GeometryError):
    """Operation is not defined for the requested model chart."""


class ZeroVectorError(GeometryError):
    """Operation requires a nonzero tangent vector."""


class ZeroCovectorError(GeometryError):
    """Operation requires a nonzero covector."""


class DegenerateError(GeometryError):
    """Two points coincide where a chord or ray is required."""


class NoIntersectionError(GeometryError):
    """A line or chord does not meet the open unit disc."""


class EmptyLevelSetError(GeometryError):
    """A horocycle level set does not meet the open unit disc."""


class OriginSingularityError(GeometryError):
    """Evaluation point is too close to a coordinate singularity."""
