"""
Flat models, reduction types and the cone normal form.
"""

from .cone import (
    ConeNormalForm,
    GoodReductionCertificate,
    VertexCheckResult,
    cone_normal_form,
    good_plane_section,
    is_good_plane,
    reduce_fully,
    reduce_s,
    vertex_no_lift_check,
)
from .surface import (
    CubicSurfaceModel,
    ReductionKind,
    ReductionType,
    candidate_primes,
    classify_reduction,
    is_smooth_surface,
    normalize_flat,
)

__all__ = [
    "ConeNormalForm",
    "GoodReductionCertificate",
    "VertexCheckResult",
    "cone_normal_form",
    "good_plane_section",
    "is_good_plane",
    "reduce_fully",
    "reduce_s",
    "vertex_no_lift_check",
    "CubicSurfaceModel",
    "ReductionKind",
    "ReductionType",
    "candidate_primes",
    "classify_reduction",
    "is_smooth_surface",
    "normalize_flat",
]
