"""
Plane cubics over finite fields: smoothness, flexes and the group law.
"""

from .group import (
    CurveGroup,
    Subgroup,
    flex_difference_subgroup,
    group_structure,
    origin_degree,
    span_with_witnesses,
    three_torsion,
)
from .plane_cubic import (
    CurvePoint,
    PlaneCubic,
    SmoothnessCertificate,
    flexes,
    hessian,
    is_smooth,
    point_count,
    projective_common_zeros,
    rational_points,
)

__all__ = [
    "CurveGroup",
    "Subgroup",
    "flex_difference_subgroup",
    "group_structure",
    "origin_degree",
    "span_with_witnesses",
    "three_torsion",
    "CurvePoint",
    "PlaneCubic",
    "SmoothnessCertificate",
    "flexes",
    "hessian",
    "is_smooth",
    "point_count",
    "projective_common_zeros",
    "rational_points",
]
