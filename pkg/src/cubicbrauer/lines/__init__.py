"""
The 27 lines: construction on the smooth triple cover, lifting, pull-back
to the cone model and the Galois permutations they carry.
"""

from .configuration import (
    LineTriple,
    frobenius_permutation,
    group_into_triples,
    identify_configuration,
    incidence_matrix,
    sigma_action,
    transport_permutation,
)
from .lifting import LiftedLine, hensel_lift_line, line_residual, pull_back_lines
from .plucker import ProjectiveLine, lines_meet, plucker
from .triple_cover import (
    CoverLine,
    construct_smooth_cover_model,
    lines_on_triple_cover,
    working_field,
)

__all__ = [
    "LineTriple",
    "frobenius_permutation",
    "group_into_triples",
    "identify_configuration",
    "incidence_matrix",
    "sigma_action",
    "transport_permutation",
    "LiftedLine",
    "hensel_lift_line",
    "line_residual",
    "pull_back_lines",
    "ProjectiveLine",
    "lines_meet",
    "plucker",
    "CoverLine",
    "construct_smooth_cover_model",
    "lines_on_triple_cover",
    "working_field",
]
