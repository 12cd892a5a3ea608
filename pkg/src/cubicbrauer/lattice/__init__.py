"""
The Picard lattice of a cubic surface and cyclic group cohomology on lattices.
"""

from .cohomology import CohomologyResult, h0, h1_cyclic, joint_h0, restrict_action, tate_h0_cyclic
from .picard import LatticeAction, PicLattice, action_from_line_permutation, build_pic_lattice
from .snf import SmithForm, integer_kernel, smith_normal_form, solve_integer

__all__ = [
    "CohomologyResult",
    "h0",
    "h1_cyclic",
    "joint_h0",
    "restrict_action",
    "tate_h0_cyclic",
    "LatticeAction",
    "PicLattice",
    "action_from_line_permutation",
    "build_pic_lattice",
    "SmithForm",
    "integer_kernel",
    "smith_normal_form",
    "solve_integer",
]
