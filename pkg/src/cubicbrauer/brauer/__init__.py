"""
Brauer group analysis: the flex map to the plane section, the F_3
surjectivity lemma and the analyzer service that assembles the verdicts.
"""

from .analyzer import (
    BrauerAnalyzer,
    ConePipeline,
    coplanarity_check,
    decomposition_h0,
    galois_action_on_pic,
    normalization_check,
    remark_triviality_condition,
    surjectivity_check,
)
from .flex_map import (
    FlexMap,
    KernelCheck,
    TorsionImageCheck,
    check_image_contains_three_torsion,
    check_kernel_tate_vanishes,
    flex_map,
)
from .linear_algebra import (
    PreimageOracle,
    SurjectivitySweep,
    dual_surjectivity,
    verify_surjectivity,
)

__all__ = [
    "BrauerAnalyzer",
    "ConePipeline",
    "coplanarity_check",
    "decomposition_h0",
    "galois_action_on_pic",
    "normalization_check",
    "remark_triviality_condition",
    "surjectivity_check",
    "FlexMap",
    "KernelCheck",
    "TorsionImageCheck",
    "check_image_contains_three_torsion",
    "check_kernel_tate_vanishes",
    "flex_map",
    "PreimageOracle",
    "dual_surjectivity",
    "SurjectivitySweep",
    "verify_surjectivity",
]
