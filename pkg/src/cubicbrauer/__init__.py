"""
cubicbrauer - Brauer-Manin analysis of cubic surfaces over Q.

This package classifies the reduction of a cubic surface at a prime and,
for a cone over a smooth plane cubic, computes the Galois action on the 27
lines over a ramified cubic extension, its cohomology on the Picard
lattice, and the local verdicts that follow from it.
"""

from .brauer import BrauerAnalyzer
from .config import CubicBrauerConfig
from .errors import CubicBrauerError, TheoremInapplicableError
from .models import AnalysisReport, SurveyReport
from .parsing import parse_cubic_form

__version__ = "0.1.0"

__all__ = [
    "BrauerAnalyzer",
    "CubicBrauerConfig",
    "CubicBrauerError",
    "TheoremInapplicableError",
    "AnalysisReport",
    "SurveyReport",
    "parse_cubic_form",
]
