"""
Report models for the analyzer and the command line.
"""

from .report import (
    SCHEMA_VERSION,
    AnalysisReport,
    CheckResult,
    CohomologyRecord,
    CurveRecord,
    LineRecord,
    LinesDump,
    ReductionRecord,
    SurveyReport,
    Verdict,
    dumps,
)

__all__ = [
    "SCHEMA_VERSION",
    "AnalysisReport",
    "CheckResult",
    "CohomologyRecord",
    "CurveRecord",
    "LineRecord",
    "LinesDump",
    "ReductionRecord",
    "SurveyReport",
    "Verdict",
    "dumps",
]
