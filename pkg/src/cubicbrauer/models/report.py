"""
Report models for the analyzer and the command line.

Every model is a pydantic model so that reports serialize to JSON and
validate back to an equal structure. Group invariants are integer lists;
field elements are written as polynomials in t.
"""

from typing import Literal

from pydantic import BaseModel, ConfigDict, Field

SCHEMA_VERSION = 1

CheckStatus = Literal["passed", "failed", "skipped"]
ReportStatus = Literal["verdict", "theorem-inapplicable", "classified-only"]


class ReportModel(BaseModel):
    """Base for every report model: unknown keys are rejected."""

    model_config = ConfigDict(extra="forbid")


class CheckResult(ReportModel):
    """One machine-checked condition."""

    name: str
    anchor: str  # descriptive key of the statement the check supports
    status: CheckStatus
    detail: str = ""

    @property
    def passed(self) -> bool:
        return self.status == "passed"


class Verdict(ReportModel):
    key: str
    statement: str
    anchor: str
    cites: list[str] = Field(default_factory=list)  # names of the checks it rests on


class ReductionRecord(ReportModel):
    kind: str
    certificate: str
    vertex: list[int] | None = None
    base_curve: str | None = None
    s: int | None = None
    a: str | None = None
    a_is_unit: bool | None = None
    transform: list[list[int]] | None = None
    scalings: int = 0


class CurveRecord(ReportModel):
    curve: str
    field_order: int
    point_count: int
    invariants: list[int]
    flexes: list[str] = Field(default_factory=list)
    flex_degrees: list[int] = Field(default_factory=list)
    three_torsion_order: int | None = None


class CohomologyRecord(ReportModel):
    h0_rank: int
    h0_basis: list[list[int]]
    h1_invariants: list[int]
    tate_h0: list[int] = Field(default_factory=list)
    decomposition_h0_rank: int | None = None
    action_matrix: list[list[int]] = Field(default_factory=list)
    sigma_cycles: list[list[int]] = Field(default_factory=list)
    frobenius_cycles: list[list[int]] = Field(default_factory=list)


class LineRecord(ReportModel):
    index: int
    label: str  # abstract label E_i, F_ij or G_i
    flex: str
    residue_degree: int
    smooth_model_reduction: list[str]  # Pluecker vector on the smooth model mod Pi
    cone_reduction: list[str]  # Pluecker vector on the cone model mod Pi
    input_reduction: list[str]  # the same line in the input coordinates
    residual_valuation: int


class LinesDump(ReportModel):
    schema_version: int = SCHEMA_VERSION
    form: str
    prime: int
    precision: int
    field_order: int
    lines: list[LineRecord]
    triples: list[list[int]]
    sigma_cycles: list[list[int]]


class AnalysisReport(ReportModel):
    schema_version: int = SCHEMA_VERSION
    status: ReportStatus
    form: str
    prime: int
    precision: int
    reduction: ReductionRecord
    curve: CurveRecord | None = None
    cohomology: CohomologyRecord | None = None
    checks: list[CheckResult] = Field(default_factory=list)
    verdicts: list[Verdict] = Field(default_factory=list)
    notes: list[str] = Field(default_factory=list)
    timings: dict[str, float] = Field(default_factory=dict)

    def check(self, name: str) -> CheckResult | None:
        return next((c for c in self.checks if c.name == name), None)

    @property
    def cone_verdict(self) -> bool:
        return any(v.key == "cone-brauer-bound" for v in self.verdicts)


class SurveyReport(ReportModel):
    schema_version: int = SCHEMA_VERSION
    form: str
    primes: list[int]
    places: list[AnalysisReport]
    obstruction_free: bool
    conclusion: str
    witness_prime: int | None = None


def dumps(model: BaseModel) -> str:
    """JSON text of a report with stable key order."""
    return model.model_dump_json(indent=2)
