"""
Tests for the report models.
"""

import json

import pytest
from pydantic import ValidationError

from cubicbrauer.models.report import (
    SCHEMA_VERSION,
    AnalysisReport,
    CheckResult,
    ReductionRecord,
    SurveyReport,
    Verdict,
    dumps,
)


class TestReportModels:
    """Tests for validation and serialization of reports."""

    def setup_method(self) -> None:
        """Set up the test environment."""
        self.report = AnalysisReport(
            status="verdict",
            form="x^3 + y^3 + z^3 + 5*w^3",
            prime=5,
            precision=24,
            reduction=ReductionRecord(kind="cone-over-smooth-cubic", certificate="vertex",
                                      vertex=[0, 0, 0, 1], s=1, a="1", a_is_unit=True),
            checks=[CheckResult(name="h1-bound", anchor="cone-h1-bound", status="passed"),
                    CheckResult(name="vertex-no-lift", anchor="cone-vertex-no-lift",
                                status="skipped", detail="search space too large")],
            verdicts=[Verdict(key="cone-brauer-bound", statement="bounded",
                              anchor="cone-brauer-bound", cites=["h1-bound"])],
        )

    def test_json_round_trip(self) -> None:
        """Test that a dumped report validates back to an equal model."""
        text = dumps(self.report)
        assert json.loads(text)["schema_version"] == SCHEMA_VERSION
        assert AnalysisReport.model_validate_json(text) == self.report

    def test_check_lookup(self) -> None:
        """Test finding checks by name."""
        assert self.report.check("h1-bound").passed
        assert not self.report.check("vertex-no-lift").passed
        assert self.report.check("missing") is None

    def test_cone_verdict(self) -> None:
        """Test that the cone verdict follows the bound verdict."""
        assert self.report.cone_verdict
        bare = self.report.model_copy(update={"verdicts": []})
        assert not bare.cone_verdict

    def test_unknown_keys_rejected(self) -> None:
        """Test that reports forbid extra keys."""
        with pytest.raises(ValidationError):
            CheckResult(name="x", anchor="y", status="passed", extra_field=1)

    def test_status_values(self) -> None:
        """Test that statuses are restricted to the known values."""
        with pytest.raises(ValidationError):
            CheckResult(name="x", anchor="y", status="maybe")
        with pytest.raises(ValidationError):
            self.report.model_validate({**self.report.model_dump(), "status": "done"})

    def test_survey_nests_places(self) -> None:
        """Test that a survey carries its place reports through JSON."""
        survey = SurveyReport(form=self.report.form, primes=[5], places=[self.report],
                              obstruction_free=True, conclusion="none", witness_prime=5)
        data = json.loads(dumps(survey))
        assert data["places"][0]["reduction"]["vertex"] == [0, 0, 0, 1]
        assert SurveyReport.model_validate(data).places[0].cone_verdict
