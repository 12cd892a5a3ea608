"""
Tests for the 27 lines of the smooth triple cover.
"""

from collections import Counter
from dataclasses import replace

import pytest

from cubicbrauer.brauer.analyzer import ConePipeline
from cubicbrauer.curve.plane_cubic import PlaneCubic
from cubicbrauer.errors import SDivisibilityError, UnitConditionError
from cubicbrauer.lines.configuration import incidence_matrix
from cubicbrauer.lines.triple_cover import (
    construct_smooth_cover_model,
    lines_on_triple_cover,
    omega_residue,
    triple_cover_form,
    working_field,
)


class TestWorkingField:
    """Tests for working_field."""

    def test_contains_flexes(self, fermat_curve_mod5: PlaneCubic) -> None:
        """Test that the lines of x^3 + y^3 + z^3 + w^3 need a proper extension of F_5."""
        field = working_field(fermat_curve_mod5, 1)
        assert field.p == 5
        assert field.k % 2 == 0
        assert (field.order - 1) % 3 == 0

    def test_a_must_be_unit(self, fermat_curve_mod5: PlaneCubic) -> None:
        """Test that a multiple of p is rejected as the Y3^3 coefficient."""
        with pytest.raises(UnitConditionError):
            working_field(fermat_curve_mod5, 10)


class TestLinesOnTripleCover:
    """Tests for lines_on_triple_cover."""

    def test_three_lines_per_flex(self, fermat_curve_mod5: PlaneCubic) -> None:
        """Test that the 27 lines fall three to a flex and are distinct."""
        lines = lines_on_triple_cover(fermat_curve_mod5, 1)
        assert len(lines) == 27
        assert set(Counter(item.flex_index for item in lines).values()) == {3}
        assert len({item.line.key() for item in lines}) == 27

    def test_lines_lie_on_cover(self, fermat_curve_mod5: PlaneCubic) -> None:
        """Test that each line restricts the cover form to zero."""
        lines = lines_on_triple_cover(fermat_curve_mod5, 2)
        field = lines[0].line.coords[0].field
        cover = triple_cover_form(fermat_curve_mod5.over(field), field(2))
        for item in lines:
            assert all(c.is_zero() for c in cover.restrict_to_line(*item.line.rows))

    def test_incidence_degrees(self, fermat_pipeline: ConePipeline) -> None:
        """Test that every line meets exactly ten of the others."""
        incidence = incidence_matrix([item.line for item in fermat_pipeline.cover_lines])
        assert [sum(row) for row in incidence] == [10] * 27

    def test_omega_is_primitive(self, fermat_pipeline: ConePipeline) -> None:
        """Test that the chosen residue of omega has order three."""
        omega = omega_residue(fermat_pipeline.field)
        assert not omega.is_one()
        assert (omega**3).is_one()


class TestSmoothCoverModel:
    """Tests for construct_smooth_cover_model."""

    def test_reduces_to_triple_cover(self, fermat_pipeline: ConePipeline) -> None:
        """Test that the smooth model reduces to x^3 + y^3 + z^3 + w^3."""
        form = fermat_pipeline.smooth_form
        one = fermat_pipeline.field.one
        for exps in [(3, 0, 0, 0), (0, 3, 0, 0), (0, 0, 3, 0), (0, 0, 0, 3)]:
            assert form.coefficient(exps).reduce() == one
        assert len(form.terms) == 4

    def test_s_divisible_by_three(self, fermat_pipeline: ConePipeline) -> None:
        """Test that s = 3 is rejected."""
        nf = replace(fermat_pipeline.nf, s=3)
        with pytest.raises(SDivisibilityError):
            construct_smooth_cover_model(nf, fermat_pipeline.ring)
