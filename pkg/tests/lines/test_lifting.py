"""
Tests for Hensel lifting of lines to W[Pi].
"""

from cubicbrauer.brauer.analyzer import ConePipeline
from cubicbrauer.lines.lifting import hensel_lift_line, line_residual, pull_back_lines


class TestHenselLifting:
    """Tests for the lifted lines of the Fermat cone at 5."""

    def test_all_lines_lifted(self, fermat_pipeline: ConePipeline) -> None:
        """Test that all 27 lines lift and keep their reduction."""
        assert len(fermat_pipeline.lifted) == 27
        for cover, lifted in zip(fermat_pipeline.cover_lines, fermat_pipeline.lifted):
            assert lifted.residue_line.key() == cover.line.key()
            assert lifted.line.reduce().key() == cover.line.key()
            assert lifted.flex_index == cover.flex_index

    def test_lifted_lines_lie_on_smooth_model(self, fermat_pipeline: ConePipeline) -> None:
        """Test that the restricted form vanishes to the working precision."""
        for lifted in fermat_pipeline.lifted:
            assert line_residual(fermat_pipeline.smooth_form, lifted.line) >= \
                fermat_pipeline.precision // 2

    def test_quadratic_convergence(self, fermat_pipeline: ConePipeline) -> None:
        """Test that Newton's method needs only a handful of steps."""
        assert max(item.iterations for item in fermat_pipeline.lifted) <= 8

    def test_lift_to_lower_precision(self, fermat_pipeline: ConePipeline) -> None:
        """Test lifting one line to a smaller target precision."""
        lifted = hensel_lift_line(fermat_pipeline.cover_lines[0], fermat_pipeline.smooth_form, 4)
        assert lifted.line.reduce().key() == fermat_pipeline.cover_lines[0].line.key()
        assert lifted.iterations <= fermat_pipeline.lifted[0].iterations

    def test_cone_lines_reduce_through_vertex(self, fermat_pipeline: ConePipeline) -> None:
        """Test that each line of the cone model reduces to a line through (0:0:0:1)."""
        assert len(fermat_pipeline.x_lines) == 27
        for line in fermat_pipeline.x_lines:
            c = line.reduce().coords
            assert c[0].is_zero() and c[1].is_zero() and c[3].is_zero()

    def test_pull_back_lines(self, fermat_pipeline: ConePipeline) -> None:
        """Test that pulling back again gives the cone lines of the pipeline."""
        pulled = pull_back_lines(fermat_pipeline.lifted, fermat_pipeline.nf.s)
        assert [line.reduce().key() for line in pulled] == \
            [line.reduce().key() for line in fermat_pipeline.x_lines]
